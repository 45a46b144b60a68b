#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ordyn/dynamics.hpp"
#include "ordyn/map_dsl.hpp"
#include "ordyn/ultrafilter.hpp"

namespace ordyn {

// A function restricted to a finite truncation: parallel domain/value lists,
// domain sorted ascending.
struct IterateTable {
    std::vector<Point> domain;
    std::vector<Point> values;
    std::string provenance;

    const Point& value_at(const Point& x) const;
    bool same_function(const IterateTable& other) const;  // ignores provenance

    // `[{"point": "w*4+2", "value": "w^2"}, ...]`, domain order.
    std::string to_json() const;
    std::string to_csv() const;
};

using PIterateResult = std::variant<Point, Unresolved>;

// f^p(x) through the orbit record:
//   EventuallyPeriodic(m, n): f^(m + ((r_n - m) mod n))(x)
//   ConvergesToCycle(y, l, i): f^((i + r_l) mod l)(y)
// The first formula is validated against brute_force_p_iterate by the tests.
PIterateResult p_iterate_point(const DynMap& f, const ResidueSystem& p, const Point& x,
                               std::uint64_t budget = kDefaultOrbitBudget);
PIterateResult p_iterate_point(OrbitAnalyzer& orbits, const ResidueSystem& p, const Point& x);

// Literal-iteration oracle: picks k >= max(k_min, transient) with
// k == residue (mod period), returns f^k(x), and cross-checks k + period.
// Requires an eventually periodic orbit.
Point brute_force_p_iterate(const DynMap& f, const ResidueSystem& p, const Point& x,
                            std::uint64_t k_min = 0,
                            std::uint64_t budget = kDefaultOrbitBudget);

struct PartialTableError : Error {
    PartialTableError(std::string msg, std::vector<Point> points)
        : Error(std::move(msg)), unresolved_points(std::move(points)) {}
    std::vector<Point> unresolved_points;
};

IterateTable p_iterate_table(const DynMap& f, const ResidueSystem& p,
                             const std::vector<Point>& truncation,
                             std::uint64_t budget = kDefaultOrbitBudget);
IterateTable finite_iterate_table(const DynMap& f, std::uint32_t n,
                                  const std::vector<Point>& truncation);

// outer(inner(x)) on inner's domain; inner's values must lie in outer's domain.
IterateTable compose_tables(const IterateTable& outer, const IterateTable& inner);

struct SemigroupElement {
    IterateTable table;
    std::vector<std::uint32_t> finite_reps;  // n with f^n equal to this table
    std::vector<std::uint64_t> free_reps;    // residues r mod modulus realizing it
};

struct SemigroupTable {
    std::vector<SemigroupElement> elements;
    std::vector<std::vector<std::uint32_t>> composition;  // [i][j] = index of e_i o e_j
    std::uint64_t modulus = 1;   // lcm of the periods on the truncation
    std::uint32_t horizon = 0;   // max transient + modulus
    bool closed = false;

    std::size_t free_only_count() const;   // elements not equal to any finite iterate
    std::size_t free_count() const;        // elements with at least one free realization
};

// Enumerates the restriction of the Ellis semigroup to an f-closed truncation:
// finite iterates f^1..f^horizon plus f^p over all residue traces mod the lcm
// of the periods present, with the composition table verified closed.
SemigroupTable semigroup_table(const DynMap& f, const std::vector<Point>& truncation,
                               std::uint64_t moduli_bound,
                               std::uint64_t budget = kDefaultOrbitBudget);

}  // namespace ordyn
