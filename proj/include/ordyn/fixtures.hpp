#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ordyn/continuity.hpp"
#include "ordyn/map_dsl.hpp"
#include "ordyn/ultrafilter.hpp"

namespace ordyn::fixtures {

struct FixtureMetadata {
    bool accumulation_points_periodic = false;
    bool all_points_eventually_periodic = false;
    std::string notes;
};

// A built-in space/map pair with validated metadata and an optional exact
// continuity certifier.
struct Fixture {
    std::string name;
    SpaceSpec space;
    MapSpec map;
    FixtureMetadata metadata;
    std::shared_ptr<const ContinuityCertifier> certifier;

    DynMap as_map() const { return map.as_map(name); }
    std::string to_dynmap() const;
};

// The column-cycle system on [0, w^2]: prime columns are cycles, everything
// else drains into the fixed top point. Every point is eventually periodic
// but the rank-1 points are strictly pre-periodic.
Fixture example_omega2();

// Encoding of the omega^2 example's strata (m, n >= 1):
//   isolated grid point (column m, index n)  <->  w*(m-1) + (n-1)
//   rank-1 limit of column m                 <->  w*m
//   top point                                <->  w^2
Point omega2_isolated(std::uint32_t m, std::uint32_t n);
Point omega2_limit(std::uint32_t m);
Point omega2_top();

// Exact image of f^p on the omega2 fixture from the column-cycle structure;
// agrees with p_iterate_point everywhere.
Point closed_form_p_iterate(const ResidueSystem& p, const Point& x);

// Small systems on [0, w] and [0, w*2]:
//   two_endpoint_shift: f(w)=w, f(0)=0, f(k)=k-1  (orbits pile on two fixed points)
//   forward_shift:      f(w)=w, f(k)=k+1          (every free iterate is constant w)
//   identity_fixture:   x -> x
//   swap_cycle:         two limit points swapped, isolated 2-cycles underneath
Fixture two_endpoint_shift();
Fixture forward_shift();
Fixture identity_fixture();
Fixture swap_cycle();
std::vector<Fixture> counterexamples();

// Random systems whose accumulation points are all periodic.
Fixture random_finite_xprime_fixture(std::uint64_t seed);  // [0, w*K + F], finite X'
Fixture random_periodic_fixture(std::uint64_t seed);       // [0, w^2*A], A <= 3

Fixture by_name(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace ordyn::fixtures
