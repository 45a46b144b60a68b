#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ordyn/map_dsl.hpp"
#include "ordyn/ordinal.hpp"

namespace ordyn {

inline constexpr std::uint64_t kDefaultOrbitBudget = 100000;

// Finite orbit: f^transient(x) is the first periodic point, with the given
// period; listing holds the transient+period distinct points from x.
struct EventuallyPeriodic {
    std::uint32_t transient;
    std::uint32_t period;
    std::vector<Point> listing;
};

// Infinite orbit with f^(period*k)(x) -> f^phase(cycle_point); cycle_point is
// periodic with exactly this period.
struct ConvergesToCycle {
    Point cycle_point;
    std::uint32_t period;
    std::uint32_t phase;
    std::uint32_t evidence_depth;
};

struct Unresolved {
    std::uint64_t budget;
};

struct OrbitRecord {
    std::variant<EventuallyPeriodic, ConvergesToCycle, Unresolved> kind;

    bool eventually_periodic() const { return std::holds_alternative<EventuallyPeriodic>(kind); }
    bool converges_to_cycle() const { return std::holds_alternative<ConvergesToCycle>(kind); }
    bool unresolved() const { return std::holds_alternative<Unresolved>(kind); }
    const EventuallyPeriodic& ep() const { return std::get<EventuallyPeriodic>(kind); }
    const ConvergesToCycle& ctc() const { return std::get<ConvergesToCycle>(kind); }
};

OrbitRecord orbit_analyze(const DynMap& f, const Point& x,
                          std::uint64_t budget = kDefaultOrbitBudget);

// Memoizing wrapper used by table/scan code paths.
class OrbitAnalyzer {
public:
    OrbitAnalyzer(DynMap f, std::uint64_t budget = kDefaultOrbitBudget)
        : f_(std::move(f)), budget_(budget) {}

    const OrbitRecord& analyze(const Point& x);
    const DynMap& map() const { return f_; }
    std::uint64_t budget() const { return budget_; }

private:
    DynMap f_;
    std::uint64_t budget_;
    std::unordered_map<Point, OrbitRecord, PointHash> memo_;
};

// The omega-limit set, when the orbit resolves: the periodic cycle reached
// (EventuallyPeriodic) or the orbit of the limit cycle point (ConvergesToCycle).
std::variant<std::vector<Point>, Unresolved> omega_limit(
    const DynMap& f, const Point& x, std::uint64_t budget = kDefaultOrbitBudget);

struct SetConvergenceWitness {
    std::uint32_t index;        // family index k
    Point orbit_point;          // point of O(x_k) outside the neighborhood
    std::uint32_t tail_index;   // j of the violated basic neighborhood
};

struct SetConvergenceResult {
    bool converged;
    std::uint32_t depth;
    std::optional<SetConvergenceWitness> witness;
};

// Set convergence O(x_k) -> target against the basic neighborhoods
// V_j = union of the j-th tails of the target's members, depth-bounded with
// the same window/late-threshold discipline as converges_to. Requires every
// sampled orbit to resolve as eventually periodic (throws Error otherwise).
SetConvergenceResult orbit_set_converges(const DynMap& f, const PointFamily& family,
                                         const std::vector<Point>& target,
                                         std::uint32_t depth,
                                         std::uint64_t budget = kDefaultOrbitBudget);

}  // namespace ordyn
