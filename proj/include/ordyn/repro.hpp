#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordyn::repro {

struct CriterionResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 2026;
};

// The acceptance criteria of the omega2 reproduction suite. Each runner is
// self-contained and deterministic for a fixed seed.
CriterionResult run_A1_oracle_equivalence(const Options& opts = {});
CriterionResult run_A2_semigroup_law(const Options& opts = {});
CriterionResult run_A3_power_law(const Options& opts = {});
CriterionResult run_A4_crt(const Options& opts = {});
CriterionResult run_A5_discontinuity_at_top(const Options& opts = {});
CriterionResult run_A6_continuity_of_half_rule(const Options& opts = {});
CriterionResult run_A7_orbit_table(const Options& opts = {});
CriterionResult run_A8_dichotomy(const Options& opts = {});
CriterionResult run_A9_set_convergence(const Options& opts = {});

// A1..A7 (the CLI reproduction set) or A1..A9 (the full acceptance gate).
std::vector<CriterionResult> run_suite(bool include_generator_criteria, const Options& opts = {});

std::string format_line(const CriterionResult& r);

}  // namespace ordyn::repro
