// Acceptance gate: one test case per criterion, each printing a PASS/FAIL
// line with the measured detail. A criterion failure here is a statement
// about the mathematics of the checked identity, not an expected-output
// mismatch; see the printed detail.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "ordyn/repro.hpp"

using namespace ordyn::repro;

namespace {

CriterionResult report(CriterionResult r) {
    std::cout << format_line(r) << std::endl;
    return r;
}

}  // namespace

TEST_SUITE("acceptance") {

TEST_CASE("A1 p-iterate oracle equivalence") {
    const CriterionResult r = report(run_A1_oracle_equivalence());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A2 semigroup law over all residue traces") {
    const CriterionResult r = report(run_A2_semigroup_law());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A3 power law as stated") {
    const CriterionResult r = report(run_A3_power_law());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A4 congruence solver") {
    const CriterionResult r = report(run_A4_crt());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A5 certified discontinuity of the predecessor trace") {
    const CriterionResult r = report(run_A5_discontinuity_at_top());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A6 continuity of the half trace") {
    const CriterionResult r = report(run_A6_continuity_of_half_rule());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A7 orbit table reproduction") {
    const CriterionResult r = report(run_A7_orbit_table());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A8 dichotomy on generated systems") {
    const CriterionResult r = report(run_A8_dichotomy());
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("A9 orbit-set convergence") {
    const CriterionResult r = report(run_A9_set_convergence());
    CHECK_MESSAGE(r.pass, r.detail);
}

}  // TEST_SUITE
