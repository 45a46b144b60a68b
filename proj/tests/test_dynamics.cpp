#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordyn/dynamics.hpp"
#include "ordyn/fixtures.hpp"
#include "ordyn/numtheory.hpp"

using namespace ordyn;

namespace {

Point pt(const std::string& s) { return Point::parse(s); }

std::vector<Point> sorted(std::vector<Point> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Point> points(std::initializer_list<const char*> names) {
    std::vector<Point> v;
    for (const char* s : names) v.push_back(pt(s));
    return sorted(std::move(v));
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("rank-1 chain of the omega2 example is eventually periodic") {
    const DynMap f = fixtures::example_omega2().as_map();
    const OrbitRecord rec = orbit_analyze(f, pt("w*3"));
    REQUIRE(rec.eventually_periodic());
    CHECK(rec.ep().transient == 3);
    CHECK(rec.ep().period == 1);
    CHECK(rec.ep().listing == std::vector<Point>{pt("w*3"), pt("w*2"), pt("w"), pt("w^2")});
}

TEST_CASE("the prime diagonal point is periodic with period 5") {
    const DynMap f = fixtures::example_omega2().as_map();
    const OrbitRecord rec = orbit_analyze(f, fixtures::omega2_isolated(5, 5));
    REQUIRE(rec.eventually_periodic());
    CHECK(rec.ep().transient == 0);
    CHECK(rec.ep().period == 5);
}

TEST_CASE("the ascending shift converges to its fixed point") {
    const DynMap f = fixtures::forward_shift().as_map();
    const OrbitRecord rec = orbit_analyze(f, pt("0"), 5000);
    REQUIRE(rec.converges_to_cycle());
    CHECK(rec.ctc().cycle_point == pt("w"));
    CHECK(rec.ctc().period == 1);
    CHECK(rec.ctc().phase == 0);
}

TEST_CASE("omega_limit on the omega2 example") {
    const DynMap f = fixtures::example_omega2().as_map();
    // a non-prime column point falls into the fixed top
    auto lim = omega_limit(f, fixtures::omega2_isolated(1, 4));
    CHECK(std::get<std::vector<Point>>(lim) == points({"w^2"}));
    // a prime-column point cycles through its whole column
    auto cyc = omega_limit(f, fixtures::omega2_isolated(3, 5));
    const auto& pts = std::get<std::vector<Point>>(cyc);
    CHECK(pts.size() == 5);
    CHECK(pts == points({"w*4+4", "w*3+4", "w*2+4", "w+4", "4"}));
}

TEST_CASE("omega_limit of the identity is the point itself") {
    const DynMap f = fixtures::identity_fixture().as_map();
    for (const Point& x : truncation(f.space, 5))
        CHECK(std::get<std::vector<Point>>(omega_limit(f, x)) == std::vector<Point>{x});
}

TEST_CASE("finite omega-limit sets consist of periodic points") {
    for (const auto& fx : fixtures::counterexamples()) {
        const DynMap f = fx.as_map();
        for (const Point& x : truncation(f.space, 6)) {
            auto lim = omega_limit(f, x, 4096);
            if (!std::holds_alternative<std::vector<Point>>(lim)) continue;
            for (const Point& y : std::get<std::vector<Point>>(lim)) {
                const OrbitRecord rec = orbit_analyze(f, y, 4096);
                REQUIRE(rec.eventually_periodic());
                CHECK(rec.ep().transient == 0);
            }
        }
    }
}

TEST_CASE("omega-limits on periodic-derived-set systems are single periodic orbits") {
    for (std::uint64_t seed : {31ULL, 32ULL, 33ULL}) {
        const fixtures::Fixture fx = fixtures::random_finite_xprime_fixture(seed);
        const DynMap f = fx.as_map();
        for (const Point& x : truncation(f.space, 6)) {
            const auto lim = omega_limit(f, x, 4096);
            REQUIRE(std::holds_alternative<std::vector<Point>>(lim));
            const auto& pts = std::get<std::vector<Point>>(lim);
            REQUIRE_FALSE(pts.empty());
            // one orbit: iterating any member sweeps out exactly the set
            std::set<Point> swept;
            Point cur = pts.front();
            for (std::size_t s = 0; s < pts.size(); ++s) {
                swept.insert(cur);
                cur = f.apply(cur);
            }
            CHECK(cur == pts.front());
            CHECK(std::set<Point>(pts.begin(), pts.end()) == swept);
        }
    }
}

TEST_CASE("orbit decomposition across a power of the map") {
    const DynMap f = fixtures::example_omega2().as_map();
    for (const char* name : {"w*4+4", "w*2+6", "w*5", "w*3+1"}) {
        const Point x = pt(name);
        for (std::uint32_t n = 2; n <= 4; ++n) {
            const DynMap g = power(f, n);
            // O_f(x) must equal the union of f^i[O_g(x)] for i < n.
            const OrbitRecord rf = orbit_analyze(f, x);
            REQUIRE(rf.eventually_periodic());
            std::set<Point> expected(rf.ep().listing.begin(), rf.ep().listing.end());
            std::set<Point> got;
            const OrbitRecord rg = orbit_analyze(g, x);
            REQUIRE(rg.eventually_periodic());
            for (std::uint32_t i = 0; i < n; ++i) {
                for (const Point& y : rg.ep().listing) {
                    Point cur = y;
                    for (std::uint32_t s = 0; s < i; ++s) cur = f.apply(cur);
                    got.insert(cur);
                }
            }
            CHECK(got == expected);
        }
    }
}

TEST_CASE("orbit sets of the prime diagonal do not converge to the top") {
    const DynMap f = fixtures::example_omega2().as_map();
    PointFamily family{[](std::uint32_t k) {
                           const auto q = static_cast<std::uint32_t>(nth_prime(k));
                           return fixtures::omega2_isolated(q, q);
                       },
                       "prime diagonal"};
    const SetConvergenceResult r = orbit_set_converges(f, family, {pt("w^2")}, 8);
    REQUIRE_FALSE(r.converged);
    // the witness orbit point lies below the first limit point
    CHECK(r.witness->orbit_point < pt("w"));
}

TEST_CASE("descending shift orbits do not converge to the top fixed point") {
    const DynMap f = fixtures::two_endpoint_shift().as_map();
    PointFamily family{[](std::uint32_t k) { return Point::finite(k + 1); }, "k+1"};
    const SetConvergenceResult r = orbit_set_converges(f, family, {pt("w")}, 8);
    REQUIRE_FALSE(r.converged);
    CHECK(r.witness->orbit_point == pt("0"));
}

TEST_CASE("constant family of a fixed point converges") {
    const DynMap f = fixtures::two_endpoint_shift().as_map();
    PointFamily family{[](std::uint32_t) { return pt("w"); }, "constant w"};
    CHECK(orbit_set_converges(f, family, {pt("w")}, 8).converged);
}

TEST_CASE("orbit sets of periodic points converge to the orbit of the limit") {
    // swap-cycle: x_k = k is 2-periodic and converges to w; O(x_k) -> O(w).
    const DynMap f = fixtures::swap_cycle().as_map();
    PointFamily family{[](std::uint32_t k) { return Point::finite(k + 1); }, "k+1"};
    const auto target = std::get<std::vector<Point>>(omega_limit(f, pt("w")));
    CHECK(target == points({"w", "w*2"}));
    CHECK(orbit_set_converges(f, family, target, 10).converged);
}

TEST_CASE("unresolved family members raise an inconclusive error") {
    const DynMap f = fixtures::forward_shift().as_map();
    PointFamily family{[](std::uint32_t k) { return Point::finite(k); }, "k"};
    CHECK_THROWS_AS(orbit_set_converges(f, family, {pt("w")}, 6, 4096), Error);
}

}  // TEST_SUITE
