#include <doctest.h>

#include <random>
#include <set>

#include "ordyn/fixtures.hpp"
#include "ordyn/iterates.hpp"
#include "ordyn/numtheory.hpp"

using namespace ordyn;
using fixtures::omega2_isolated;
using fixtures::omega2_limit;
using fixtures::omega2_top;

namespace {

Point pt(const std::string& s) { return Point::parse(s); }

// Expected orbit listing of an isolated grid point (column m, index n),
// derived from the clause dynamics. Prime columns of length n are n-cycles;
// everything else walks into the fixed top point, with the above-diagonal
// prime case stepping down-left once (twice for n = 3, collapsing into the
// rank-1 chain for n <= 3).
std::vector<Point> expected_orbit(std::uint32_t m, std::uint32_t n) {
    std::vector<Point> out;
    if (n >= 2 && is_prime(n) && m <= n) {  // the n-cycle through column m
        for (std::uint32_t s = 0; s < n; ++s) {
            const std::uint32_t col = (m - 1 + n - (s % n)) % n + 1;
            out.push_back(omega2_isolated(col, n));
        }
        return out;
    }
    if (n >= 2 && is_prime(n) && m > n) {
        out.push_back(omega2_isolated(m, n));
        std::uint32_t mm = m - 1, nn = n - 1;
        while (nn >= 2 && is_prime(nn) && mm > nn) {
            out.push_back(omega2_isolated(mm, nn));
            --mm;
            --nn;
        }
        if (nn == 1) {  // the encoded rank-1 chain w*(mm-1), ..., w, w^2
            for (std::uint32_t j = mm - 1; j >= 1; --j) out.push_back(omega2_limit(j));
            out.push_back(omega2_top());
            return out;
        }
        for (std::uint32_t j = mm; j >= 1; --j) out.push_back(omega2_isolated(j, nn));
        out.push_back(omega2_top());
        return out;
    }
    // non-prime column (or the zero point): descend and drain into the top
    for (std::uint32_t j = m; j >= 1; --j) out.push_back(omega2_isolated(j, n));
    out.push_back(omega2_top());
    return out;
}

}  // namespace

TEST_SUITE("fixtures") {

TEST_CASE("omega2 metadata claims hold") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    CHECK(fx.metadata.all_points_eventually_periodic);
    CHECK_FALSE(fx.metadata.accumulation_points_periodic);
    CHECK(fx.certifier != nullptr);
}

TEST_CASE("closed-form branches") {
    const ResidueSystem any = ResidueSystem::table({{11, 6}});
    // above a prime column: drains into the top
    CHECK(fixtures::closed_form_p_iterate(any, omega2_isolated(9, 7)) == omega2_top());
    // non-prime column: drains into the top
    CHECK(fixtures::closed_form_p_iterate(any, omega2_isolated(3, 8)) == omega2_top());
    // prime column, residue 6 mod 11: column 2 moves to 7
    CHECK(fixtures::closed_form_p_iterate(any, omega2_isolated(2, 11)) == omega2_isolated(7, 11));
    // rank-1 points and the top drain into / fix the top
    CHECK(fixtures::closed_form_p_iterate(any, omega2_limit(4)) == omega2_top());
    CHECK(fixtures::closed_form_p_iterate(any, omega2_top()) == omega2_top());
}

TEST_CASE("closed form agrees with the p-iterate everywhere") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    std::mt19937_64 rng(97);
    std::vector<ResidueSystem> systems{
        parse_ultrafilter_spec("residues: n-1 on primes"),
        parse_ultrafilter_spec("residues: (n+1)/2 on odd primes; 2 -> 1"),
        ResidueSystem::zero(), ResidueSystem::integer(7)};
    for (int i = 0; i < 6; ++i) {
        const std::uint64_t L = 2 + rng() % 2310;
        systems.push_back(ResidueSystem::table({{L, rng() % L}}));
    }
    OrbitAnalyzer orbits(f);
    for (const ResidueSystem& p : systems) {
        for (const Point& x : truncation(fx.space, 12)) {
            CHECK(fixtures::closed_form_p_iterate(p, x) ==
                  std::get<Point>(p_iterate_point(orbits, p, x)));
        }
    }
}

TEST_CASE("orbit table reproduction for columns and indices through 13") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    for (std::uint32_t m = 1; m <= 13; ++m) {
        for (std::uint32_t n = 1; n <= 13; ++n) {
            if (m >= 2 && n == 1) continue;  // those names collapse onto rank-1 points
            const Point x = omega2_isolated(m, n);
            const OrbitRecord rec = orbit_analyze(f, x);
            REQUIRE(rec.eventually_periodic());
            const std::vector<Point> expected = expected_orbit(m, n);
            CHECK_MESSAGE(rec.ep().listing == expected, "orbit mismatch at column ", m,
                          ", index ", n);
            const bool periodic_cycle = n >= 2 && is_prime(n) && m <= n;
            CHECK(rec.ep().period == (periodic_cycle ? n : 1));
            CHECK(rec.ep().transient == (periodic_cycle ? 0 : expected.size() - 1));
        }
    }
    // rank-1 chains
    for (std::uint32_t m = 1; m <= 13; ++m) {
        const OrbitRecord rec = orbit_analyze(f, omega2_limit(m));
        REQUIRE(rec.eventually_periodic());
        CHECK(rec.ep().transient == m);
        CHECK(rec.ep().period == 1);
        CHECK(rec.ep().listing.size() == m + 1);
    }
}

TEST_CASE("fixtures serialize to parseable sources") {
    for (const std::string& name : fixtures::fixture_names()) {
        const fixtures::Fixture fx = fixtures::by_name(name);
        const MapSpec reparsed = parse_map(fx.to_dynmap(), fx.space);
        for (const Point& x : truncation(fx.space, 7))
            CHECK(reparsed.apply(x) == fx.map.apply(x));
    }
}

TEST_CASE("generated fixtures serialize and validate") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const fixtures::Fixture fx = fixtures::random_finite_xprime_fixture(seed);
        const MapSpec reparsed = parse_map(fx.to_dynmap(), fx.space);
        for (const Point& x : truncation(fx.space, 6))
            CHECK(reparsed.apply(x) == fx.map.apply(x));
        CHECK(fx.metadata.accumulation_points_periodic);
    }
    for (std::uint64_t seed : {21ULL, 22ULL}) {
        const fixtures::Fixture fx = fixtures::random_periodic_fixture(seed);
        CHECK(validate_continuous(fx.map, 4).ok);
    }
}

TEST_CASE("counterexample behavior: constant free iterates on the ascending shift") {
    const fixtures::Fixture fx = fixtures::forward_shift();
    const DynMap f = fx.as_map();
    for (const ResidueSystem& p :
         {parse_ultrafilter_spec("residues: n-1 on primes"), ResidueSystem::zero()}) {
        for (int k = 0; k <= 10; ++k)
            CHECK(std::get<Point>(p_iterate_point(f, p, Point::finite(k), 4096)) == pt("w"));
        CHECK(std::get<Point>(p_iterate_point(f, p, pt("w"), 4096)) == pt("w"));
    }
}

TEST_CASE("unknown fixture names are rejected") {
    CHECK_THROWS_AS(fixtures::by_name("no-such-fixture"), DomainError);
}

}  // TEST_SUITE
