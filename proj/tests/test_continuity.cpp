#include <doctest.h>

#include "ordyn/continuity.hpp"
#include "ordyn/fixtures.hpp"
#include "ordyn/numtheory.hpp"

using namespace ordyn;

namespace {

Point pt(const std::string& s) { return Point::parse(s); }

ResidueSystem predecessor_rule() { return parse_ultrafilter_spec("residues: n-1 on primes"); }
ResidueSystem half_rule() {
    return parse_ultrafilter_spec("residues: (n+1)/2 on odd primes; 2 -> 1");
}

}  // namespace

TEST_SUITE("continuity") {

TEST_CASE("predecessor rule is discontinuous at the top of the omega2 example") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem p = predecessor_rule();
    const ContinuityVerdict v = continuity_at(f, p, pt("w^2"), 10, fx.certifier.get());
    REQUIRE(v.status == ContinuityVerdict::Status::DiscontinuousCertified);
    REQUIRE(v.certificate.has_value());
    // witness family: the main diagonal over primes, images at the column bottoms
    for (std::uint32_t k = 0; k < 8; ++k) {
        const auto q = static_cast<std::uint32_t>(nth_prime(k));
        CHECK(v.certificate->family.at(k) == fixtures::omega2_isolated(q, q));
        const Point image = std::get<Point>(p_iterate_point(f, p, v.certificate->family.at(k)));
        CHECK(image == fixtures::omega2_isolated(1, q));  // the finite point q-1
        CHECK(image < pt("w"));
    }
    CHECK(v.certificate->image_target == pt("w^2"));
    CHECK(replay_certificate(f, p, v, 50));
}

TEST_CASE("predecessor rule is discontinuous at every rank-1 point") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem p = predecessor_rule();
    for (std::uint32_t m = 1; m <= 6; ++m) {
        const ContinuityVerdict v = continuity_at(f, p, fixtures::omega2_limit(m), 10,
                                                  fx.certifier.get());
        CHECK(v.status == ContinuityVerdict::Status::DiscontinuousCertified);
        CHECK(replay_certificate(f, p, v, 12));
    }
}

TEST_CASE("half rule is certified continuous at the rank-1 points") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem q = half_rule();
    for (std::uint32_t m = 1; m <= 8; ++m) {
        const ContinuityVerdict v = continuity_at(f, q, fixtures::omega2_limit(m), 10,
                                                  fx.certifier.get());
        CHECK(v.status == ContinuityVerdict::Status::ContinuousCertified);
        CHECK(v.method == "closed-form");
    }
    // the image formula behind the certificate: column m moves to m + (n-1)/2
    for (std::uint32_t m = 1; m <= 4; ++m) {
        for (std::uint64_t n : {11ULL, 13ULL, 17ULL, 19ULL}) {
            const Point image = std::get<Point>(
                p_iterate_point(f, q, fixtures::omega2_isolated(m, static_cast<std::uint32_t>(n))));
            CHECK(image == fixtures::omega2_isolated(
                               m + static_cast<std::uint32_t>((n - 1) / 2),
                               static_cast<std::uint32_t>(n)));
        }
    }
}

TEST_CASE("half rule is discontinuous at the top: the wrap family escapes") {
    // Columns just above the residue value wrap to the column bottom, so the
    // rule (n+1)/2 cannot be continuous at the top point even though it is
    // continuous at every rank-1 point.
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem q = half_rule();
    const ContinuityVerdict v = continuity_at(f, q, pt("w^2"), 10, fx.certifier.get());
    REQUIRE(v.status == ContinuityVerdict::Status::DiscontinuousCertified);
    CHECK(replay_certificate(f, q, v, 50));
    // spot-check the wrap: column (n+3)/2 of a prime column maps to the bottom
    for (std::uint64_t n : {7ULL, 11ULL, 13ULL}) {
        const auto m = static_cast<std::uint32_t>((n + 3) / 2);
        const Point image = std::get<Point>(
            p_iterate_point(f, q, fixtures::omega2_isolated(m, static_cast<std::uint32_t>(n))));
        CHECK(image == fixtures::omega2_isolated(1, static_cast<std::uint32_t>(n)));
    }
}

TEST_CASE("the thorough scan finds wrap discontinuities without the certifier") {
    // add(half rule, 3) has no affine metadata, so only the neighborhood-base
    // scan can surface the wrap family at the top point.
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem q = add(half_rule(), ResidueSystem::integer(3));
    const ContinuityVerdict v = continuity_at(f, q, pt("w^2"), 8, nullptr);
    REQUIRE(v.status == ContinuityVerdict::Status::DiscontinuousCertified);
    CHECK(replay_certificate(f, q, v, 8));
}

TEST_CASE("constant traces are certified continuous at the top") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ContinuityVerdict v =
        continuity_at(f, ResidueSystem::integer(4), pt("w^2"), 8, fx.certifier.get());
    CHECK(v.status == ContinuityVerdict::Status::ContinuousCertified);
    // ... while being discontinuous at deep rank-1 points
    const ContinuityVerdict w =
        continuity_at(f, ResidueSystem::integer(4), fixtures::omega2_limit(6), 8,
                      fx.certifier.get());
    CHECK(w.status == ContinuityVerdict::Status::DiscontinuousCertified);
}

TEST_CASE("a negative-constant rule behaves like its wrapped slope") {
    // value -1 at a prime q is the residue q-1, so the certifier must treat
    // the rule as the predecessor trace, not as a constant.
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem disguised =
        ResidueSystem::prime_rule(AffinePrimeRule{0, -1, 1, false, {}, 0}, "wrapped -1");
    for (const std::uint64_t q : {5ULL, 11ULL, 13ULL})
        CHECK(disguised.residue(q) == q - 1);
    CHECK(continuity_at(f, disguised, pt("w^2"), 10, fx.certifier.get()).discontinuous());
    CHECK(continuity_at(f, disguised, fixtures::omega2_limit(3), 10, fx.certifier.get())
              .discontinuous());
}

TEST_CASE("identity map certifies everywhere") {
    const fixtures::Fixture fx = fixtures::identity_fixture();
    const ContinuityVerdict v = continuity_at(fx.map, predecessor_rule(), pt("w"), 8);
    CHECK(v.status == ContinuityVerdict::Status::ContinuousCertified);
    CHECK(v.method == "identity");
}

TEST_CASE("isolated orbit shortcut") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    // an isolated point with an isolated orbit
    auto cert = isolated_orbit_shortcut(f, fixtures::omega2_isolated(3, 9));
    REQUIRE(cert.has_value());
    CHECK(cert->method == "isolated-orbit");
    // the top point's orbit is itself: no isolated member
    CHECK_FALSE(isolated_orbit_shortcut(f, pt("w^2")).has_value());
    // rank-1 orbits pass through no isolated point either
    CHECK_FALSE(isolated_orbit_shortcut(f, pt("w*4")).has_value());
    // the descending shift: isolated points certify trivially
    const DynMap g = fixtures::two_endpoint_shift().as_map();
    CHECK(isolated_orbit_shortcut(g, pt("5")).has_value());
}

TEST_CASE("every free trace is discontinuous at the top of the descending shift") {
    const fixtures::Fixture fx = fixtures::two_endpoint_shift();
    std::vector<ResidueSystem> samples{predecessor_rule(), half_rule(), ResidueSystem::zero(),
                                       ResidueSystem::table({{6, 5}}), ResidueSystem::integer(9)};
    const DichotomyReport report =
        dichotomy_scan(fx.as_map(), fx.metadata.accumulation_points_periodic, samples, 8, 6,
                       nullptr, false, 4096);
    REQUIRE(report.points == std::vector<Point>{pt("w")});
    for (const auto st : report.grid[0])
        CHECK(st == ContinuityVerdict::Status::DiscontinuousCertified);
    CHECK(report.homogeneous);
    CHECK(report.falsifications.empty());
}

TEST_CASE("identity map scans all-continuous") {
    const fixtures::Fixture fx = fixtures::identity_fixture();
    std::vector<ResidueSystem> samples{predecessor_rule(), ResidueSystem::zero()};
    const DichotomyReport report = dichotomy_scan(fx.as_map(), true, samples, 8, 6, nullptr,
                                                  false, 4096);
    CHECK(report.homogeneous);
    for (const auto& row : report.grid)
        for (const auto st : row) CHECK_FALSE(st == ContinuityVerdict::Status::DiscontinuousCertified);
}

TEST_CASE("the omega2 example mixes verdicts at rank-1 points") {
    // The per-point dichotomy needs periodic accumulation points; here the
    // rank-1 points are strictly pre-periodic and the two headline rules
    // disagree at every one of them.
    const fixtures::Fixture fx = fixtures::example_omega2();
    std::vector<ResidueSystem> samples{predecessor_rule(), half_rule()};
    const DichotomyReport report =
        dichotomy_scan(fx.as_map(), fx.metadata.accumulation_points_periodic, samples, 5, 8,
                       fx.certifier.get(), false, 4096);
    CHECK_FALSE(report.homogeneous);
    CHECK(report.falsifications.empty());  // the hypothesis fails, so no falsification
    for (std::uint32_t m = 1; m <= 5; ++m) {
        const Point dm = fixtures::omega2_limit(m);
        const auto it = std::find(report.points.begin(), report.points.end(), dm);
        REQUIRE(it != report.points.end());
        const auto& row = report.grid[static_cast<std::size_t>(it - report.points.begin())];
        CHECK(row[0] == ContinuityVerdict::Status::DiscontinuousCertified);
        CHECK(row[1] == ContinuityVerdict::Status::ContinuousCertified);
    }
    // at the top both rules are discontinuous
    const auto it = std::find(report.points.begin(), report.points.end(), pt("w^2"));
    REQUIRE(it != report.points.end());
    const auto& row = report.grid[static_cast<std::size_t>(it - report.points.begin())];
    CHECK(row[0] == ContinuityVerdict::Status::DiscontinuousCertified);
    CHECK(row[1] == ContinuityVerdict::Status::DiscontinuousCertified);
}

TEST_CASE("verdicts replicate along periodic orbits") {
    const fixtures::Fixture fx = fixtures::swap_cycle();
    const DynMap f = fx.as_map();
    for (const ResidueSystem& p :
         {predecessor_rule(), ResidueSystem::zero(), ResidueSystem::table({{4, 3}})}) {
        const ContinuityVerdict a = continuity_at(f, p, pt("w"), 8);
        const ContinuityVerdict b = continuity_at(f, p, pt("w*2"), 8);
        CHECK(a.continuous_class() == b.continuous_class());
    }
}

TEST_CASE("continuity at a point survives adding a fixed integer") {
    // One direction only: continuity of f^p forces continuity of f^(p+n);
    // a discontinuous trace may well become continuous after a shift.
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    for (std::uint32_t n = 1; n <= 3; ++n) {
        const ResidueSystem shifted_q = add(half_rule(), ResidueSystem::integer(n));
        CHECK(continuity_at(f, shifted_q, fixtures::omega2_limit(2), 8, fx.certifier.get())
                  .continuous_class());
        // the wrap family shifts along but the top stays discontinuous
        CHECK(continuity_at(f, shifted_q, pt("w^2"), 8, fx.certifier.get()).discontinuous());
    }
    // the predecessor trace stays discontinuous at rank-1 points for small
    // shifts (the image column freezes at m - n + 1 while n <= m)
    for (std::uint32_t n = 1; n <= 2; ++n) {
        const ResidueSystem shifted_p = add(predecessor_rule(), ResidueSystem::integer(n));
        CHECK(continuity_at(f, shifted_p, fixtures::omega2_limit(2), 8, fx.certifier.get())
                  .discontinuous());
    }
    // ... and becomes continuous there once the shift clears the column index,
    // which is exactly why the implication cannot be reversed.
    const ResidueSystem cleared = add(predecessor_rule(), ResidueSystem::integer(3));
    CHECK(continuity_at(f, cleared, fixtures::omega2_limit(2), 8, fx.certifier.get())
              .continuous_class());
}

TEST_CASE("the family fast path and the thorough scan agree on generated systems") {
    std::vector<ResidueSystem> samples{predecessor_rule(), ResidueSystem::zero(),
                                       ResidueSystem::table({{6, 5}})};
    for (std::uint64_t seed : {41ULL, 42ULL, 43ULL}) {
        const fixtures::Fixture fx = fixtures::random_finite_xprime_fixture(seed);
        const DynMap f = fx.as_map();
        OrbitAnalyzer orbits(f, 4096);
        for (const ResidueSystem& p : samples) {
            ContinuityAnalyzer analyzer(orbits, p);
            for (const Point& x : truncation(f.space, 5)) {
                if (x.trailing_exp() == 0) continue;
                const ContinuityVerdict fast = analyzer.at(x, 4, false);
                const ContinuityVerdict slow = analyzer.at(x, 4, true);
                CHECK_MESSAGE(fast.discontinuous() == slow.discontinuous(), "seed ", seed,
                              " at ", x.str(), " under ", p.describe());
            }
        }
    }
}

TEST_CASE("verdict classes replicate along the limit-point cycles of generated systems") {
    std::vector<ResidueSystem> samples{predecessor_rule(), ResidueSystem::zero(),
                                       ResidueSystem::table({{10, 7}})};
    for (std::uint64_t seed : {51ULL, 52ULL, 53ULL, 54ULL}) {
        const fixtures::Fixture fx = fixtures::random_finite_xprime_fixture(seed);
        const DynMap f = fx.as_map();
        const DichotomyReport rep = dichotomy_scan(f, true, samples, 7, 5, nullptr, false, 4096);
        auto index_of = [&rep](const Point& x) {
            return static_cast<std::size_t>(
                std::find(rep.points.begin(), rep.points.end(), x) - rep.points.begin());
        };
        for (const Point& x : rep.points) {
            Point cur = f.apply(x);
            while (!(cur == x)) {
                if (cur.trailing_exp() >= 1) {
                    for (std::size_t s = 0; s < samples.size(); ++s) {
                        const auto a = rep.grid[index_of(x)][s];
                        const auto b = rep.grid[index_of(cur)][s];
                        CHECK((a == ContinuityVerdict::Status::DiscontinuousCertified) ==
                              (b == ContinuityVerdict::Status::DiscontinuousCertified));
                    }
                }
                cur = f.apply(cur);
            }
        }
    }
}

TEST_CASE("unresolved orbits are reported and excluded from homogeneity") {
    // A tiny budget leaves the ascending shift's isolated orbits unresolved,
    // which the scanner must surface rather than classify.
    const fixtures::Fixture fx = fixtures::forward_shift();
    std::vector<ResidueSystem> samples{predecessor_rule(), ResidueSystem::zero()};
    const DichotomyReport rep = dichotomy_scan(fx.as_map(), true, samples, 6, 4, nullptr,
                                               false, 8);
    REQUIRE(rep.points == std::vector<Point>{pt("w")});
    CHECK(rep.unresolved_points == std::vector<Point>{pt("w")});
    CHECK(rep.falsifications.empty());
}

TEST_CASE("homogeneity on generated systems with periodic accumulation points") {
    std::vector<ResidueSystem> samples{predecessor_rule(), half_rule(), ResidueSystem::zero(),
                                       ResidueSystem::table({{12, 7}})};
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const fixtures::Fixture fx = fixtures::random_finite_xprime_fixture(seed);
        const DichotomyReport report = dichotomy_scan(fx.as_map(), true, samples, 7, 6, nullptr,
                                                      false, 4096);
        CHECK_MESSAGE(report.falsifications.empty(), "seed ", seed);
        CHECK(report.unresolved_points.empty());
    }
    for (std::uint64_t seed = 11; seed <= 14; ++seed) {
        const fixtures::Fixture fx = fixtures::random_periodic_fixture(seed);
        const DichotomyReport report = dichotomy_scan(fx.as_map(), true, samples, 5, 5, nullptr,
                                                      false, 4096);
        CHECK_MESSAGE(report.falsifications.empty(), "seed ", seed);
    }
}

}  // TEST_SUITE
