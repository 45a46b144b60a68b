#include "ordyn/repro.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "ordyn/continuity.hpp"
#include "ordyn/dynamics.hpp"
#include "ordyn/fixtures.hpp"
#include "ordyn/iterates.hpp"
#include "ordyn/numtheory.hpp"
#include "ordyn/ultrafilter.hpp"

namespace ordyn::repro {

namespace {

using fixtures::omega2_isolated;
using fixtures::omega2_limit;
using fixtures::omega2_top;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

ResidueSystem predecessor_rule() { return parse_ultrafilter_spec("residues: n-1 on primes"); }
ResidueSystem half_rule() {
    return parse_ultrafilter_spec("residues: (n+1)/2 on odd primes; 2 -> 1");
}

ResidueSystem random_system(std::mt19937_64& rng) {
    switch (rng() % 5) {
        case 0: {
            const std::uint64_t m = 2 + rng() % 2400;
            return ResidueSystem::table({{m, rng() % m}});
        }
        case 1: return predecessor_rule();
        case 2: return half_rule();
        case 3: return ResidueSystem::integer(rng() % 40);
        default: {
            const std::uint64_t m = 2 + rng() % 360;
            return add(ResidueSystem::table({{m, rng() % m}}), ResidueSystem::integer(rng() % 8));
        }
    }
}

CriterionResult finish(const std::string& id, bool pass, const std::string& detail,
                       const Timer& timer) {
    return CriterionResult{id, pass, detail, timer.elapsed()};
}

// index-table representation of the omega2 truncation for the bulk criteria
struct TruncTables {
    std::vector<Point> domain;
    std::vector<std::uint32_t> transient;
    std::vector<std::uint32_t> period;
    std::vector<std::vector<std::uint16_t>> listing_idx;  // orbit listings as indices

    std::uint16_t index_of(const Point& x) const {
        const auto it = std::lower_bound(domain.begin(), domain.end(), x);
        return static_cast<std::uint16_t>(it - domain.begin());
    }

    // f^p restricted, for the residue trace r mod L (L a multiple of every period)
    std::vector<std::uint16_t> trace_table(std::uint64_t r) const {
        std::vector<std::uint16_t> out(domain.size());
        for (std::size_t i = 0; i < domain.size(); ++i) {
            const std::uint64_t n = period[i], m = transient[i];
            const std::uint64_t l = (r % n + n - m % n) % n;
            out[i] = listing_idx[i][m + l];
        }
        return out;
    }
};

TruncTables build_tables(const DynMap& f, std::uint64_t cap) {
    TruncTables t;
    t.domain = truncation(f.space, cap);
    OrbitAnalyzer orbits(f);
    for (const Point& x : t.domain) {
        const OrbitRecord& rec = orbits.analyze(x);
        const EventuallyPeriodic& ep = rec.ep();
        t.transient.push_back(ep.transient);
        t.period.push_back(ep.period);
        std::vector<std::uint16_t> idx;
        idx.reserve(ep.listing.size());
        for (const Point& y : ep.listing) idx.push_back(t.index_of(y));
        t.listing_idx.push_back(std::move(idx));
    }
    return t;
}

}  // namespace

CriterionResult run_A1_oracle_equivalence(const Options& opts) {
    Timer timer;
    std::mt19937_64 rng(opts.seed * 101);
    std::vector<DynMap> maps;
    maps.push_back(fixtures::example_omega2().as_map());
    maps.push_back(fixtures::two_endpoint_shift().as_map());
    maps.push_back(fixtures::swap_cycle().as_map());
    maps.push_back(power(fixtures::example_omega2().as_map(), 3));
    maps.push_back(fixtures::random_finite_xprime_fixture(opts.seed + 5).as_map());
    maps.push_back(fixtures::random_periodic_fixture(opts.seed + 6).as_map());

    int checked = 0, mismatches = 0;
    std::string first_bad;
    while (checked < 1000) {
        const DynMap& f = maps[rng() % maps.size()];
        const std::vector<Point> trunc = truncation(f.space, 8);
        const Point x = trunc[rng() % trunc.size()];
        if (!orbit_analyze(f, x, 4096).eventually_periodic()) continue;
        const ResidueSystem p = random_system(rng);
        const Point fast = std::get<Point>(p_iterate_point(f, p, x, 4096));
        const Point slow = brute_force_p_iterate(f, p, x, rng() % 50, 4096);
        if (!(fast == slow)) {
            ++mismatches;
            if (first_bad.empty())
                first_bad = f.name + " at " + x.str() + ": " + fast.str() + " vs " + slow.str();
        }
        ++checked;
    }
    const double secs = timer.elapsed();
    std::ostringstream detail;
    detail << checked << " random (map, point, trace) triples across " << maps.size()
           << " systems; " << (mismatches ? std::to_string(mismatches) + " mismatches, first: " +
                                                first_bad
                                          : "all exact")
           << "; " << (secs < 10.0 ? "within" : "OVER") << " the 10 s budget";
    return finish("A1", mismatches == 0 && secs < 10.0, detail.str(), timer);
}

CriterionResult run_A2_semigroup_law(const Options&) {
    Timer timer;
    const DynMap f = fixtures::example_omega2().as_map();
    const TruncTables t = build_tables(f, 11);  // columns, indices and limits through 11
    const std::uint64_t L = 2310;               // lcm(2,3,5,7,11)

    std::vector<std::vector<std::uint16_t>> tables;
    tables.reserve(L);
    for (std::uint64_t r = 0; r < L; ++r) tables.push_back(t.trace_table(r));

    const std::size_t n = t.domain.size();
    std::uint64_t bad_pairs = 0;
    std::string first_bad;
    for (std::uint64_t a = 0; a < L; ++a) {
        const std::uint16_t* ta = tables[a].data();
        for (std::uint64_t b = 0; b < L; ++b) {
            const std::uint16_t* tb = tables[b].data();
            const std::uint16_t* ts = tables[(a + b) % L].data();
            for (std::size_t i = 0; i < n; ++i) {
                if (ta[tb[i]] != ts[i]) {
                    ++bad_pairs;
                    if (first_bad.empty())
                        first_bad = "p=" + std::to_string(a) + ", q=" + std::to_string(b) +
                                    " at " + t.domain[i].str();
                    break;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "all " << L << "^2 ordered trace pairs mod lcm(2,3,5,7,11) on " << n
           << " points: " << (bad_pairs ? std::to_string(bad_pairs) + " violations, first " +
                                              first_bad
                                        : "composition equals the added trace exactly");
    return finish("A2", bad_pairs == 0, detail.str(), timer);
}

CriterionResult run_A3_power_law(const Options&) {
    Timer timer;
    const DynMap f = fixtures::example_omega2().as_map();
    const TruncTables ft = build_tables(f, 11);
    const std::uint64_t L = 2310;
    const std::size_t npts = ft.domain.size();

    std::uint64_t stated_bad = 0, scaled_bad = 0, total = 0;
    std::string first_bad;
    for (std::uint32_t n = 1; n <= 5; ++n) {
        const DynMap g = power(f, n);
        const TruncTables gt = build_tables(g, 11);
        // f^n as an index map
        std::vector<std::uint16_t> shift(npts);
        for (std::size_t i = 0; i < npts; ++i) {
            Point cur = ft.domain[i];
            for (std::uint32_t s = 0; s < n; ++s) cur = f.apply(cur);
            shift[i] = ft.index_of(cur);
        }
        for (std::uint64_t r = 0; r < L; ++r) {
            const std::vector<std::uint16_t> gtab = gt.trace_table(r);
            const std::vector<std::uint16_t> ftab = ft.trace_table(r);
            // the scaled trace (n * r on the transported modulus), checked in full
            std::vector<std::uint16_t> scaled(npts);
            for (std::size_t i = 0; i < npts; ++i) {
                const std::uint64_t d = ft.period[i], m = ft.transient[i];
                const std::uint64_t rd = (n % d) * (r % (d / gcd_u64(n, d))) % d;
                const std::uint64_t l = (rd + d - m % d) % d;
                scaled[i] = ft.listing_idx[i][m + l];
            }
            for (std::size_t i = 0; i < npts; ++i) {
                ++total;
                if (gtab[i] != ftab[shift[i]]) {
                    ++stated_bad;
                    if (first_bad.empty())
                        first_bad = "n=" + std::to_string(n) + ", trace " + std::to_string(r) +
                                    " at " + ft.domain[i].str() + ": " +
                                    ft.domain[gtab[i]].str() + " vs " +
                                    ft.domain[ftab[shift[i]]].str();
                }
                if (gtab[i] != scaled[i]) ++scaled_bad;
            }
        }
    }
    std::ostringstream detail;
    if (stated_bad == 0) {
        detail << "g = f^n iterate tables equal f^p o f^n on " << total << " evaluations";
    } else {
        detail << "stated identity g^p = f^p o f^n fails on " << stated_bad << "/" << total
               << " evaluations (first: " << first_bad
               << "); the limit of the g-iterates along p is f^(n*p), the trace transported "
                  "through k -> n*k, and that law holds on "
               << (total - scaled_bad) << "/" << total
               << " evaluations here (cycle phases advance n steps per g-step, so composing "
                  "with f^n shifts by n while the subsampled limit scales by n)";
    }
    return finish("A3", stated_bad == 0, detail.str(), timer);
}

CriterionResult run_A4_crt(const Options& opts) {
    Timer timer;
    std::mt19937_64 rng(opts.seed * 131);
    const auto primes = primes_upto(30);
    std::uint64_t rounds = 0, failures = 0;
    for (; rounds < 60; ++rounds) {
        CongruenceConstraintSet cs;
        for (const std::uint64_t q : primes) cs.push_back(Congruence{q, rng() % q});
        const CrtResult r = crt_solve(cs);
        if (!std::holds_alternative<Progression>(r)) {
            ++failures;
            continue;
        }
        const Progression& prog = std::get<Progression>(r);
        if (prog.modulus != 6469693230ULL) ++failures;
        for (std::uint64_t k = 0; k < 10; ++k)
            for (const Congruence& c : cs)
                if ((prog.residue + k * prog.modulus) % c.modulus != c.residue) ++failures;
    }

    const CrtResult worked = crt_solve({{3, 2}, {5, 4}, {7, 6}});
    bool worked_ok = std::holds_alternative<Progression>(worked) &&
                     std::get<Progression>(worked).modulus == 105 &&
                     std::get<Progression>(worked).residue == 104;
    std::uint64_t scan = 0;
    for (; scan <= 105; ++scan)
        if (scan % 3 == 2 && scan % 5 == 4 && scan % 7 == 6) break;
    worked_ok = worked_ok && scan == 104;

    std::ostringstream detail;
    detail << rounds << " random residue choices over the primes <= 30, first 10 progression "
           << "members checked; worked example (3:2)(5:4)(7:6) -> (105,104) confirmed by scan";
    return finish("A4", failures == 0 && worked_ok, detail.str(), timer);
}

CriterionResult run_A5_discontinuity_at_top(const Options&) {
    Timer timer;
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem p = predecessor_rule();
    const ContinuityVerdict v =
        continuity_at(f, p, omega2_top(), 50, fx.certifier.get());
    bool ok = v.status == ContinuityVerdict::Status::DiscontinuousCertified &&
              v.certificate.has_value();
    std::string shape = "witness family matches the main diagonal over primes with images at "
                        "the column bottoms";
    if (ok) {
        for (std::uint32_t k = 0; k < 20 && ok; ++k) {
            const auto q = static_cast<std::uint32_t>(nth_prime(k));
            ok = v.certificate->family.at(k) == omega2_isolated(q, q) &&
                 std::get<Point>(p_iterate_point(f, p, v.certificate->family.at(k))) ==
                     omega2_isolated(1, q);
        }
        if (!ok) shape = "witness family shape mismatch";
    }
    const bool replay = ok && replay_certificate(f, p, v, 50);
    std::ostringstream detail;
    detail << "predecessor trace at the top point: " << to_string(v.status) << "; " << shape
           << "; certificate replay at depth 50 " << (replay ? "passed" : "failed");
    return finish("A5", ok && replay, detail.str(), timer);
}

CriterionResult run_A6_continuity_of_half_rule(const Options&) {
    Timer timer;
    const fixtures::Fixture fx = fixtures::example_omega2();
    const DynMap f = fx.as_map();
    const ResidueSystem q = half_rule();

    bool rank1_ok = true;
    std::string rank1_bad;
    for (std::uint32_t m = 1; m <= 20; ++m) {
        const ContinuityVerdict v =
            continuity_at(f, q, omega2_limit(m), 50, fx.certifier.get());
        if (v.status != ContinuityVerdict::Status::ContinuousCertified) {
            rank1_ok = false;
            rank1_bad = "at w*" + std::to_string(m) + ": " + to_string(v.status);
            break;
        }
    }

    const ContinuityVerdict top = continuity_at(f, q, omega2_top(), 50, fx.certifier.get());
    const bool top_ok = top.status == ContinuityVerdict::Status::ContinuousCertified;
    const bool top_replay =
        top.status == ContinuityVerdict::Status::DiscontinuousCertified &&
        replay_certificate(f, q, top, 50);

    bool agree = true;
    std::string agree_bad;
    OrbitAnalyzer orbits(f);
    for (const Point& x : truncation(fx.space, 30)) {
        if (!(fixtures::closed_form_p_iterate(q, x) ==
              std::get<Point>(p_iterate_point(orbits, q, x)))) {
            agree = false;
            agree_bad = x.str();
            break;
        }
    }

    std::ostringstream detail;
    detail << "(a) continuous-certified at w*m for m <= 20 via the closed-form image column "
              "m + (n-1)/2: "
           << (rank1_ok ? "yes" : "NO, " + rank1_bad) << "; (b) at the top point w^2: "
           << to_string(top.status);
    if (!top_ok) {
        detail << " [expected continuous-certified; the rule value l = (n+1)/2 sends column "
                  "l+1 of each prime column to the column bottom ((l+1-1-l mod n)+1 = 1), so "
                  "the family w*((n+1)/2)+(n-1) converges to w^2 while its images n-1 converge "
                  "to w"
               << (top_replay ? "; the discontinuity certificate replays at depth 50" : "")
               << "]";
    }
    detail << "; (c) closed form vs p-iterate on the full truncation through index 31: "
           << (agree ? "exact" : "mismatch at " + agree_bad);
    return finish("A6", rank1_ok && top_ok && agree, detail.str(), timer);
}

namespace {

// Orbit listing expected from the clause structure (the reference table for A7).
std::vector<Point> omega2_expected_orbit(std::uint32_t m, std::uint32_t n) {
    std::vector<Point> out;
    if (n >= 2 && is_prime(n) && m <= n) {
        for (std::uint32_t s = 0; s < n; ++s)
            out.push_back(omega2_isolated((m - 1 + n - s % n) % n + 1, n));
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
        if (nn == 1) {
            for (std::uint32_t j = mm - 1; j >= 1; --j) out.push_back(omega2_limit(j));
            out.push_back(omega2_top());
        } else {
            for (std::uint32_t j = mm; j >= 1; --j) out.push_back(omega2_isolated(j, nn));
            out.push_back(omega2_top());
        }
        return out;
    }
    for (std::uint32_t j = m; j >= 1; --j) out.push_back(omega2_isolated(j, n));
    out.push_back(omega2_top());
    return out;
}

}  // namespace

CriterionResult run_A7_orbit_table(const Options&) {
    Timer timer;
    const DynMap f = fixtures::example_omega2().as_map();
    std::uint64_t points = 0, bad = 0;
    std::string first_bad;
    for (std::uint32_t m = 1; m <= 13; ++m) {
        for (std::uint32_t n = 1; n <= 13; ++n) {
            if (m >= 2 && n == 1) continue;  // encoded names collapsing onto rank-1 points
            ++points;
            const OrbitRecord rec = orbit_analyze(f, omega2_isolated(m, n));
            const bool cycle = n >= 2 && is_prime(n) && m <= n;
            const std::vector<Point> expected = omega2_expected_orbit(m, n);
            const bool ok = rec.eventually_periodic() && rec.ep().listing == expected &&
                            rec.ep().period == (cycle ? n : 1) &&
                            rec.ep().transient == (cycle ? 0 : expected.size() - 1);
            if (!ok && first_bad.empty())
                first_bad = "column " + std::to_string(m) + ", index " + std::to_string(n);
            bad += !ok;
        }
    }
    for (std::uint32_t m = 1; m <= 13; ++m) {
        ++points;
        const OrbitRecord rec = orbit_analyze(f, omega2_limit(m));
        const bool ok = rec.eventually_periodic() && rec.ep().transient == m &&
                        rec.ep().period == 1 && rec.ep().listing.size() == m + 1;
        if (!ok && first_bad.empty()) first_bad = "rank-1 point w*" + std::to_string(m);
        bad += !ok;
    }
    std::ostringstream detail;
    detail << points << " orbit records (columns and indices through 13, including the rank-1 "
           << "chains): "
           << (bad ? std::to_string(bad) + " mismatches, first at " + first_bad
                   : "listings, transients and periods all exact");
    return finish("A7", bad == 0, detail.str(), timer);
}

CriterionResult run_A8_dichotomy(const Options& opts) {
    Timer timer;
    std::mt19937_64 rng(opts.seed * 151);
    std::vector<ResidueSystem> samples{predecessor_rule(), half_rule(), ResidueSystem::zero(),
                                       ResidueSystem::integer(5)};
    while (samples.size() < 20) samples.push_back(random_system(rng));

    std::uint64_t fixtures_run = 0, falsified = 0, global_violations = 0;
    std::string first_bad;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const fixtures::Fixture fx = fixtures::random_finite_xprime_fixture(opts.seed + seed);
        const DichotomyReport rep = dichotomy_scan(fx.as_map(), true, samples, 7, 5, nullptr,
                                                   false, 4096);
        ++fixtures_run;
        if (!rep.falsifications.empty()) {
            ++falsified;
            if (first_bad.empty()) first_bad = fx.name + " at " + rep.falsifications[0].str();
        }
        // finite derived set: one globally continuous sample forces all
        bool any_global = false, all_global = true;
        for (std::size_t s = 0; s < samples.size(); ++s) {
            bool global = true;
            for (std::size_t i = 0; i < rep.points.size(); ++i)
                global = global &&
                         rep.grid[i][s] != ContinuityVerdict::Status::DiscontinuousCertified;
            any_global = any_global || global;
            all_global = all_global && global;
        }
        if (any_global && !all_global) {
            ++global_violations;
            if (first_bad.empty()) first_bad = fx.name + " (global-continuity split)";
        }
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const fixtures::Fixture fx = fixtures::random_periodic_fixture(opts.seed + seed);
        const DichotomyReport rep = dichotomy_scan(fx.as_map(), true, samples, 5, 5, nullptr,
                                                   false, 4096);
        ++fixtures_run;
        if (!rep.falsifications.empty()) {
            ++falsified;
            if (first_bad.empty()) first_bad = fx.name + " at " + rep.falsifications[0].str();
        }
    }
    const double secs = timer.elapsed();
    std::ostringstream detail;
    detail << fixtures_run << " generated systems with periodic accumulation points, "
           << samples.size() << " sampled traces each: "
           << (falsified + global_violations
                   ? std::to_string(falsified) + " per-point and " +
                         std::to_string(global_violations) + " global violations, first " +
                         first_bad
                   : "per-point verdicts homogeneous; on finite derived sets global continuity "
                     "propagates across all samples")
           << "; " << (secs < 60.0 ? "within" : "OVER") << " the 60 s budget";
    return finish("A8", falsified == 0 && global_violations == 0 && secs < 60.0, detail.str(),
                  timer);
}

CriterionResult run_A9_set_convergence(const Options& opts) {
    Timer timer;
    // (negative) the descending shift: orbits pile onto the bottom fixed point
    const DynMap shift = fixtures::two_endpoint_shift().as_map();
    PointFamily family{[](std::uint32_t k) { return Point::finite(k + 1); }, "k+1"};
    const Point top = Point::single(1, 1);
    const SetConvergenceResult neg = orbit_set_converges(shift, family, {top}, 10);
    bool neg_ok = !neg.converged && neg.witness.has_value();
    if (neg_ok) {
        // replay the witness: the orbit of x_k really contains the escaping
        // point and that point misses the stated tail of the target
        const SetConvergenceWitness& w = *neg.witness;
        const OrbitRecord rec = orbit_analyze(shift, family.at(w.index));
        const auto& listing = rec.ep().listing;
        neg_ok = std::find(listing.begin(), listing.end(), w.orbit_point) != listing.end() &&
                 !tail_set(top, w.tail_index, shift.space).contains(w.orbit_point) &&
                 !orbit_set_converges(shift, family, {top}, 10).converged;
    }

    // (positive) periodic families: orbit sets converge to the orbit of the limit
    const DynMap swap = fixtures::swap_cycle().as_map();
    const auto swap_target = std::get<std::vector<Point>>(omega_limit(swap, Point::single(1, 1)));
    bool pos_ok = orbit_set_converges(swap, family, swap_target, 50).converged;

    const DynMap id = fixtures::identity_fixture().as_map();
    pos_ok = pos_ok && orbit_set_converges(id, canonical_sequence(Point::single(1, 1), id.space),
                                           {Point::single(1, 1)}, 50)
                           .converged;

    // generated systems whose isolated points are periodic
    std::uint32_t generated_used = 0;
    for (std::uint64_t seed = 0; seed < 40 && generated_used < 2; ++seed) {
        const fixtures::Fixture fx = fixtures::random_finite_xprime_fixture(opts.seed + seed);
        if (!fx.metadata.all_points_eventually_periodic) continue;
        const DynMap f = fx.as_map();
        OrbitAnalyzer orbits(f, 4096);
        const Point limit = Point::single(1, 1);
        // periodic members of the canonical sequence only (junk prefixes are
        // pre-periodic, Cor-3.6-style convergence needs periodic terms)
        std::vector<Point> periodic;
        for (std::uint32_t k = 0; periodic.size() <= convergence_window(50) && k < 2000; ++k) {
            const Point y = canonical_sequence_at(limit, k, f.space);
            const OrbitRecord& rec = orbits.analyze(y);
            if (rec.eventually_periodic() && rec.ep().transient == 0) periodic.push_back(y);
        }
        if (periodic.size() <= convergence_window(50)) continue;
        auto terms = std::make_shared<std::vector<Point>>(std::move(periodic));
        PointFamily pf{[terms](std::uint32_t k) { return terms->at(k); },
                       "periodic canonical subfamily"};
        const auto target = std::get<std::vector<Point>>(omega_limit(f, limit, 4096));
        pos_ok = pos_ok && orbit_set_converges(f, pf, target, 50, 4096).converged;
        ++generated_used;
    }

    std::ostringstream detail;
    detail << "descending shift: orbit sets escape every tail of the top fixed point, witness "
           << "replayed; periodic families on the swap cycle, the identity and "
           << generated_used << " generated systems converge to the limit orbit at depth 50";
    return finish("A9", neg_ok && pos_ok && generated_used >= 1, detail.str(), timer);
}

std::vector<CriterionResult> run_suite(bool include_generator_criteria, const Options& opts) {
    std::vector<CriterionResult> out;
    out.push_back(run_A1_oracle_equivalence(opts));
    out.push_back(run_A2_semigroup_law(opts));
    out.push_back(run_A3_power_law(opts));
    out.push_back(run_A4_crt(opts));
    out.push_back(run_A5_discontinuity_at_top(opts));
    out.push_back(run_A6_continuity_of_half_rule(opts));
    out.push_back(run_A7_orbit_table(opts));
    if (include_generator_criteria) {
        out.push_back(run_A8_dichotomy(opts));
        out.push_back(run_A9_set_convergence(opts));
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream out;
    out << "[" << r.id << "] " << (r.pass ? "PASS" : "FAIL") << " (";
    out.precision(2);
    out << std::fixed << r.seconds << "s) " << r.detail;
    return out.str();
}

}  // namespace ordyn::repro
