#include "ordyn/continuity.hpp"

#include <algorithm>

#include "ordyn/numtheory.hpp"

namespace ordyn {

std::string to_string(ContinuityVerdict::Status s) {
    switch (s) {
        case ContinuityVerdict::Status::DiscontinuousCertified: return "discontinuous-certified";
        case ContinuityVerdict::Status::ContinuousCertified: return "continuous-certified";
        case ContinuityVerdict::Status::ContinuousAtDepth: return "continuous-at-depth";
        case ContinuityVerdict::Status::Unresolved: return "unresolved";
    }
    return "?";
}

namespace {

bool orbit_has_isolated_point(OrbitAnalyzer& orbits, const Point& x) {
    const OrbitRecord& rec = orbits.analyze(x);
    if (rec.eventually_periodic()) {
        for (const Point& y : rec.ep().listing)
            if (y.trailing_exp() == 0) return true;
        return false;
    }
    // Infinite or unresolved orbit: scan a finite prefix.
    Point cur = x;
    for (int i = 0; i < 64; ++i) {
        if (cur.trailing_exp() == 0) return true;
        cur = orbits.map().apply(cur);
    }
    return false;
}

}  // namespace

std::optional<ContinuityVerdict> isolated_orbit_shortcut(const DynMap& f, const Point& x,
                                                         std::uint64_t budget) {
    OrbitAnalyzer orbits(f, budget);
    if (!orbit_has_isolated_point(orbits, x)) return std::nullopt;
    return ContinuityVerdict{ContinuityVerdict::Status::ContinuousCertified, x, "", "isolated-orbit",
                             0, std::nullopt};
}

ContinuityAnalyzer::ContinuityAnalyzer(DynMap f, ResidueSystem p,
                                       const ContinuityCertifier* certifier, std::uint64_t budget)
    : f_(std::move(f)),
      p_(std::move(p)),
      certifier_(certifier),
      owned_orbits_(std::make_unique<OrbitAnalyzer>(f_, budget)),
      orbits_(owned_orbits_.get()) {}

ContinuityAnalyzer::ContinuityAnalyzer(OrbitAnalyzer& shared_orbits, ResidueSystem p,
                                       const ContinuityCertifier* certifier)
    : f_(shared_orbits.map()), p_(std::move(p)), certifier_(certifier), orbits_(&shared_orbits) {}

PIterateResult ContinuityAnalyzer::image_of(const Point& x) {
    auto it = images_.find(x);
    if (it != images_.end()) return it->second;
    PIterateResult r = p_iterate_point(*orbits_, p_, x);
    images_.emplace(x, r);
    return r;
}

std::optional<ContinuityVerdict> ContinuityAnalyzer::verify_counter_family(
    const PointFamily& family, const Point& x, const Point& gx, std::uint32_t depth) {
    const std::uint32_t window = convergence_window(depth);
    for (std::uint32_t k = 0; k <= window; ++k) {
        if (std::holds_alternative<Unresolved>(image_of(family.at(k)))) return std::nullopt;
    }
    PointFamily images{
        [this, family](std::uint32_t k) { return std::get<Point>(image_of(family.at(k))); },
        "images of " + family.description};
    ConvergenceResult escape = converges_to(images, gx, depth, f_.space);
    if (escape.converged) return std::nullopt;
    if (!converges_to(family, x, depth, f_.space).converged) return std::nullopt;
    return ContinuityVerdict{
        ContinuityVerdict::Status::DiscontinuousCertified, x, "f^p, p = " + p_.describe(), "", depth,
        DiscontinuityCertificate{family, gx, escape.witness->tail_index,
                                 escape.witness->violating_indices}};
}

ContinuityVerdict ContinuityAnalyzer::at(const Point& x, std::uint32_t depth, bool thorough) {
    f_.space.require(x);
    const std::string provenance = "f^p, p = " + p_.describe();

    if (orbit_has_isolated_point(*orbits_, x))
        return ContinuityVerdict{ContinuityVerdict::Status::ContinuousCertified, x, provenance,
                                 "isolated-orbit", depth, std::nullopt};

    PIterateResult gx_r = image_of(x);
    if (std::holds_alternative<Unresolved>(gx_r))
        return ContinuityVerdict{ContinuityVerdict::Status::Unresolved, x, provenance, "", depth,
                                 std::nullopt};
    const Point gx = std::get<Point>(gx_r);
    const std::uint32_t rank = cb_rank(x, f_.space);

    // Witness search over the family shapes the tail structure suggests: the
    // canonical sequence, and at rank >= 2 diagonals through the grid of
    // canonical sequences of the intermediate limit points.
    std::vector<PointFamily> families;
    families.push_back(canonical_sequence(x, f_.space));
    if (rank >= 2) {
        const Point anchor = x;
        const SpaceSpec space = f_.space;
        auto diagonal = [anchor, space](std::function<std::pair<std::uint32_t, std::uint32_t>(
                                            std::uint32_t)> pick,
                                        std::string description) {
            return PointFamily{[anchor, space, pick](std::uint32_t k) {
                                   auto [c, i] = pick(k);
                                   return canonical_sequence_at(
                                       canonical_sequence_at(anchor, c, space), i, space);
                               },
                               std::move(description)};
        };
        families.push_back(diagonal(
            [](std::uint32_t k) { return std::make_pair(k + 1, k + 1); },
            "diagonal family through the canonical grid of " + x.str()));
        families.push_back(diagonal(
            [](std::uint32_t k) {
                const auto q = static_cast<std::uint32_t>(nth_prime(k));
                return std::make_pair(q, q - 1);
            },
            "prime-indexed diagonal family of " + x.str()));
        families.push_back(diagonal(
            [](std::uint32_t k) {
                const auto q = static_cast<std::uint32_t>(nth_prime(k));
                return std::make_pair(q, q);
            },
            "shifted prime diagonal family of " + x.str()));
    }

    const std::uint32_t window = convergence_window(depth);
    for (const PointFamily& fam : families) {
        bool unresolved = false;
        for (std::uint32_t k = 0; k <= window && !unresolved; ++k)
            unresolved = std::holds_alternative<Unresolved>(image_of(fam.at(k)));
        if (unresolved)
            return ContinuityVerdict{ContinuityVerdict::Status::Unresolved, x, provenance, "",
                                     depth, std::nullopt};
        if (auto v = verify_counter_family(fam, x, gx, depth)) return *v;
    }

    if (certifier_) {
        ContinuityCertifier::Analysis a = certifier_->analyze(f_, p_, x);
        if (a.kind == ContinuityCertifier::Analysis::Kind::Continuous)
            return ContinuityVerdict{ContinuityVerdict::Status::ContinuousCertified, x, provenance,
                                     a.method, depth, std::nullopt};
        if (a.kind == ContinuityCertifier::Analysis::Kind::CounterFamily) {
            if (auto v = verify_counter_family(*a.counter, x, gx, depth)) return *v;
        }
    }

    if (thorough) {
        // Neighborhood-base criterion at depth: for every tail V_j of g(x)
        // look for a tail U_i of x with g[U_i] inside V_j; cofinal failures
        // are turned back into a verified witness family. The candidate cap
        // leaves room for bad sets that grow at half the column index.
        const std::uint64_t scan_cap = 2 * convergence_window(depth) + 2 * depth + 8;
        std::vector<Point> candidates = truncation(f_.space, scan_cap);
        NbhdBasis gbasis(gx, f_.space);
        NbhdBasis xbasis(x, f_.space);
        for (std::uint32_t j = 0; j <= depth; ++j) {
            const TailSet vj = gbasis.tail(j);
            auto bads = std::make_shared<std::vector<Point>>();
            for (const Point& y : candidates) {
                if (!(y < x)) continue;
                PIterateResult img = image_of(y);
                if (std::holds_alternative<Unresolved>(img))
                    return ContinuityVerdict{ContinuityVerdict::Status::Unresolved, x, provenance,
                                             "", depth, std::nullopt};
                if (!vj.contains(std::get<Point>(img))) bads->push_back(y);
            }
            if (bads->empty()) continue;
            // The witness family is sampled out to the convergence window, so
            // the bad set must reach beyond that tail; a bounded bad set means
            // some tested tail of x is clean.
            const Point gamma_deep = canonical_sequence_at(x, convergence_window(depth), f_.space);
            if (!(bads->back() > gamma_deep)) continue;
            const SpaceSpec space = f_.space;
            const Point anchor = x;
            PointFamily fam{
                [bads, anchor, space](std::uint32_t i) {
                    const Point gamma = canonical_sequence_at(anchor, i, space);
                    auto it = std::upper_bound(bads->begin(), bads->end(), gamma);
                    return it == bads->end() ? bads->back() : *it;
                },
                "neighborhood-base scan family toward " + x.str() + " (image tail " +
                    std::to_string(j) + ")"};
            if (auto v = verify_counter_family(fam, x, gx, depth)) return *v;
        }
    }

    return ContinuityVerdict{ContinuityVerdict::Status::ContinuousAtDepth, x, provenance, "", depth,
                             std::nullopt};
}

ContinuityVerdict continuity_at(const DynMap& f, const ResidueSystem& p, const Point& x,
                                std::uint32_t depth, const ContinuityCertifier* certifier,
                                std::uint64_t budget) {
    ContinuityAnalyzer analyzer(f, p, certifier, budget);
    return analyzer.at(x, depth, true);
}

ContinuityVerdict continuity_at(const MapSpec& f, const ResidueSystem& p, const Point& x,
                                std::uint32_t depth, const ContinuityCertifier* certifier,
                                std::uint64_t budget) {
    if (f.is_identity()) {
        f.space().require(x);
        return ContinuityVerdict{ContinuityVerdict::Status::ContinuousCertified, x,
                                 "f^p, p = " + p.describe(), "identity", depth, std::nullopt};
    }
    return continuity_at(f.as_map(), p, x, depth, certifier, budget);
}

bool replay_certificate(const DynMap& f, const ResidueSystem& p, const ContinuityVerdict& verdict,
                        std::uint32_t depth, std::uint64_t budget) {
    if (!verdict.certificate) return false;
    const DiscontinuityCertificate& cert = *verdict.certificate;
    OrbitAnalyzer orbits(f, budget);

    PIterateResult at_point = p_iterate_point(orbits, p, verdict.point);
    if (std::holds_alternative<Unresolved>(at_point)) return false;
    if (!(std::get<Point>(at_point) == cert.image_target)) return false;

    if (!converges_to(cert.family, verdict.point, depth, f.space).converged) return false;

    const std::uint32_t window = convergence_window(depth);
    for (std::uint32_t k = 0; k <= window; ++k) {
        if (std::holds_alternative<Unresolved>(p_iterate_point(orbits, p, cert.family.at(k))))
            return false;
    }
    PointFamily images{[&](std::uint32_t k) {
                           return std::get<Point>(p_iterate_point(orbits, p, cert.family.at(k)));
                       },
                       "replayed images of " + cert.family.description};
    return !converges_to(images, cert.image_target, depth, f.space).converged;
}

DichotomyReport dichotomy_scan(const DynMap& f, bool accumulation_points_periodic,
                               const std::vector<ResidueSystem>& samples,
                               std::uint64_t truncation_cap, std::uint32_t depth,
                               const ContinuityCertifier* certifier, bool thorough,
                               std::uint64_t budget) {
    DichotomyReport report;
    report.accumulation_points_periodic = accumulation_points_periodic;
    for (const Point& x : truncation(f.space, truncation_cap))
        if (x.trailing_exp() >= 1) report.points.push_back(x);
    for (const ResidueSystem& p : samples) report.samples.push_back(p.describe());

    report.grid.assign(report.points.size(), {});
    OrbitAnalyzer shared_orbits(f, budget);
    std::vector<std::vector<ContinuityVerdict::Status>> by_sample;
    for (const ResidueSystem& p : samples) {
        ContinuityAnalyzer analyzer(shared_orbits, p, certifier);
        std::vector<ContinuityVerdict::Status> col;
        col.reserve(report.points.size());
        for (const Point& x : report.points) col.push_back(analyzer.at(x, depth, thorough).status);
        by_sample.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        bool any_cont = false, any_disc = false, any_unresolved = false;
        for (std::size_t s = 0; s < samples.size(); ++s) {
            const ContinuityVerdict::Status st = by_sample[s][i];
            report.grid[i].push_back(st);
            if (st == ContinuityVerdict::Status::DiscontinuousCertified) any_disc = true;
            else if (st == ContinuityVerdict::Status::Unresolved) any_unresolved = true;
            else any_cont = true;
        }
        if (any_unresolved) report.unresolved_points.push_back(report.points[i]);
        if (any_cont && any_disc) report.mixed_points.push_back(report.points[i]);
    }
    report.homogeneous = report.mixed_points.empty();
    if (accumulation_points_periodic) report.falsifications = report.mixed_points;
    return report;
}

}  // namespace ordyn
