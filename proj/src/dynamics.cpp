#include "ordyn/dynamics.hpp"

#include <algorithm>

namespace ordyn {

namespace {

constexpr std::uint32_t kMaxCycleSearchPeriod = 64;
constexpr std::uint32_t kCycleEvidenceDepth = 12;

// Least point of rank >= r that is >= z.
Point round_up_to_rank(const Point& z, std::uint32_t r) {
    if (!z.is_zero() && z.trailing_exp() >= r) return z;
    Point base = z.drop_below(r);
    return base.with_digit(r, base.digit(r) + 1);
}

// Detect an infinite orbit converging to a periodic cycle: scan candidate
// step sizes l and verify tail absorption of the subsampled trajectory.
std::optional<ConvergesToCycle> detect_cycle_convergence(const DynMap& f,
                                                         const std::vector<Point>& traj) {
    const std::uint32_t depth = kCycleEvidenceDepth;
    const std::uint32_t window = convergence_window(depth);
    const std::uint32_t max_rank = f.space.top.leading_exp();
    for (std::uint32_t l = 1; l <= kMaxCycleSearchPeriod; ++l) {
        if (static_cast<std::uint64_t>(l) * window >= traj.size()) break;
        PointFamily sub{[&traj, l](std::uint32_t k) { return traj[static_cast<std::size_t>(l) * k]; },
                        "subsampled trajectory, step " + std::to_string(l)};
        // Candidate limits come from the late window; a transient head would
        // otherwise dominate the rounding.
        const std::uint32_t late = convergence_late_threshold(depth);
        Point zmax = sub.at(late + 1);
        for (std::uint32_t k = late + 2; k <= window; ++k) zmax = std::max(zmax, sub.at(k));
        for (std::uint32_t r = 1; r <= max_rank; ++r) {
            const Point y = round_up_to_rank(zmax, r);
            if (!f.space.contains(y)) continue;
            if (!converges_to(sub, y, depth, f.space).converged) continue;
            // The limit must be periodic with exactly this step size.
            Point cur = y;
            bool back = false;
            for (std::uint32_t s = 1; s <= l; ++s) {
                cur = f.apply(cur);
                if (cur == y) {
                    back = s == l;
                    break;
                }
            }
            if (!back) continue;
            // The whole trajectory suffix must already live inside the deepest
            // tested neighborhood of the limit cycle.
            std::vector<TailSet> around;
            Point cyc = y;
            for (std::uint32_t i = 0; i < l; ++i) {
                around.push_back(NbhdBasis(cyc, f.space).tail(depth));
                cyc = f.apply(cyc);
            }
            bool trapped = true;
            for (std::size_t s = traj.size() - std::min<std::size_t>(traj.size(), window);
                 s < traj.size() && trapped; ++s) {
                bool inside = false;
                for (const TailSet& t : around)
                    if (t.contains(traj[s])) { inside = true; break; }
                trapped = inside;
            }
            if (!trapped) continue;
            return ConvergesToCycle{y, l, 0, depth};
        }
    }
    return std::nullopt;
}

}  // namespace

OrbitRecord orbit_analyze(const DynMap& f, const Point& x, std::uint64_t budget) {
    f.space.require(x);
    std::unordered_map<Point, std::uint32_t, PointHash> seen;
    std::vector<Point> traj;
    traj.reserve(512);
    Point cur = x;
    // The full repeat budget is spent before any convergence detection: a
    // cycle longer than the sampled window would otherwise masquerade as
    // convergence toward a limit point.
    for (std::uint64_t step = 0; step <= budget; ++step) {
        auto [it, fresh] = seen.emplace(cur, static_cast<std::uint32_t>(step));
        if (!fresh) {
            const std::uint32_t first = it->second;
            const std::uint32_t period = static_cast<std::uint32_t>(step) - first;
            traj.resize(first + period);
            return OrbitRecord{EventuallyPeriodic{first, period, std::move(traj)}};
        }
        traj.push_back(cur);
        cur = f.apply(cur);
    }
    if (auto ctc = detect_cycle_convergence(f, traj)) return OrbitRecord{std::move(*ctc)};
    return OrbitRecord{Unresolved{budget}};
}

const OrbitRecord& OrbitAnalyzer::analyze(const Point& x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(x, orbit_analyze(f_, x, budget_)).first->second;
}

std::variant<std::vector<Point>, Unresolved> omega_limit(const DynMap& f, const Point& x,
                                                         std::uint64_t budget) {
    OrbitRecord rec = orbit_analyze(f, x, budget);
    if (rec.unresolved()) return std::get<Unresolved>(rec.kind);
    std::vector<Point> out;
    if (rec.eventually_periodic()) {
        const EventuallyPeriodic& ep = rec.ep();
        out.assign(ep.listing.begin() + ep.transient, ep.listing.end());
    } else {
        const ConvergesToCycle& c = rec.ctc();
        Point cur = c.cycle_point;
        for (std::uint32_t i = 0; i < c.period; ++i) {
            out.push_back(cur);
            cur = f.apply(cur);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SetConvergenceResult orbit_set_converges(const DynMap& f, const PointFamily& family,
                                         const std::vector<Point>& target,
                                         std::uint32_t depth, std::uint64_t budget) {
    if (target.empty()) throw DomainError("orbit_set_converges: empty target set");
    const std::uint32_t window = convergence_window(depth);
    const std::uint32_t late = convergence_late_threshold(depth);

    std::vector<NbhdBasis> bases;
    bases.reserve(target.size());
    for (const Point& y : target) bases.emplace_back(y, f.space);

    std::vector<std::vector<Point>> orbits;
    orbits.reserve(window + 1);
    for (std::uint32_t k = 0; k <= window; ++k) {
        const Point xk = family.at(k);
        OrbitRecord rec = orbit_analyze(f, xk, budget);
        if (!rec.eventually_periodic())
            throw Error("orbit_set_converges: orbit of " + xk.str() +
                        " (index " + std::to_string(k) + ") did not resolve as eventually periodic");
        orbits.push_back(rec.ep().listing);
    }

    for (std::uint32_t j = 0; j <= depth; ++j) {
        std::vector<TailSet> tails;
        tails.reserve(bases.size());
        for (const NbhdBasis& b : bases) tails.push_back(b.tail(j));
        for (std::uint32_t k = late + 1; k <= window; ++k) {
            for (const Point& z : orbits[k]) {
                bool inside = false;
                for (const TailSet& t : tails)
                    if (t.contains(z)) { inside = true; break; }
                if (!inside)
                    return SetConvergenceResult{false, depth,
                                                SetConvergenceWitness{k, z, j}};
            }
        }
    }
    return SetConvergenceResult{true, depth, std::nullopt};
}

}  // namespace ordyn
