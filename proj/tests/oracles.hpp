#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ordyn/ordinal.hpp"

namespace oracles {

using ordyn::Point;
using ordyn::SpaceSpec;

// Cantor-Bendixson rank by iterated topological derivatives, computed from
// the sup structure rather than from the CNF shape: level 0 is a coefficient
// grid, and level k+1 collects the exact suprema of strictly increasing
// parametric families  base + w^e * j (j = 1, 2, ...)  that eventually stay
// inside level k. The supremum of such a family is (base truncated above e)
// + w^(e+1), which is ordinal arithmetic independent of the rank formula.
class DerivativeRankOracle {
public:
    DerivativeRankOracle(const SpaceSpec& space, std::uint64_t grid_cap)
        : space_(space), cap_(grid_cap) {
        levels_.push_back(grid(space, grid_cap));
        const std::uint32_t max_exp = space.top.leading_exp();
        for (std::uint32_t k = 0; k < max_exp; ++k) {
            std::set<Point> next = derivative(levels_.back());
            if (next.empty()) break;
            levels_.push_back(std::move(next));
        }
    }

    std::uint32_t rank(const Point& x) const {
        std::uint32_t r = 0;
        for (std::size_t k = 1; k < levels_.size(); ++k)
            if (levels_[k].count(x)) r = static_cast<std::uint32_t>(k);
        return r;
    }

private:
    static std::set<Point> grid(const SpaceSpec& space, std::uint64_t cap) {
        auto pts = ordyn::truncation(space, cap);
        return {pts.begin(), pts.end()};
    }

    std::set<Point> derivative(const std::set<Point>& level) const {
        const std::uint32_t probe = 6;  // family members required inside the level
        std::set<Point> next;
        for (const Point& base : levels_.front()) {
            for (std::uint32_t e = 0; e <= space_.top.leading_exp(); ++e) {
                if (base.digit(e) + probe > cap_) continue;  // family escapes the grid
                bool inside = true;
                for (std::uint32_t j = 1; j <= probe && inside; ++j)
                    inside = level.count(base.with_digit(e, base.digit(e) + j)) > 0;
                if (!inside) continue;
                // sup_j (base + w^e * j) = (base above e) + w^(e+1)
                Point sup = base.drop_below(e + 1);
                sup = sup.with_digit(e + 1, sup.digit(e + 1) + 1);
                if (space_.contains(sup)) next.insert(sup);
            }
        }
        return next;
    }

    SpaceSpec space_;
    std::uint64_t cap_;
    std::vector<std::set<Point>> levels_;
};

}  // namespace oracles
