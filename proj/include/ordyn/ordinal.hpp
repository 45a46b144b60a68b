#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordyn/errors.hpp"

namespace ordyn {

// One Cantor-normal-form term w^exp * coeff.
struct Term {
    std::uint32_t exp;
    std::uint64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

// An ordinal < w^w in Cantor normal form: a strictly descending list of terms
// with positive coefficients. The empty list is 0.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Term> terms);  // validates shape

    static Point zero() { return Point(); }
    static Point finite(std::uint64_t n);
    static Point single(std::uint32_t exp, std::uint64_t coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_successor() const { return digit(0) > 0; }
    bool is_limit() const { return !terms_.empty() && digit(0) == 0; }

    // Exponent of the trailing (smallest) term; 0 for the zero point.
    std::uint32_t trailing_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }
    std::uint32_t leading_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }

    std::uint64_t digit(std::uint32_t e) const;
    Point with_digit(std::uint32_t e, std::uint64_t c) const;
    // Drop all terms with exponent < e.
    Point drop_below(std::uint32_t e) const;

    const std::vector<Term>& terms() const { return terms_; }

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b);
    friend bool operator<=(const Point& a, const Point& b) { return a == b || a < b; }
    friend bool operator>(const Point& a, const Point& b) { return b < a; }
    friend bool operator>=(const Point& a, const Point& b) { return b <= a; }

    // Canonical text form: `w^2*3+w+7`, `0`. parse() round-trips bit-exactly.
    std::string str() const;
    static Point parse(const std::string& text);

private:
    std::vector<Term> terms_;
};

struct PointHash {
    std::size_t operator()(const Point& p) const;
};

// The ordinal interval [0, top] with its order topology.
struct SpaceSpec {
    Point top;
    std::string name;

    bool contains(const Point& p) const { return p <= top; }
    void require(const Point& p) const;
};

// An indexed family k -> Point, with a printable description.
struct PointFamily {
    std::function<Point(std::uint32_t)> at;
    std::string description;
};

// Cantor-Bendixson rank of x in [0, top]: the trailing CNF exponent.
// Rank 0 means isolated (zero or a successor).
std::uint32_t cb_rank(const Point& x, const SpaceSpec& X);

// k-th element of the fundamental sequence increasing to the limit point x:
// for x = delta + w^e*c this is delta + w^e*(c-1) + w^(e-1)*k.
Point canonical_sequence_at(const Point& x, std::uint32_t k, const SpaceSpec& X);
PointFamily canonical_sequence(const Point& x, const SpaceSpec& X);

// A basic clopen tail (lo, hi]; lo == nullopt encodes the singleton {hi}
// used as the neighborhood base of an isolated point.
struct TailSet {
    std::optional<Point> lo;
    Point hi;

    bool contains(const Point& y) const;
    std::string str() const;
};

// T_k = (canonical_sequence(x)(k), x]; requires cb_rank(x) >= 1.
TailSet tail_set(const Point& x, std::uint32_t k, const SpaceSpec& X);

// Neighborhood base at a point: indexed shrinking clopen tails.
class NbhdBasis {
public:
    NbhdBasis(Point anchor, const SpaceSpec& space);
    TailSet tail(std::uint32_t k) const;
    const Point& anchor() const { return anchor_; }

private:
    Point anchor_;
    SpaceSpec space_;
    bool isolated_;
};

struct ConvergenceWitness {
    std::uint32_t tail_index;
    std::vector<std::uint32_t> violating_indices;  // sample, includes late ones
};

struct ConvergenceResult {
    bool converged;
    std::uint32_t depth;
    std::optional<ConvergenceWitness> witness;  // set iff !converged
};

// Depth-bounded semi-decision of family -> x. Tails T_0..T_depth are tested
// against sample indices 0..convergence_window(depth); a violation beyond
// convergence_late_threshold(depth) certifies "no" (the cofinal pattern),
// violations confined to the early window are treated as transient.
std::uint32_t convergence_window(std::uint32_t depth);
std::uint32_t convergence_late_threshold(std::uint32_t depth);
ConvergenceResult converges_to(const PointFamily& family, const Point& x,
                               std::uint32_t depth, const SpaceSpec& X);

// All points of X with every CNF coefficient <= cap, ascending.
std::vector<Point> truncation(const SpaceSpec& X, std::uint64_t cap);

}  // namespace ordyn
