#include "ordyn/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ordyn {

Point::Point(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff == 0) throw DomainError("CNF coefficient must be positive");
        if (i > 0 && terms_[i - 1].exp <= terms_[i].exp)
            throw DomainError("CNF exponents must be strictly decreasing");
    }
}

Point Point::finite(std::uint64_t n) {
    if (n == 0) return Point();
    return Point({Term{0, n}});
}

Point Point::single(std::uint32_t exp, std::uint64_t coeff) {
    if (coeff == 0) return Point();
    return Point({Term{exp, coeff}});
}

std::uint64_t Point::digit(std::uint32_t e) const {
    for (const Term& t : terms_) {
        if (t.exp == e) return t.coeff;
        if (t.exp < e) break;
    }
    return 0;
}

Point Point::with_digit(std::uint32_t e, std::uint64_t c) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + 1);
    bool placed = false;
    for (const Term& t : terms_) {
        if (t.exp > e) {
            out.push_back(t);
        } else if (t.exp == e) {
            if (c > 0) out.push_back(Term{e, c});
            placed = true;
        } else {
            if (!placed) {
                if (c > 0) out.push_back(Term{e, c});
                placed = true;
            }
            out.push_back(t);
        }
    }
    if (!placed && c > 0) out.push_back(Term{e, c});
    return Point(std::move(out));
}

Point Point::drop_below(std::uint32_t e) const {
    std::vector<Term> out;
    for (const Term& t : terms_)
        if (t.exp >= e) out.push_back(t);
    return Point(std::move(out));
}

bool operator<(const Point& a, const Point& b) {
    const auto& x = a.terms_;
    const auto& y = b.terms_;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i].exp != y[i].exp) return x[i].exp < y[i].exp;
        if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff;
    }
    return x.size() < y.size();
}

std::string Point::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) out << '+';
        first = false;
        if (t.exp == 0) {
            out << t.coeff;
        } else {
            if (t.exp == 1)
                out << 'w';
            else
                out << "w^" << t.exp;
            if (t.coeff != 1) out << '*' << t.coeff;
        }
    }
    return out.str();
}

namespace {

// Minimal recursive-descent reader for the point grammar.
struct PointReader {
    const std::string& s;
    std::size_t pos = 0;

    explicit PointReader(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    }

    std::uint64_t number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected number");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            ++pos;
        }
        return v;
    }

    Term term() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            std::uint32_t exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = static_cast<std::uint32_t>(number());
            }
            std::uint64_t coeff = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                coeff = number();
                if (coeff == 0) fail("coefficient must be positive");
            }
            return Term{exp, coeff};
        }
        std::uint64_t n = number();
        if (n == 0) fail("0 is only valid as the whole point");
        return Term{0, n};
    }

    Point point() {
        skip_ws();
        if (pos < s.size() && s[pos] == '0') {
            std::size_t save = pos;
            ++pos;
            skip_ws();
            if (pos == s.size()) return Point::zero();
            pos = save;
        }
        std::vector<Term> terms;
        terms.push_back(term());
        skip_ws();
        while (pos < s.size() && s[pos] == '+') {
            ++pos;
            terms.push_back(term());
            skip_ws();
        }
        if (pos != s.size()) fail("trailing input after point");
        for (std::size_t i = 1; i < terms.size(); ++i)
            if (terms[i - 1].exp <= terms[i].exp) fail("exponents must strictly decrease");
        return Point(std::move(terms));
    }
};

}  // namespace

Point Point::parse(const std::string& text) {
    PointReader reader(text);
    return reader.point();
}

std::size_t PointHash::operator()(const Point& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const Term& t : p.terms()) {
        h ^= std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(t.exp) << 48) ^ t.coeff) +
             0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

void SpaceSpec::require(const Point& p) const {
    if (!contains(p))
        throw DomainError("point " + p.str() + " is outside " +
                          (name.empty() ? "[0," + top.str() + "]" : name));
}

std::uint32_t cb_rank(const Point& x, const SpaceSpec& X) {
    X.require(x);
    return x.trailing_exp();
}

Point canonical_sequence_at(const Point& x, std::uint32_t k, const SpaceSpec& X) {
    if (cb_rank(x, X) == 0)
        throw DomainError("point " + x.str() + " is isolated: no fundamental sequence");
    const Term last = x.terms().back();
    Point base = x.with_digit(last.exp, last.coeff - 1);
    return base.with_digit(last.exp - 1, k);
}

PointFamily canonical_sequence(const Point& x, const SpaceSpec& X) {
    Point anchor = x;
    SpaceSpec space = X;
    return PointFamily{
        [anchor, space](std::uint32_t k) { return canonical_sequence_at(anchor, k, space); },
        "canonical sequence of " + x.str()};
}

bool TailSet::contains(const Point& y) const {
    if (!lo) return y == hi;
    return *lo < y && y <= hi;
}

std::string TailSet::str() const {
    if (!lo) return "{" + hi.str() + "}";
    return "(" + lo->str() + ", " + hi.str() + "]";
}

TailSet tail_set(const Point& x, std::uint32_t k, const SpaceSpec& X) {
    if (cb_rank(x, X) == 0)
        throw DomainError("tail_set: " + x.str() + " is isolated");
    return TailSet{canonical_sequence_at(x, k, X), x};
}

NbhdBasis::NbhdBasis(Point anchor, const SpaceSpec& space)
    : anchor_(std::move(anchor)), space_(space), isolated_(cb_rank(anchor_, space) == 0) {}

TailSet NbhdBasis::tail(std::uint32_t k) const {
    if (isolated_) return TailSet{std::nullopt, anchor_};
    return tail_set(anchor_, k, space_);
}

std::uint32_t convergence_window(std::uint32_t depth) { return 4 * depth + 8; }
std::uint32_t convergence_late_threshold(std::uint32_t depth) { return 2 * depth + 4; }

ConvergenceResult converges_to(const PointFamily& family, const Point& x,
                               std::uint32_t depth, const SpaceSpec& X) {
    X.require(x);
    const std::uint32_t window = convergence_window(depth);
    const std::uint32_t late = convergence_late_threshold(depth);
    NbhdBasis basis(x, X);

    std::vector<Point> samples;
    samples.reserve(window + 1);
    for (std::uint32_t k = 0; k <= window; ++k) samples.push_back(family.at(k));

    for (std::uint32_t j = 0; j <= depth; ++j) {
        const TailSet tail = basis.tail(j);
        std::vector<std::uint32_t> violations;
        bool has_late = false;
        for (std::uint32_t k = 0; k <= window; ++k) {
            if (!tail.contains(samples[k])) {
                if (violations.size() < 64) violations.push_back(k);
                if (k > late) has_late = true;
            }
        }
        if (has_late)
            return ConvergenceResult{false, depth,
                                     ConvergenceWitness{j, std::move(violations)}};
    }
    return ConvergenceResult{true, depth, std::nullopt};
}

namespace {

void enumerate_digits(const SpaceSpec& X, std::uint64_t cap, std::uint32_t e,
                      Point acc, std::vector<Point>& out) {
    // acc holds digits for exponents > e already fixed.
    for (std::uint64_t c = 0; c <= cap; ++c) {
        Point cur = acc.with_digit(e, c);
        if (cur > X.top) break;
        if (e == 0) {
            out.push_back(cur);
        } else {
            enumerate_digits(X, cap, e - 1, cur, out);
        }
    }
}

}  // namespace

std::vector<Point> truncation(const SpaceSpec& X, std::uint64_t cap) {
    std::vector<Point> out;
    const std::uint32_t top_exp = X.top.leading_exp();
    enumerate_digits(X, cap, top_exp, Point::zero(), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ordyn
