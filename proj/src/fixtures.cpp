#include "ordyn/fixtures.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ordyn/dynamics.hpp"
#include "ordyn/iterates.hpp"
#include "ordyn/numtheory.hpp"

namespace ordyn::fixtures {

namespace {

using dsl::Clause;
using dsl::CoeffPattern;
using dsl::Expr;
using dsl::ExprPtr;
using dsl::GuardAtom;
using dsl::Output;
using dsl::OutputTerm;
using dsl::Pattern;
using dsl::PatternTerm;

constexpr const char* kOmega2Source = R"(# column-cycle system on [0, w^2]
w^2 -> w^2 ;
w*m -> w^2 if m = 1 ;
w*m -> w*(m-1) if m > 1 ;
(n-1) -> w*(n-1)+(n-1) if prime(n) ;
(n-1) -> w^2 ;
w*(m-1)+(n-1) -> w*(m-2)+(n-2) if prime(n), m > n ;
w*(m-1)+(n-1) -> w*(m-2)+(n-1) ;
)";

void spot_validate(const Fixture& fixture, std::uint64_t cap, std::uint32_t depth) {
    fixture.map.validate_total(cap);
    MapContinuityResult cont = validate_continuous(fixture.map, depth);
    if (!cont.ok)
        throw Error("fixture " + fixture.name + ": map is not continuous at " +
                    cont.violation->at.str());
    DynMap f = fixture.as_map();
    OrbitAnalyzer orbits(f, 4096);
    bool all_ep = true;
    for (const Point& x : truncation(fixture.space, cap)) {
        const OrbitRecord& rec = orbits.analyze(x);
        if (rec.unresolved())
            throw Error("fixture " + fixture.name + ": unresolved orbit at " + x.str() + "\nmap:\n" + fixture.map.print());
        if (!rec.eventually_periodic()) all_ep = false;
        if (x.trailing_exp() >= 1 && fixture.metadata.accumulation_points_periodic) {
            if (!rec.eventually_periodic() || rec.ep().transient != 0)
                throw Error("fixture " + fixture.name + ": accumulation point " + x.str() +
                            " is not periodic");
        }
    }
    if (fixture.metadata.all_points_eventually_periodic && !all_ep)
        throw Error("fixture " + fixture.name + ": metadata claims all points eventually periodic");
}

// The exact continuity analysis of the omega2 fixture for affine residue
// rules l_q = (a*q + b)/c at primes. On a prime column of length q the
// p-iterate shifts the column index to ((m - 1 - l_q) mod q) + 1, so the
// verdict at a limit point is governed by the growth of that index.
class Omega2Certifier : public ContinuityCertifier {
public:
    Analysis analyze(const DynMap& f, const ResidueSystem& p, const Point& x) const override {
        Analysis none;
        if (!(f.space.top == omega2_top())) return none;
        auto rule_opt = p.affine_rule();
        if (!rule_opt) return none;
        const AffinePrimeRule rule = *rule_opt;
        const std::int64_t c = rule.c;
        std::int64_t a = rule.a;
        const std::int64_t b = rule.b;
        if (c < 1 || a < 0 || a > c) return none;
        // For c = 2 the raw value must be integral at odd primes.
        if (c == 2 && ((a + b) % 2 + 2) % 2 != 0) return none;
        // Normalize to the residue actually used at large primes: a negative
        // constant wraps to slope one, a full slope with nonnegative offset
        // wraps back to a constant.
        if (a == 0 && b < 0) a = c;
        if (a == c && b >= 0) a = 0;

        // First prime where the normalized value lies in [0, q).
        std::int64_t start = 5;
        for (const Congruence& o : rule.overrides)
            start = std::max<std::int64_t>(start, static_cast<std::int64_t>(o.modulus) + 1);
        if (a == 0) start = std::max(start, b / c + 2);
        if (a == c) start = std::max(start, (-b) / c + 2);
        if (a > 0 && a < c)
            start = std::max(start, std::max((c - b) / a + 2, (b + c) / (c - a) + 2));

        const std::int64_t raw_a = rule.a;
        auto valid_prime = [raw_a, b, c, start](std::uint32_t k) {
            std::uint64_t q = static_cast<std::uint64_t>(start);
            std::uint32_t seen = 0;
            for (;; ++q) {
                if (!is_prime(q)) continue;
                if ((raw_a * static_cast<std::int64_t>(q) + b) % c != 0) continue;
                if (seen == k) return q;
                ++seen;
            }
        };
        // the residue used on a prime column of length q (normalized, in range)
        auto value_at = [a, b, c](std::uint64_t q) {
            return static_cast<std::uint64_t>((a * static_cast<std::int64_t>(q) + b) / c);
        };

        if (x == omega2_top()) {
            if (a == 0) {
                Analysis out;
                out.kind = Analysis::Kind::Continuous;
                out.method = "closed-form";
                return out;
            }
            Analysis out;
            out.kind = Analysis::Kind::CounterFamily;
            if (a == c) {
                // l_q = q + b/c: the main diagonal lands on a fixed low column.
                out.counter = PointFamily{
                    [valid_prime](std::uint32_t k) {
                        const std::uint64_t q = valid_prime(k);
                        return omega2_isolated(static_cast<std::uint32_t>(q),
                                               static_cast<std::uint32_t>(q));
                    },
                    "main-diagonal family (column = index) over primes"};
            } else {
                // Points one step above the residue value wrap to the column
                // bottom, so their images stay below the first limit point.
                out.counter = PointFamily{
                    [valid_prime, value_at](std::uint32_t k) {
                        const std::uint64_t q = valid_prime(k);
                        return omega2_isolated(static_cast<std::uint32_t>(value_at(q) + 1),
                                               static_cast<std::uint32_t>(q));
                    },
                    "wrap family (column = residue value + 1) over primes"};
            }
            return out;
        }

        if (x.is_limit() && x.leading_exp() == 1) {
            const std::uint64_t m = x.digit(1);
            Analysis out;
            if (a == c) {
                out.kind = Analysis::Kind::CounterFamily;
                out.counter = column_family(m, valid_prime);
                return out;
            }
            if (a == 0) {
                const std::uint64_t l = static_cast<std::uint64_t>(b / c);
                if (m > l) {
                    out.kind = Analysis::Kind::CounterFamily;
                    out.counter = column_family(m, valid_prime);
                    return out;
                }
            }
            out.kind = Analysis::Kind::Continuous;
            out.method = "closed-form";
            return out;
        }
        return none;
    }

private:
    template <typename NextPrime>
    static PointFamily column_family(std::uint64_t m, NextPrime valid_prime) {
        return PointFamily{
            [m, valid_prime](std::uint32_t k) {
                return omega2_isolated(static_cast<std::uint32_t>(m),
                                       static_cast<std::uint32_t>(valid_prime(k)));
            },
            "column-" + std::to_string(m) + " family over primes"};
    }
};

// --- programmatic clause construction helpers -------------------------------

ExprPtr e_const(std::int64_t v) { return Expr::constant(v); }
ExprPtr e_var(const std::string& n) { return Expr::var(n); }
ExprPtr e_add(ExprPtr a, ExprPtr b) { return Expr::binary(Expr::Op::Add, std::move(a), std::move(b)); }
ExprPtr e_sub(ExprPtr a, ExprPtr b) { return Expr::binary(Expr::Op::Sub, std::move(a), std::move(b)); }

PatternTerm pat_lit(std::uint32_t exp, std::uint64_t value) {
    return PatternTerm{exp, CoeffPattern{CoeffPattern::Kind::Literal, value, "", 0}};
}

PatternTerm pat_var(std::uint32_t exp, const std::string& name, std::int64_t shift = 0) {
    return PatternTerm{exp, CoeffPattern{CoeffPattern::Kind::Var, 0, name, shift}};
}

OutputTerm out_term(std::uint32_t exp, ExprPtr e) { return OutputTerm{exp, std::move(e)}; }

Output out_point(const Point& p) {
    Output out;
    if (p.is_zero()) {
        out.terms.push_back(out_term(0, e_const(0)));
        return out;
    }
    for (const Term& t : p.terms())
        out.terms.push_back(out_term(t.exp, e_const(static_cast<std::int64_t>(t.coeff))));
    return out;
}

GuardAtom guard_cmp(ExprPtr a, GuardAtom::Cmp cmp, ExprPtr b) {
    GuardAtom g;
    g.kind = GuardAtom::Kind::Cmp;
    g.cmp = cmp;
    g.a = std::move(a);
    g.b = std::move(b);
    return g;
}

Clause make_clause(Pattern pat, Output out, std::vector<GuardAtom> guard = {}) {
    Clause c;
    c.pattern = std::move(pat);
    c.output = std::move(out);
    c.guard = std::move(guard);
    return c;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Point random_junk_point(std::mt19937_64& rng, const SpaceSpec& space) {
    // A small pool of eventually periodic targets.
    switch (draw(rng, 3)) {
        case 0: return Point::finite(draw(rng, 3));
        case 1: {
            const std::uint64_t hi = std::max<std::uint64_t>(space.top.digit(space.top.leading_exp()), 1);
            Point p = Point::single(space.top.leading_exp() == 2 ? 2 : 1, 1 + draw(rng, hi));
            return space.contains(p) ? p : Point::finite(1);
        }
        default: return Point::finite(3 + draw(rng, 4));
    }
}

}  // namespace

std::string Fixture::to_dynmap() const {
    return "# fixture: " + name + "\n" + map.print();
}

Point omega2_isolated(std::uint32_t m, std::uint32_t n) {
    if (m == 0 || n == 0) throw DomainError("omega2_isolated: indices start at 1");
    return Point::zero().with_digit(1, m - 1).with_digit(0, n - 1);
}

Point omega2_limit(std::uint32_t m) {
    if (m == 0) throw DomainError("omega2_limit: index starts at 1");
    return Point::single(1, m);
}

Point omega2_top() { return Point::single(2, 1); }

Fixture example_omega2() {
    SpaceSpec space{omega2_top(), "example-omega2"};
    Fixture fixture{
        "example-omega2",
        space,
        MapSpec::parse(kOmega2Source, space),
        FixtureMetadata{
            false, true,
            "prime columns are n-cycles; rank-1 points are strictly pre-periodic, so the "
            "accumulation-point periodicity hypothesis fails; half-integer residue rules "
            "need an explicit value at 2"},
        std::make_shared<Omega2Certifier>()};
    spot_validate(fixture, 10, 6);
    return fixture;
}

Point closed_form_p_iterate(const ResidueSystem& p, const Point& x) {
    const SpaceSpec space{omega2_top(), "example-omega2"};
    space.require(x);
    if (x == omega2_top()) return x;
    if (x.is_limit()) return omega2_top();  // rank-1 points drain into the fixed top
    const std::uint64_t m = x.digit(1) + 1;
    const std::uint64_t n = x.digit(0) + 1;
    if (n == 1 || !is_prime(n) || m > n) return omega2_top();
    const std::uint64_t l = p.residue(n) % n;
    const std::uint64_t column = ((m - 1 + n - l) % n) + 1;
    return omega2_isolated(static_cast<std::uint32_t>(column), static_cast<std::uint32_t>(n));
}

Fixture two_endpoint_shift() {
    SpaceSpec space{Point::single(1, 1), "two-endpoint-shift"};
    const char* source =
        "w -> w ;\n"
        "0 -> 0 ;\n"
        "(k) -> k-1 ;\n";
    Fixture fixture{"two-endpoint-shift", space, MapSpec::parse(source, space),
                    FixtureMetadata{true, true,
                                    "descending shift with both endpoints fixed; orbits of the "
                                    "isolated points pile onto the bottom fixed point"},
                    nullptr};
    spot_validate(fixture, 12, 8);
    return fixture;
}

Fixture forward_shift() {
    SpaceSpec space{Point::single(1, 1), "forward-shift"};
    const char* source =
        "w -> w ;\n"
        "(k) -> k+1 ;\n";
    Fixture fixture{"forward-shift", space, MapSpec::parse(source, space),
                    FixtureMetadata{true, false,
                                    "ascending shift; every isolated orbit marches to the single "
                                    "fixed limit point, so each free iterate is constant there"},
                    nullptr};
    spot_validate(fixture, 12, 8);
    return fixture;
}

Fixture identity_fixture() {
    SpaceSpec space{Point::single(1, 1), "identity"};
    Fixture fixture{"identity", space, MapSpec::parse("x -> x ;", space),
                    FixtureMetadata{true, true, "identity map"}, nullptr};
    spot_validate(fixture, 12, 8);
    return fixture;
}

Fixture swap_cycle() {
    SpaceSpec space{Point::single(1, 2), "swap-cycle"};
    const char* source =
        "w*2 -> w ;\n"
        "w -> w*2 ;\n"
        "w+(k) -> (k) ;\n"
        "(k) -> w+(k) ;\n";
    Fixture fixture{"swap-cycle", space, MapSpec::parse(source, space),
                    FixtureMetadata{true, true,
                                    "the two limit points form a 2-cycle; isolated points pair up "
                                    "into periodic 2-cycles across the belts"},
                    nullptr};
    spot_validate(fixture, 12, 8);
    return fixture;
}

std::vector<Fixture> counterexamples() {
    return {two_endpoint_shift(), forward_shift(), identity_fixture(), swap_cycle()};
}

Fixture random_finite_xprime_fixture(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    const std::uint32_t K = 1 + static_cast<std::uint32_t>(draw(rng, 4));
    const std::uint32_t F = static_cast<std::uint32_t>(draw(rng, 3));
    SpaceSpec space{Point::single(1, K).with_digit(0, F), "random-finite-xprime-" + std::to_string(seed)};

    std::vector<std::uint32_t> sigma(K);
    for (std::uint32_t j = 0; j < K; ++j) sigma[j] = j + 1;
    for (std::uint32_t j = K; j > 1; --j) std::swap(sigma[j - 1], sigma[draw(rng, j)]);

    std::vector<Clause> clauses;
    // Limit points follow the permutation.
    for (std::uint32_t j = 1; j <= K; ++j)
        clauses.push_back(make_clause(Pattern{std::nullopt, {pat_lit(1, j)}},
                                      out_point(Point::single(1, sigma[j - 1]))));
    // Isolated stragglers above the last limit point.
    if (F >= 1)
        clauses.push_back(make_clause(Pattern{std::nullopt, {pat_lit(1, K), pat_var(0, "b")}},
                                      out_point(random_junk_point(rng, space))));
    clauses.push_back(make_clause(Pattern{std::nullopt, {pat_lit(0, 0)}},
                                  out_point(random_junk_point(rng, space))));

    bool all_ep = true;
    std::vector<std::uint32_t> shift_of(K + 1, 0);
    std::vector<bool> descending(K + 1, false);
    for (std::uint32_t j = 1; j <= K; ++j) {
        const std::uint32_t target = sigma[j - 1];
        const bool can_descend = target == j;
        descending[j] = can_descend && draw(rng, 2) == 0;
        auto belt_pattern = [&](bool literal_bottom, std::uint64_t bottom) {
            std::vector<PatternTerm> terms;
            if (j >= 2) terms.push_back(pat_lit(1, j - 1));
            terms.push_back(literal_bottom ? pat_lit(0, bottom) : pat_var(0, "b"));
            return Pattern{std::nullopt, std::move(terms)};
        };
        if (descending[j]) {
            clauses.push_back(make_clause(belt_pattern(true, 1),
                                          out_point(random_junk_point(rng, space))));
            Output down;
            if (j >= 2) down.terms.push_back(out_term(1, e_const(j - 1)));
            down.terms.push_back(out_term(0, e_sub(e_var("b"), e_const(1))));
            clauses.push_back(make_clause(belt_pattern(false, 0), std::move(down)));
        } else {
            const std::uint32_t s = static_cast<std::uint32_t>(draw(rng, 3));
            const std::uint32_t junk_prefix = static_cast<std::uint32_t>(draw(rng, 3));
            shift_of[j] = s;
            for (std::uint32_t b = 1; b <= junk_prefix; ++b)
                clauses.push_back(make_clause(belt_pattern(true, b),
                                              out_point(random_junk_point(rng, space))));
            Output up;
            if (target >= 2) up.terms.push_back(out_term(1, e_const(target - 1)));
            up.terms.push_back(out_term(0, e_add(e_var("b"), e_const(s))));
            clauses.push_back(make_clause(belt_pattern(false, 0), std::move(up)));
        }
    }
    // An ascending belt keeps its orbits infinite when the shifts along its
    // permutation cycle do not cancel.
    for (std::uint32_t j = 1; j <= K; ++j) {
        if (descending[j]) continue;
        std::uint32_t total = 0, cur = j;
        do {
            if (descending[cur]) { total = 0; break; }
            total += shift_of[cur];
            cur = sigma[cur - 1];
        } while (cur != j);
        if (total > 0) all_ep = false;
    }

    Fixture fixture{space.name, space, MapSpec::from_clauses(std::move(clauses), space),
                    FixtureMetadata{true, all_ep, "generated: permuted limit points over shifted or "
                                                  "descending belts"},
                    nullptr};
    spot_validate(fixture, 8, 5);
    return fixture;
}

Fixture random_periodic_fixture(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 11);
    const std::uint32_t A = 1 + static_cast<std::uint32_t>(draw(rng, 3));
    SpaceSpec space{Point::single(2, A), "random-periodic-" + std::to_string(seed)};

    std::vector<std::uint32_t> sigma(A);
    for (std::uint32_t j = 0; j < A; ++j) sigma[j] = j + 1;
    for (std::uint32_t j = A; j > 1; --j) std::swap(sigma[j - 1], sigma[draw(rng, j)]);

    std::vector<Clause> clauses;
    for (std::uint32_t j = 1; j <= A; ++j)
        clauses.push_back(make_clause(Pattern{std::nullopt, {pat_lit(2, j)}},
                                      out_point(Point::single(2, sigma[j - 1]))));
    for (std::uint32_t j = 1; j <= A; ++j) {
        const std::uint32_t target = sigma[j - 1];
        std::vector<PatternTerm> pat;
        if (j >= 2) pat.push_back(pat_lit(2, j - 1));
        pat.push_back(pat_var(1, "k"));
        Output out;
        if (target >= 2) out.terms.push_back(out_term(2, e_const(target - 1)));
        out.terms.push_back(out_term(1, e_var("k")));
        std::vector<GuardAtom> guard;
        if (j == 1) guard.push_back(guard_cmp(e_var("k"), GuardAtom::Cmp::Ge, e_const(1)));
        clauses.push_back(make_clause(Pattern{std::nullopt, std::move(pat)}, std::move(out),
                                      std::move(guard)));
    }
    clauses.push_back(make_clause(Pattern{std::nullopt, {pat_lit(0, 0)}},
                                  out_point(random_junk_point(rng, space))));

    bool all_ep = true;
    std::vector<std::uint32_t> shift_of(A + 1, 0);
    for (std::uint32_t j = 1; j <= A; ++j) {
        const std::uint32_t target = sigma[j - 1];
        const std::uint32_t s = static_cast<std::uint32_t>(draw(rng, 3));
        const std::uint32_t junk_prefix = static_cast<std::uint32_t>(draw(rng, 2));
        shift_of[j] = s;
        std::vector<PatternTerm> base;
        if (j >= 2) base.push_back(pat_lit(2, j - 1));
        base.push_back(pat_var(1, "i", -1));
        base.push_back(pat_var(0, "b"));
        if (junk_prefix > 0) {
            std::vector<GuardAtom> guard;
            guard.push_back(guard_cmp(e_var("b"), GuardAtom::Cmp::Ge, e_const(1)));
            guard.push_back(guard_cmp(e_var("b"), GuardAtom::Cmp::Le, e_const(junk_prefix)));
            clauses.push_back(make_clause(Pattern{std::nullopt, base},
                                          out_point(random_junk_point(rng, space)), std::move(guard)));
        }
        Output out;
        if (target >= 2) out.terms.push_back(out_term(2, e_const(target - 1)));
        out.terms.push_back(out_term(1, e_sub(e_var("i"), e_const(1))));
        out.terms.push_back(out_term(0, e_add(e_var("b"), e_const(s))));
        clauses.push_back(make_clause(Pattern{std::nullopt, base}, std::move(out)));
    }
    for (std::uint32_t j = 1; j <= A; ++j) {
        std::uint32_t total = 0, cur = j;
        do {
            total += shift_of[cur];
            cur = sigma[cur - 1];
        } while (cur != j);
        if (total > 0) all_ep = false;
    }

    Fixture fixture{space.name, space, MapSpec::from_clauses(std::move(clauses), space),
                    FixtureMetadata{true, all_ep,
                                    "generated: permuted rank-2 blocks with index-preserving "
                                    "rank-1 maps and shifted isolated belts"},
                    nullptr};
    spot_validate(fixture, 6, 4);
    return fixture;
}

Fixture by_name(const std::string& name) {
    if (name == "example-omega2") return example_omega2();
    if (name == "two-endpoint-shift") return two_endpoint_shift();
    if (name == "forward-shift") return forward_shift();
    if (name == "identity") return identity_fixture();
    if (name == "swap-cycle") return swap_cycle();
    throw DomainError("unknown fixture: " + name +
                      " (available: example-omega2, two-endpoint-shift, forward-shift, identity, "
                      "swap-cycle)");
}

std::vector<std::string> fixture_names() {
    return {"example-omega2", "two-endpoint-shift", "forward-shift", "identity", "swap-cycle"};
}

}  // namespace ordyn::fixtures
