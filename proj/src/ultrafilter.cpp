#include "ordyn/ultrafilter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "ordyn/numtheory.hpp"

namespace ordyn {

namespace {

using i128 = __int128;

i128 egcd(i128 a, i128 b, i128& x, i128& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i128 x1, y1;
    i128 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

void validate_congruence(const Congruence& c) {
    if (c.modulus == 0) throw DomainError("congruence modulus must be positive");
    if (c.residue >= c.modulus)
        throw DomainError("congruence residue " + std::to_string(c.residue) +
                          " out of range for modulus " + std::to_string(c.modulus));
}

// (modulus, exponent) factors of n by trial division; desk scale.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        std::uint32_t e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t pow_u64(std::uint64_t q, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= q;
    return r;
}

}  // namespace

CrtResult crt_solve(const CongruenceConstraintSet& constraints) {
    for (const Congruence& c : constraints) validate_congruence(c);
    if (constraints.empty()) return Progression{1, 0};

    // For congruences, pairwise compatibility implies joint solvability, so a
    // conflict can always be reported as a pair.
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        for (std::size_t j = i + 1; j < constraints.size(); ++j) {
            const std::uint64_t g = gcd_u64(constraints[i].modulus, constraints[j].modulus);
            if (constraints[i].residue % g != constraints[j].residue % g)
                return CrtConflict{constraints[i], constraints[j]};
        }
    }

    i128 modulus = constraints[0].modulus;
    i128 value = constraints[0].residue;
    for (std::size_t i = 1; i < constraints.size(); ++i) {
        const i128 m = constraints[i].modulus;
        const i128 r = constraints[i].residue;
        i128 x, y;
        const i128 g = egcd(modulus, m, x, y);
        const i128 lcm = modulus / g * m;
        if (lcm > static_cast<i128>(UINT64_MAX))
            throw DomainError("crt_solve: lcm of moduli exceeds 64 bits");
        i128 t = ((r - value) / g % (m / g)) * (x % (m / g)) % (m / g);
        value = (value + modulus * t) % lcm;
        if (value < 0) value += lcm;
        modulus = lcm;
    }
    return Progression{static_cast<std::uint64_t>(modulus), static_cast<std::uint64_t>(value)};
}

std::int64_t AffinePrimeRule::value_at(std::uint64_t q) const {
    for (const Congruence& o : overrides)
        if (o.modulus == q) return static_cast<std::int64_t>(o.residue);
    if (odd_primes_only && q == 2) return static_cast<std::int64_t>(default_value);
    const std::int64_t num = a * static_cast<std::int64_t>(q) + b;
    if (num % c != 0)
        throw Error("residue rule value is not integral at prime " + std::to_string(q));
    return num / c;
}

bool AffinePrimeRule::covers(std::uint64_t q) const {
    for (const Congruence& o : overrides)
        if (o.modulus == q) return true;
    return !(odd_primes_only && q == 2);
}

struct ResidueSystem::Impl {
    enum class Mode { PrimePower, Raw, Sum, Scale };

    Mode mode = Mode::PrimePower;
    // PrimePower: residue at q^e, value < q^e; coherent along lifts.
    std::function<std::uint64_t(std::uint64_t q, std::uint32_t e, std::uint64_t qe)> pp_rule;
    // Raw: arbitrary total rule, checked pairwise across queried moduli.
    std::function<std::uint64_t(std::uint64_t)> raw_rule;
    std::shared_ptr<const Impl> lhs, rhs;
    std::uint64_t scale_factor = 1;
    std::string description;
    std::optional<AffinePrimeRule> affine;

    mutable std::mutex mu;
    mutable std::map<std::uint64_t, std::uint64_t> cache;

    std::uint64_t residue(std::uint64_t n) const {
        if (n == 0) throw DomainError("residue: modulus must be >= 1");
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find(n);
            if (it != cache.end()) return it->second;
        }
        const std::uint64_t r = compute(n);
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(n, r);
        return r;
    }

    std::uint64_t compute(std::uint64_t n) const {
        if (n == 1) return 0;
        switch (mode) {
            case Mode::PrimePower: {
                CongruenceConstraintSet parts;
                for (const auto& [q, e] : factorize(n)) {
                    const std::uint64_t qe = pow_u64(q, e);
                    const std::uint64_t r = pp_rule(q, e, qe);
                    if (r >= qe)
                        throw PresentationError("prime-power residue out of range at " +
                                                    std::to_string(qe),
                                                qe, qe);
                    if (e > 1) {
                        const std::uint64_t below = pow_u64(q, e - 1);
                        if (r % below != pp_rule(q, e - 1, below) % below)
                            throw PresentationError(
                                "incoherent prime-power lift between moduli " +
                                    std::to_string(qe) + " and " + std::to_string(below),
                                qe, below);
                    }
                    parts.push_back(Congruence{qe, r});
                }
                return std::get<Progression>(crt_solve(parts)).residue;
            }
            case Mode::Raw: {
                const std::uint64_t r = raw_rule(n);
                if (r >= n)
                    throw PresentationError("residue " + std::to_string(r) +
                                                " out of range for modulus " + std::to_string(n),
                                            n, n);
                std::lock_guard<std::mutex> lock(mu);
                for (const auto& [m, rm] : cache) {
                    const std::uint64_t g = gcd_u64(n, m);
                    if (r % g != rm % g)
                        throw PresentationError("incoherent residues: r_" + std::to_string(n) +
                                                    " = " + std::to_string(r) + " vs r_" +
                                                    std::to_string(m) + " = " + std::to_string(rm) +
                                                    " (mod " + std::to_string(g) + ")",
                                                n, m);
                }
                return r;
            }
            case Mode::Sum: {
                const std::uint64_t a = lhs->residue(n);
                const std::uint64_t b = rhs->residue(n);
                return (a % n + b % n) % n;
            }
            case Mode::Scale: {
                const std::uint64_t inner = n / gcd_u64(scale_factor, n);
                return mulmod_u64(scale_factor % n, lhs->residue(inner) % n, n);
            }
        }
        throw Error("bad residue-system mode");
    }
};

ResidueSystem ResidueSystem::zero() { return integer(0); }

ResidueSystem ResidueSystem::integer(std::uint64_t k) {
    auto impl = std::make_shared<Impl>();
    impl->mode = Impl::Mode::PrimePower;
    impl->pp_rule = [k](std::uint64_t, std::uint32_t, std::uint64_t qe) { return k % qe; };
    impl->description = k == 0 ? "zero" : "integer " + std::to_string(k);
    impl->affine = AffinePrimeRule{0, static_cast<std::int64_t>(k), 1, false, {}, k};
    return ResidueSystem(std::move(impl));
}

ResidueSystem ResidueSystem::prime_rule(AffinePrimeRule rule, std::string description) {
    for (const Congruence& o : rule.overrides) {
        if (!is_prime(o.modulus))
            throw DomainError("override modulus " + std::to_string(o.modulus) + " is not prime");
        validate_congruence(o);
    }
    if (rule.c != 1 && rule.c != 2) throw DomainError("affine rule denominator must be 1 or 2");
    if (description.empty()) {
        std::ostringstream out;
        auto affine_text = [&](std::ostream& os) {
            if (rule.a == 0) {
                os << rule.b;
                return;
            }
            if (rule.a == 1)
                os << "n";
            else
                os << rule.a << "*n";
            if (rule.b > 0) os << "+" << rule.b;
            if (rule.b < 0) os << rule.b;
        };
        if (rule.c == 1) {
            affine_text(out);
        } else {
            out << "(";
            affine_text(out);
            out << ")/" << rule.c;
        }
        out << (rule.odd_primes_only ? " on odd primes" : " on primes");
        for (const Congruence& o : rule.overrides)
            out << "; " << o.modulus << " -> " << o.residue;
        description = out.str();
    }
    auto impl = std::make_shared<Impl>();
    impl->mode = Impl::Mode::PrimePower;
    AffinePrimeRule r = rule;
    impl->pp_rule = [r](std::uint64_t q, std::uint32_t, std::uint64_t qe) {
        // Value at the prime, reduced mod q, then lifted minimally: the same
        // value represents every power of q.
        const std::int64_t v = r.value_at(q);
        const std::int64_t qi = static_cast<std::int64_t>(q);
        const std::uint64_t vq = static_cast<std::uint64_t>(((v % qi) + qi) % qi);
        return vq % qe;
    };
    impl->description = std::move(description);
    impl->affine = std::move(rule);
    return ResidueSystem(std::move(impl));
}

ResidueSystem ResidueSystem::table(CongruenceConstraintSet entries) {
    for (const Congruence& c : entries) validate_congruence(c);
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const std::uint64_t g = gcd_u64(entries[i].modulus, entries[j].modulus);
            if (entries[i].residue % g != entries[j].residue % g)
                throw PresentationError("incoherent table entries at moduli " +
                                            std::to_string(entries[i].modulus) + " and " +
                                            std::to_string(entries[j].modulus),
                                        entries[i].modulus, entries[j].modulus);
        }
    std::ostringstream out;
    out << "table";
    for (const Congruence& c : entries) out << " (" << c.modulus << ":" << c.residue << ")";
    auto impl = std::make_shared<Impl>();
    impl->mode = Impl::Mode::PrimePower;
    impl->pp_rule = [entries](std::uint64_t q, std::uint32_t e, std::uint64_t qe) {
        // Minimal coherent completion: take the entry carrying the deepest
        // q-power information; everything else extends by zero.
        std::uint32_t best_v = 0;
        std::uint64_t best_r = 0;
        for (const Congruence& c : entries) {
            std::uint64_t m = c.modulus;
            std::uint32_t v = 0;
            while (m % q == 0) {
                m /= q;
                ++v;
            }
            if (v > best_v) {
                best_v = v;
                best_r = c.residue;
            }
        }
        if (best_v == 0) return std::uint64_t{0};
        const std::uint64_t qm = pow_u64(q, std::min(best_v, e));
        return (best_r % qm) % qe;
    };
    impl->description = out.str();
    return ResidueSystem(std::move(impl));
}

ResidueSystem ResidueSystem::from_function(std::function<std::uint64_t(std::uint64_t)> rule,
                                           std::string description) {
    auto impl = std::make_shared<Impl>();
    impl->mode = Impl::Mode::Raw;
    impl->raw_rule = std::move(rule);
    impl->description = std::move(description);
    return ResidueSystem(std::move(impl));
}

std::uint64_t ResidueSystem::residue(std::uint64_t n) const { return impl_->residue(n); }

const std::string& ResidueSystem::describe() const { return impl_->description; }

std::optional<AffinePrimeRule> ResidueSystem::affine_rule() const { return impl_->affine; }

ResidueSystem add(const ResidueSystem& p, const ResidueSystem& q) {
    auto impl = std::make_shared<ResidueSystem::Impl>();
    impl->mode = ResidueSystem::Impl::Mode::Sum;
    impl->lhs = p.impl_;
    impl->rhs = q.impl_;
    impl->description = "(" + p.describe() + ") + (" + q.describe() + ")";
    return ResidueSystem(std::move(impl));
}

ResidueSystem scale(std::uint64_t factor, const ResidueSystem& p) {
    auto impl = std::make_shared<ResidueSystem::Impl>();
    impl->mode = ResidueSystem::Impl::Mode::Scale;
    impl->lhs = p.impl_;
    impl->scale_factor = factor;
    impl->description = std::to_string(factor) + " * (" + p.describe() + ")";
    return ResidueSystem(std::move(impl));
}

namespace {

// Symbolic affine value (A*n + B) / C used while parsing rule expressions.
struct AffineValue {
    std::int64_t a = 0, b = 0, c = 1;
};

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : s_(text) {}

    ResidueSystem parse() {
        skip_ws();
        if (try_word("residues")) {
            skip_ws();
            expect(':');
        }
        bool have_rule = false, have_table = false;
        AffinePrimeRule rule;
        CongruenceConstraintSet table_entries;
        for (;;) {
            skip_ws();
            if (try_word("zero")) {
                have_rule = true;  // the all-zero affine rule
            } else if (try_word("table")) {
                have_table = true;
                skip_ws();
                while (pos_ < s_.size() && s_[pos_] == '(') {
                    expect('(');
                    const std::uint64_t m = number();
                    skip_ws();
                    expect(':');
                    const std::uint64_t r = number();
                    skip_ws();
                    expect(')');
                    table_entries.push_back(Congruence{m, r});
                    skip_ws();
                }
                if (table_entries.empty()) fail("expected table entries");
            } else if (try_word("default")) {
                rule.default_value = number();
            } else if (peek_override()) {
                const std::uint64_t q = number();
                skip_ws();
                expect('-');
                expect('>');
                const std::uint64_t r = number();
                rule.overrides.push_back(Congruence{q, r});
            } else {
                const AffineValue v = expr();
                skip_ws();
                if (!try_word("on")) fail("expected 'on primes' after rule expression");
                skip_ws();
                rule.odd_primes_only = try_word("odd");
                skip_ws();
                if (!try_word("primes")) fail("expected 'primes'");
                rule.a = v.a;
                rule.b = v.b;
                rule.c = v.c;
                have_rule = true;
            }
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == ';') {
                ++pos_;
                continue;
            }
            break;
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        if (have_table && (have_rule || !rule.overrides.empty()))
            fail("table presentations cannot be mixed with rules");
        if (have_table) return ResidueSystem::table(table_entries);
        if (!have_rule && rule.overrides.empty()) fail("empty presentation");
        return ResidueSystem::prime_rule(rule);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool try_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        const std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    bool peek_override() {
        // INT '->' INT
        std::size_t p = pos_;
        if (p >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p]))) return false;
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        return p + 1 < s_.size() && s_[p] == '-' && s_[p + 1] == '>';
    }

    std::uint64_t number() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    AffineValue expr() {
        AffineValue v = term();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                // A '->' would have been consumed as an override earlier.
                if (s_[pos_] == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') break;
                const bool add = s_[pos_] == '+';
                ++pos_;
                AffineValue w = term();
                v = combine(v, w, add);
            } else {
                break;
            }
        }
        return v;
    }

    AffineValue term() {
        AffineValue v = atom();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                AffineValue w = atom();
                if (v.a != 0 && w.a != 0) fail("rule must be affine in n");
                AffineValue out;
                out.c = v.c * w.c;
                out.a = v.a * w.b + w.a * v.b;
                out.b = v.b * w.b;
                v = reduce(out);
            } else if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                const std::int64_t d = static_cast<std::int64_t>(number());
                if (d == 0) fail("division by zero");
                AffineValue out = v;
                out.c *= d;
                v = reduce(out);
            } else {
                break;
            }
        }
        return v;
    }

    AffineValue atom() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            AffineValue v = expr();
            skip_ws();
            expect(')');
            return v;
        }
        if (pos_ < s_.size() && s_[pos_] == 'n') {
            const std::size_t end = pos_ + 1;
            if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end])))
                fail("unknown identifier");
            ++pos_;
            return AffineValue{1, 0, 1};
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return AffineValue{0, static_cast<std::int64_t>(number()), 1};
        fail("expected rule expression");
    }

    static AffineValue reduce(AffineValue v) {
        std::int64_t g = std::abs(v.c);
        auto gcd2 = [](std::int64_t x, std::int64_t y) {
            x = std::abs(x);
            y = std::abs(y);
            while (y) {
                std::int64_t t = x % y;
                x = y;
                y = t;
            }
            return x;
        };
        g = gcd2(g, gcd2(v.a, v.b));
        if (g > 1) {
            v.a /= g;
            v.b /= g;
            v.c /= g;
        }
        if (v.c < 0) {
            v.a = -v.a;
            v.b = -v.b;
            v.c = -v.c;
        }
        return v;
    }

    static AffineValue combine(AffineValue x, AffineValue y, bool add) {
        AffineValue out;
        out.c = x.c * y.c;
        out.a = x.a * y.c + (add ? 1 : -1) * y.a * x.c;
        out.b = x.b * y.c + (add ? 1 : -1) * y.b * x.c;
        return reduce(out);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

ResidueSystem parse_ultrafilter_spec(const std::string& text) {
    SpecParser parser(text);
    return parser.parse();
}

}  // namespace ordyn
