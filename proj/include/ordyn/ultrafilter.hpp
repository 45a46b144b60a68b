#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordyn/errors.hpp"

namespace ordyn {

struct Congruence {
    std::uint64_t modulus;
    std::uint64_t residue;
    friend bool operator==(const Congruence&, const Congruence&) = default;
};

using CongruenceConstraintSet = std::vector<Congruence>;

struct Progression {
    std::uint64_t modulus;  // lcm of the input moduli
    std::uint64_t residue;  // least solution
};

struct CrtConflict {
    Congruence a, b;
};

using CrtResult = std::variant<Progression, CrtConflict>;

// Solves the simultaneous congruences (general moduli). Consistent systems
// yield the full solution progression; otherwise the first conflicting pair
// of input constraints is returned.
CrtResult crt_solve(const CongruenceConstraintSet& constraints);

// Residue value (a*n + b)/c at primes n, c in {1, 2}; the symbolic shape
// behind presentations like `n-1 on primes` or `(n+1)/2 on odd primes`.
struct AffinePrimeRule {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 1;
    bool odd_primes_only = false;
    std::vector<Congruence> overrides;  // explicit (prime, residue) entries
    std::uint64_t default_value = 0;    // at primes the rule does not cover

    // Rule value at prime q, before reduction mod q; overrides win.
    std::int64_t value_at(std::uint64_t q) const;
    bool covers(std::uint64_t q) const;
};

// A coherent family of residues r_n mod n: the finite presentation of a free
// ultrafilter's congruence trace. Immutable; queries are memoized and
// internally synchronized.
class ResidueSystem {
public:
    static ResidueSystem zero();
    static ResidueSystem integer(std::uint64_t k);  // trace of a fixed integer
    static ResidueSystem prime_rule(AffinePrimeRule rule, std::string description = "");
    static ResidueSystem table(CongruenceConstraintSet entries);
    // Arbitrary rule; coherence is enforced pairwise across queried moduli.
    static ResidueSystem from_function(std::function<std::uint64_t(std::uint64_t)> rule,
                                       std::string description);

    std::uint64_t residue(std::uint64_t n) const;
    const std::string& describe() const;
    std::optional<AffinePrimeRule> affine_rule() const;

    friend ResidueSystem add(const ResidueSystem& p, const ResidueSystem& q);
    friend ResidueSystem scale(std::uint64_t factor, const ResidueSystem& p);

private:
    struct Impl;
    explicit ResidueSystem(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

// Pointwise sum (p + q)(n) = (p(n) + q(n)) mod n: the trace of the ultrafilter
// sum restricted to congruence data.
ResidueSystem add(const ResidueSystem& p, const ResidueSystem& q);

// Trace of the image of p under k -> factor*k:
//   (factor * p)(n) = factor * p(n / gcd(factor, n)) mod n.
// This is the trace governing iterates of a power of a map: the p-limit of
// the g-iterates of g = f^m is f^(m*p), not f^(p+m).
ResidueSystem scale(std::uint64_t factor, const ResidueSystem& p);

// Textual presentations, e.g.
//   residues: n-1 on primes
//   residues: (n+1)/2 on odd primes; 2 -> 1
//   residues: table (3:2)(5:4)(7:6)
//   residues: zero
ResidueSystem parse_ultrafilter_spec(const std::string& text);

}  // namespace ordyn
