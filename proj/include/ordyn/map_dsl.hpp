#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordyn/ordinal.hpp"

namespace ordyn {

// A dynamical system: a space together with a total self-map.
struct DynMap {
    SpaceSpec space;
    std::function<Point(const Point&)> apply;
    std::string name;
};

// f^n as a DynMap (n >= 1; n == 0 is the identity).
DynMap power(const DynMap& f, std::uint32_t n);
DynMap identity_map(const SpaceSpec& space);

namespace dsl {

// Arithmetic over clause variables (m, n, ...): +, -, * and constants.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Const, Var, Add, Sub, Mul };
    Op op;
    std::int64_t value = 0;
    std::string name;
    ExprPtr lhs, rhs;

    static ExprPtr constant(std::int64_t v);
    static ExprPtr var(std::string n);
    static ExprPtr binary(Op op, ExprPtr a, ExprPtr b);
};

using Env = std::vector<std::pair<std::string, std::int64_t>>;
std::int64_t eval(const Expr& e, const Env& env);
std::string print(const Expr& e);

// One digit constraint of a pattern. A variable pattern written `(v+s)`
// matches digit g by binding v = g - s (bindings must be >= 0).
struct CoeffPattern {
    enum class Kind { Literal, Var };
    Kind kind = Kind::Literal;
    std::uint64_t literal = 0;
    std::string var;
    std::int64_t shift = 0;  // as written: pattern digit value is var + shift
};

struct PatternTerm {
    std::uint32_t exp;
    CoeffPattern coeff;
};

// Either a whole-point variable or a list of digit constraints; digits at
// exponents not named must be zero.
struct Pattern {
    std::optional<std::string> point_var;
    std::vector<PatternTerm> terms;
};

struct OutputTerm {
    std::uint32_t exp;
    ExprPtr coeff;
};

struct Output {
    std::optional<std::string> point_var;
    std::vector<OutputTerm> terms;
};

struct GuardAtom {
    enum class Kind { Cmp, Prime, Mod };
    enum class Cmp { Lt, Le, Eq, Ge, Gt, Ne };
    Kind kind = Kind::Cmp;
    Cmp cmp = Cmp::Eq;
    ExprPtr a, b;
    std::uint64_t modulus = 0;  // Mod: a mod modulus = b
};

struct Clause {
    Pattern pattern;
    Output output;
    std::vector<GuardAtom> guard;  // conjunction; empty = always
    int line = 0;
    int col = 0;
};

}  // namespace dsl

// A parsed piecewise self-map: ordered clauses with first-match semantics.
class MapSpec {
public:
    static MapSpec parse(const std::string& source, const SpaceSpec& space);

    Point apply(const Point& x) const;
    const SpaceSpec& space() const { return space_; }
    const std::vector<dsl::Clause>& clauses() const { return clauses_; }
    std::size_t clause_count() const { return clauses_.size(); }

    // Canonical source text; parse(print()) yields an identical clause list.
    std::string print() const;

    // Exhaustiveness and output membership over the coefficient-capped
    // truncation; throws DomainError on the first failure.
    void validate_total(std::uint64_t cap) const;

    bool is_identity() const;
    DynMap as_map(std::string name = "") const;

    static MapSpec from_clauses(std::vector<dsl::Clause> clauses, const SpaceSpec& space);

private:
    MapSpec(std::vector<dsl::Clause> clauses, SpaceSpec space);

    std::vector<dsl::Clause> clauses_;
    SpaceSpec space_;
};

// parse_map per the module contract (alias of MapSpec::parse).
MapSpec parse_map(const std::string& source, const SpaceSpec& space);

struct MapContinuityViolation {
    Point at;
    Point image;
    ConvergenceWitness witness;
    std::string family;
};

struct MapContinuityResult {
    bool ok;
    std::uint32_t depth;
    std::optional<MapContinuityViolation> violation;
};

// Checks f(canonical sequence of x) -> f(x) for every limit point x in the
// depth-truncation; returns the first violation in point order.
MapContinuityResult validate_continuous(const MapSpec& f, std::uint32_t depth);
MapContinuityResult validate_continuous(const DynMap& f, std::uint32_t depth);

}  // namespace ordyn
