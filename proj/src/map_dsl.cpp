#include "ordyn/map_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ordyn/numtheory.hpp"

namespace ordyn {

DynMap power(const DynMap& f, std::uint32_t n) {
    auto base = f.apply;
    auto space = f.space;
    return DynMap{space,
                  [base, n](const Point& x) {
                      Point cur = x;
                      for (std::uint32_t i = 0; i < n; ++i) cur = base(cur);
                      return cur;
                  },
                  f.name.empty() ? "f^" + std::to_string(n)
                                 : f.name + "^" + std::to_string(n)};
}

DynMap identity_map(const SpaceSpec& space) {
    return DynMap{space, [](const Point& x) { return x; }, "identity"};
}

namespace dsl {

ExprPtr Expr::constant(std::int64_t v) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Const;
    e->value = v;
    return e;
}

ExprPtr Expr::var(std::string n) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Var;
    e->name = std::move(n);
    return e;
}

ExprPtr Expr::binary(Op op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

std::int64_t eval(const Expr& e, const Env& env) {
    switch (e.op) {
        case Expr::Op::Const: return e.value;
        case Expr::Op::Var:
            for (const auto& [name, v] : env)
                if (name == e.name) return v;
            throw DomainError("unbound variable " + e.name);
        case Expr::Op::Add: return eval(*e.lhs, env) + eval(*e.rhs, env);
        case Expr::Op::Sub: return eval(*e.lhs, env) - eval(*e.rhs, env);
        case Expr::Op::Mul: return eval(*e.lhs, env) * eval(*e.rhs, env);
    }
    throw DomainError("bad expression");
}

namespace {

int level(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Add:
        case Expr::Op::Sub: return 1;
        case Expr::Op::Mul: return 2;
        default: return 3;
    }
}

void print_rec(const Expr& e, std::ostream& out, int parent, bool right_of_sub) {
    const int own = level(e);
    const bool parens = own < parent || (right_of_sub && own == 1);
    if (parens) out << '(';
    switch (e.op) {
        case Expr::Op::Const: out << e.value; break;
        case Expr::Op::Var: out << e.name; break;
        case Expr::Op::Add:
            print_rec(*e.lhs, out, own, false);
            out << '+';
            print_rec(*e.rhs, out, own, false);
            break;
        case Expr::Op::Sub:
            print_rec(*e.lhs, out, own, false);
            out << '-';
            print_rec(*e.rhs, out, own, true);
            break;
        case Expr::Op::Mul:
            print_rec(*e.lhs, out, own, false);
            out << '*';
            print_rec(*e.rhs, out, own, false);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string print(const Expr& e) {
    std::ostringstream out;
    print_rec(e, out, 0, false);
    return out.str();
}

}  // namespace dsl

namespace {

using namespace dsl;

enum class Tok {
    Ident, Int, Arrow, Plus, Minus, Star, Caret, LParen, RParen,
    Semi, Comma, Lt, Le, EqTok, Ge, Gt, Ne, End
};

struct Token {
    Tok kind;
    std::string text;
    std::uint64_t number = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::End;
            tok_.text = "<end>";
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                step();
            }
            tok_.kind = Tok::Ident;
            tok_.text = id;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            std::string text;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
                text += src_[pos_];
                step();
            }
            tok_.kind = Tok::Int;
            tok_.number = v;
            tok_.text = text;
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b;
        };
        if (two('-', '>')) { step(); step(); tok_.kind = Tok::Arrow; tok_.text = "->"; return; }
        if (two('<', '=')) { step(); step(); tok_.kind = Tok::Le; tok_.text = "<="; return; }
        if (two('>', '=')) { step(); step(); tok_.kind = Tok::Ge; tok_.text = ">="; return; }
        if (two('!', '=')) { step(); step(); tok_.kind = Tok::Ne; tok_.text = "!="; return; }
        step();
        switch (c) {
            case '+': tok_.kind = Tok::Plus; break;
            case '-': tok_.kind = Tok::Minus; break;
            case '*': tok_.kind = Tok::Star; break;
            case '^': tok_.kind = Tok::Caret; break;
            case '(': tok_.kind = Tok::LParen; break;
            case ')': tok_.kind = Tok::RParen; break;
            case ';': tok_.kind = Tok::Semi; break;
            case ',': tok_.kind = Tok::Comma; break;
            case '<': tok_.kind = Tok::Lt; break;
            case '>': tok_.kind = Tok::Gt; break;
            case '=': tok_.kind = Tok::EqTok; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_,
                                 col_ - 1);
        }
        tok_.text = std::string(1, c);
    }

    void skip() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    void step() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class MapParser {
public:
    MapParser(const std::string& src, const SpaceSpec& space) : lex_(src), space_(space) {}

    std::vector<Clause> parse() {
        std::vector<Clause> clauses;
        while (lex_.peek().kind != Tok::End) {
            clauses.push_back(clause());
            if (lex_.peek().kind == Tok::Semi) {
                lex_.take();
            } else if (lex_.peek().kind != Tok::End) {
                fail("expected ';' between clauses");
            }
        }
        if (clauses.empty()) fail("empty map definition");
        return clauses;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, lex_.peek().line, lex_.peek().col);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind) fail("expected " + what);
        return lex_.take();
    }

    bool is_reserved(const std::string& id) const {
        return id == "w" || id == "if" || id == "prime" || id == "mod";
    }

    Clause clause() {
        Clause c;
        c.line = lex_.peek().line;
        c.col = lex_.peek().col;
        c.pattern = pattern();
        expect(Tok::Arrow, "'->'");
        c.output = output(c.pattern);
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "if") {
            lex_.take();
            c.guard = guard();
        }
        check_scope(c);
        return c;
    }

    Pattern pattern() {
        Pattern p;
        // A single bare identifier binds the whole point.
        if (lex_.peek().kind == Tok::Ident && !is_reserved(lex_.peek().text)) {
            Token id = lex_.take();
            if (lex_.peek().kind == Tok::Arrow) {
                p.point_var = id.text;
                return p;
            }
            // Otherwise it is the first digit variable of a composite pattern.
            p.terms.push_back(PatternTerm{0, CoeffPattern{CoeffPattern::Kind::Var, 0, id.text, 0}});
            finish_pattern_terms(p);
            return p;
        }
        p.terms.push_back(pattern_term());
        while (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            p.terms.push_back(pattern_term());
        }
        order_check(p.terms);
        return p;
    }

    void finish_pattern_terms(Pattern& p) {
        while (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            p.terms.push_back(pattern_term());
        }
        order_check(p.terms);
    }

    template <typename T>
    void order_check(const std::vector<T>& terms) {
        for (std::size_t i = 1; i < terms.size(); ++i)
            if (terms[i - 1].exp <= terms[i].exp)
                fail("term exponents must strictly decrease");
    }

    PatternTerm pattern_term() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Ident && t.text == "w") {
            lex_.take();
            std::uint32_t exp = 1;
            if (lex_.peek().kind == Tok::Caret) {
                lex_.take();
                exp = static_cast<std::uint32_t>(expect(Tok::Int, "exponent").number);
            }
            CoeffPattern coeff{CoeffPattern::Kind::Literal, 1, "", 0};
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                coeff = coeff_pattern();
            }
            return PatternTerm{exp, coeff};
        }
        if (t.kind == Tok::Int) {
            Token n = lex_.take();
            return PatternTerm{0, CoeffPattern{CoeffPattern::Kind::Literal, n.number, "", 0}};
        }
        if (t.kind == Tok::LParen) {
            return PatternTerm{0, paren_var_pattern()};
        }
        if (t.kind == Tok::Ident && !is_reserved(t.text)) {
            Token id = lex_.take();
            return PatternTerm{0, CoeffPattern{CoeffPattern::Kind::Var, 0, id.text, 0}};
        }
        fail("expected pattern term");
    }

    CoeffPattern coeff_pattern() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Int) {
            Token n = lex_.take();
            return CoeffPattern{CoeffPattern::Kind::Literal, n.number, "", 0};
        }
        if (t.kind == Tok::Ident && !is_reserved(t.text)) {
            Token id = lex_.take();
            return CoeffPattern{CoeffPattern::Kind::Var, 0, id.text, 0};
        }
        if (t.kind == Tok::LParen) return paren_var_pattern();
        fail("expected coefficient pattern");
    }

    CoeffPattern paren_var_pattern() {
        expect(Tok::LParen, "'('");
        Token id = expect(Tok::Ident, "variable");
        if (is_reserved(id.text)) fail("'" + id.text + "' is reserved");
        std::int64_t shift = 0;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool neg = lex_.take().kind == Tok::Minus;
            std::int64_t n = static_cast<std::int64_t>(expect(Tok::Int, "shift").number);
            shift = neg ? -n : n;
        }
        expect(Tok::RParen, "')'");
        return CoeffPattern{CoeffPattern::Kind::Var, 0, id.text, shift};
    }

    Output output(const Pattern& pat) {
        Output out;
        if (lex_.peek().kind == Tok::Ident && !is_reserved(lex_.peek().text) && pat.point_var &&
            lex_.peek().text == *pat.point_var) {
            lex_.take();
            out.point_var = *pat.point_var;
            return out;
        }
        // w-terms, then at most one trailing finite expression (greedy).
        while (lex_.peek().kind == Tok::Ident && lex_.peek().text == "w") {
            lex_.take();
            std::uint32_t exp = 1;
            if (lex_.peek().kind == Tok::Caret) {
                lex_.take();
                exp = static_cast<std::uint32_t>(expect(Tok::Int, "exponent").number);
            }
            ExprPtr coeff = Expr::constant(1);
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                coeff = coeff_expr_atom();
            }
            out.terms.push_back(OutputTerm{exp, coeff});
            if (lex_.peek().kind == Tok::Plus) {
                lex_.take();
                continue;
            }
            order_check(out.terms);
            check_output_exponents(out);
            return out;
        }
        out.terms.push_back(OutputTerm{0, expr()});
        order_check(out.terms);
        check_output_exponents(out);
        return out;
    }

    void check_output_exponents(const Output& out) {
        for (const OutputTerm& t : out.terms)
            if (t.exp > space_.top.leading_exp())
                fail("output exceeds the top ordinal " + space_.top.str());
    }

    // Coefficient position after `w*`: a literal, a variable, or a
    // parenthesized expression.
    ExprPtr coeff_expr_atom() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Int) return Expr::constant(static_cast<std::int64_t>(lex_.take().number));
        if (t.kind == Tok::Ident && !is_reserved(t.text)) return Expr::var(lex_.take().text);
        if (t.kind == Tok::LParen) {
            lex_.take();
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail("expected coefficient");
    }

    ExprPtr expr() {
        ExprPtr e = mul_expr();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool add = lex_.take().kind == Tok::Plus;
            e = Expr::binary(add ? Expr::Op::Add : Expr::Op::Sub, e, mul_expr());
        }
        return e;
    }

    ExprPtr mul_expr() {
        ExprPtr e = atom_expr();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            e = Expr::binary(Expr::Op::Mul, e, atom_expr());
        }
        return e;
    }

    ExprPtr atom_expr() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Int) return Expr::constant(static_cast<std::int64_t>(lex_.take().number));
        if (t.kind == Tok::Ident && !is_reserved(t.text)) return Expr::var(lex_.take().text);
        if (t.kind == Tok::LParen) {
            lex_.take();
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail("expected expression");
    }

    std::vector<GuardAtom> guard() {
        std::vector<GuardAtom> atoms;
        atoms.push_back(guard_atom());
        while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            atoms.push_back(guard_atom());
        }
        return atoms;
    }

    GuardAtom guard_atom() {
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "prime") {
            lex_.take();
            expect(Tok::LParen, "'('");
            GuardAtom a;
            a.kind = GuardAtom::Kind::Prime;
            a.a = expr();
            expect(Tok::RParen, "')'");
            return a;
        }
        GuardAtom a;
        a.a = expr();
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "mod") {
            lex_.take();
            a.kind = GuardAtom::Kind::Mod;
            a.modulus = expect(Tok::Int, "modulus").number;
            if (a.modulus == 0) fail("modulus must be positive");
            expect(Tok::EqTok, "'='");
            a.b = expr();
            return a;
        }
        a.kind = GuardAtom::Kind::Cmp;
        switch (lex_.peek().kind) {
            case Tok::Lt: a.cmp = GuardAtom::Cmp::Lt; break;
            case Tok::Le: a.cmp = GuardAtom::Cmp::Le; break;
            case Tok::EqTok: a.cmp = GuardAtom::Cmp::Eq; break;
            case Tok::Ge: a.cmp = GuardAtom::Cmp::Ge; break;
            case Tok::Gt: a.cmp = GuardAtom::Cmp::Gt; break;
            case Tok::Ne: a.cmp = GuardAtom::Cmp::Ne; break;
            default: fail("expected comparison operator");
        }
        lex_.take();
        a.b = expr();
        return a;
    }

    void collect_vars(const ExprPtr& e, std::set<std::string>& out) {
        if (!e) return;
        if (e->op == Expr::Op::Var) out.insert(e->name);
        collect_vars(e->lhs, out);
        collect_vars(e->rhs, out);
    }

    void check_scope(const Clause& c) {
        std::set<std::string> bound;
        if (c.pattern.point_var) bound.insert(*c.pattern.point_var);
        for (const PatternTerm& t : c.pattern.terms)
            if (t.coeff.kind == CoeffPattern::Kind::Var) {
                if (!bound.insert(t.coeff.var).second)
                    fail("variable " + t.coeff.var + " bound twice");
            }
        std::set<std::string> used;
        for (const OutputTerm& t : c.output.terms) collect_vars(t.coeff, used);
        for (const GuardAtom& a : c.guard) {
            collect_vars(a.a, used);
            collect_vars(a.b, used);
        }
        for (const std::string& v : used)
            if (!bound.count(v)) fail("unbound variable " + v);
    }

    Lexer lex_;
    const SpaceSpec& space_;
};

bool match_pattern(const Pattern& pat, const Point& x, Env& env) {
    if (pat.point_var) return true;
    for (const PatternTerm& t : pat.terms) {
        const std::uint64_t g = x.digit(t.exp);
        if (t.coeff.kind == CoeffPattern::Kind::Literal) {
            if (g != t.coeff.literal) return false;
        } else {
            const std::int64_t v = static_cast<std::int64_t>(g) - t.coeff.shift;
            if (v < 0) return false;
            env.emplace_back(t.coeff.var, v);
        }
    }
    for (const Term& t : x.terms()) {
        bool named = false;
        for (const PatternTerm& pt : pat.terms)
            if (pt.exp == t.exp) { named = true; break; }
        if (!named) return false;
    }
    return true;
}

bool guard_holds(const std::vector<GuardAtom>& guard, const Env& env) {
    for (const GuardAtom& a : guard) {
        switch (a.kind) {
            case GuardAtom::Kind::Prime: {
                const std::int64_t v = eval(*a.a, env);
                if (v < 2 || !is_prime(static_cast<std::uint64_t>(v))) return false;
                break;
            }
            case GuardAtom::Kind::Mod: {
                const std::int64_t m = static_cast<std::int64_t>(a.modulus);
                const std::int64_t lhs = ((eval(*a.a, env) % m) + m) % m;
                const std::int64_t rhs = ((eval(*a.b, env) % m) + m) % m;
                if (lhs != rhs) return false;
                break;
            }
            case GuardAtom::Kind::Cmp: {
                const std::int64_t lhs = eval(*a.a, env);
                const std::int64_t rhs = eval(*a.b, env);
                bool ok = false;
                switch (a.cmp) {
                    case GuardAtom::Cmp::Lt: ok = lhs < rhs; break;
                    case GuardAtom::Cmp::Le: ok = lhs <= rhs; break;
                    case GuardAtom::Cmp::Eq: ok = lhs == rhs; break;
                    case GuardAtom::Cmp::Ge: ok = lhs >= rhs; break;
                    case GuardAtom::Cmp::Gt: ok = lhs > rhs; break;
                    case GuardAtom::Cmp::Ne: ok = lhs != rhs; break;
                }
                if (!ok) return false;
                break;
            }
        }
    }
    return true;
}

std::string print_coeff_pattern(const CoeffPattern& c, bool finite_position) {
    if (c.kind == CoeffPattern::Kind::Literal) return std::to_string(c.literal);
    if (c.shift == 0) return finite_position ? "(" + c.var + ")" : c.var;
    std::string shift = c.shift > 0 ? "+" + std::to_string(c.shift)
                                    : "-" + std::to_string(-c.shift);
    return "(" + c.var + shift + ")";
}

std::string print_pattern(const Pattern& p) {
    if (p.point_var) return *p.point_var;
    std::string out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i) out += '+';
        const PatternTerm& t = p.terms[i];
        if (t.exp == 0) {
            out += print_coeff_pattern(t.coeff, true);
        } else {
            out += t.exp == 1 ? "w" : "w^" + std::to_string(t.exp);
            if (!(t.coeff.kind == CoeffPattern::Kind::Literal && t.coeff.literal == 1))
                out += "*" + print_coeff_pattern(t.coeff, false);
        }
    }
    return out;
}

std::string print_output(const Output& o) {
    if (o.point_var) return *o.point_var;
    std::string out;
    for (std::size_t i = 0; i < o.terms.size(); ++i) {
        if (i) out += '+';
        const OutputTerm& t = o.terms[i];
        if (t.exp == 0) {
            out += print(*t.coeff);
        } else {
            out += t.exp == 1 ? "w" : "w^" + std::to_string(t.exp);
            const bool unit = t.coeff->op == Expr::Op::Const && t.coeff->value == 1;
            if (!unit) {
                const bool atom = t.coeff->op == Expr::Op::Const || t.coeff->op == Expr::Op::Var;
                out += "*" + (atom ? print(*t.coeff) : "(" + print(*t.coeff) + ")");
            }
        }
    }
    return out;
}

std::string print_guard_atom(const GuardAtom& a) {
    switch (a.kind) {
        case GuardAtom::Kind::Prime: return "prime(" + print(*a.a) + ")";
        case GuardAtom::Kind::Mod:
            return print(*a.a) + " mod " + std::to_string(a.modulus) + " = " + print(*a.b);
        case GuardAtom::Kind::Cmp: {
            const char* op = "=";
            switch (a.cmp) {
                case GuardAtom::Cmp::Lt: op = "<"; break;
                case GuardAtom::Cmp::Le: op = "<="; break;
                case GuardAtom::Cmp::Eq: op = "="; break;
                case GuardAtom::Cmp::Ge: op = ">="; break;
                case GuardAtom::Cmp::Gt: op = ">"; break;
                case GuardAtom::Cmp::Ne: op = "!="; break;
            }
            return print(*a.a) + " " + op + " " + print(*a.b);
        }
    }
    return "";
}

}  // namespace

MapSpec::MapSpec(std::vector<dsl::Clause> clauses, SpaceSpec space)
    : clauses_(std::move(clauses)), space_(std::move(space)) {}

MapSpec MapSpec::parse(const std::string& source, const SpaceSpec& space) {
    MapParser parser(source, space);
    return MapSpec(parser.parse(), space);
}

MapSpec parse_map(const std::string& source, const SpaceSpec& space) {
    return MapSpec::parse(source, space);
}

MapSpec MapSpec::from_clauses(std::vector<dsl::Clause> clauses, const SpaceSpec& space) {
    MapSpec spec(std::move(clauses), space);
    // Route through the parser so programmatic clause lists obey the same
    // scoping and shape rules as source text.
    return MapSpec::parse(spec.print(), space);
}

Point MapSpec::apply(const Point& x) const {
    space_.require(x);
    for (const dsl::Clause& c : clauses_) {
        dsl::Env env;
        if (!match_pattern(c.pattern, x, env)) continue;
        if (!guard_holds(c.guard, env)) continue;
        if (c.output.point_var) return x;
        Point result;
        for (const dsl::OutputTerm& t : c.output.terms) {
            const std::int64_t v = dsl::eval(*t.coeff, env);
            if (v < 0)
                throw DomainError("clause at line " + std::to_string(c.line) +
                                  ": negative coefficient applying to " + x.str());
            result = result.with_digit(t.exp, static_cast<std::uint64_t>(v));
        }
        if (!space_.contains(result))
            throw DomainError("clause at line " + std::to_string(c.line) + ": image " +
                              result.str() + " of " + x.str() + " is outside the space");
        return result;
    }
    throw DomainError("no clause matches " + x.str() + " (map not total)");
}

std::string MapSpec::print() const {
    std::ostringstream out;
    for (const dsl::Clause& c : clauses_) {
        out << print_pattern(c.pattern) << " -> " << print_output(c.output);
        if (!c.guard.empty()) {
            out << " if ";
            for (std::size_t i = 0; i < c.guard.size(); ++i) {
                if (i) out << ", ";
                out << print_guard_atom(c.guard[i]);
            }
        }
        out << " ;\n";
    }
    return out.str();
}

void MapSpec::validate_total(std::uint64_t cap) const {
    for (const Point& x : truncation(space_, cap)) apply(x);
}

bool MapSpec::is_identity() const {
    if (clauses_.size() != 1) return false;
    const dsl::Clause& c = clauses_[0];
    return c.pattern.point_var && c.output.point_var && c.guard.empty() &&
           *c.pattern.point_var == *c.output.point_var;
}

DynMap MapSpec::as_map(std::string name) const {
    MapSpec copy = *this;
    return DynMap{space_,
                  [copy = std::move(copy)](const Point& x) { return copy.apply(x); },
                  name.empty() ? space_.name : std::move(name)};
}

MapContinuityResult validate_continuous(const DynMap& f, std::uint32_t depth) {
    for (const Point& x : truncation(f.space, depth)) {
        if (x.trailing_exp() == 0) continue;
        const Point target = f.apply(x);
        PointFamily fam = canonical_sequence(x, f.space);
        PointFamily images{
            [&f, fam](std::uint32_t k) { return f.apply(fam.at(k)); },
            "images of " + fam.description};
        ConvergenceResult r = converges_to(images, target, depth, f.space);
        if (!r.converged)
            return MapContinuityResult{
                false, depth,
                MapContinuityViolation{x, target, *r.witness, fam.description}};
    }
    return MapContinuityResult{true, depth, std::nullopt};
}

MapContinuityResult validate_continuous(const MapSpec& f, std::uint32_t depth) {
    return validate_continuous(f.as_map(), depth);
}

}  // namespace ordyn
