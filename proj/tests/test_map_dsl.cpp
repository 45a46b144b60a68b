#include <doctest.h>

#include "ordyn/fixtures.hpp"
#include "ordyn/map_dsl.hpp"

using namespace ordyn;

namespace {

Point pt(const std::string& s) { return Point::parse(s); }

SpaceSpec omega2_space() { return SpaceSpec{pt("w^2"), "omega2"}; }

}  // namespace

TEST_SUITE("map_dsl") {

TEST_CASE("the omega2 source parses to seven clauses") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    CHECK(fx.map.clause_count() == 7);
    fx.map.validate_total(12);
}

TEST_CASE("identity clause") {
    const SpaceSpec X = omega2_space();
    const MapSpec id = parse_map("x -> x", X);
    CHECK(id.clause_count() == 1);
    CHECK(id.is_identity());
    id.validate_total(6);
    CHECK(id.apply(pt("w*3+2")) == pt("w*3+2"));
}

TEST_CASE("omega2 clause applications") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    // column jump at a prime index: f(w*0+4) = w*4+4
    CHECK(fx.map.apply(fixtures::omega2_isolated(1, 5)) == fixtures::omega2_isolated(5, 5));
    // the top point is fixed
    CHECK(fx.map.apply(pt("w^2")) == pt("w^2"));
    // above-diagonal step at a prime column: f(w*3+2) = w*2+1
    CHECK(fx.map.apply(fixtures::omega2_isolated(4, 3)) == fixtures::omega2_isolated(3, 2));
    // rank-1 chain
    CHECK(fx.map.apply(pt("w*3")) == pt("w*2"));
    CHECK(fx.map.apply(pt("w")) == pt("w^2"));
    // non-prime column descends
    CHECK(fx.map.apply(fixtures::omega2_isolated(3, 4)) == fixtures::omega2_isolated(2, 4));
    CHECK(fx.map.apply(fixtures::omega2_isolated(1, 4)) == pt("w^2"));
}

TEST_CASE("missing base clause fails the totality scan") {
    const SpaceSpec X = omega2_space();
    const MapSpec partial = parse_map("w*(m-1)+(n-1) -> w*(m-1)+(n-1) if m > n+1", X);
    CHECK_THROWS_AS(partial.validate_total(5), DomainError);
}

TEST_CASE("parse diagnostics") {
    const SpaceSpec X = omega2_space();
    CHECK_THROWS_AS(parse_map("x -> ", X), ParseError);
    CHECK_THROWS_AS(parse_map("x -> y", X), ParseError);               // unbound variable
    CHECK_THROWS_AS(parse_map("w*m -> w*k", X), ParseError);           // unbound in output
    CHECK_THROWS_AS(parse_map("x -> w^3", X), ParseError);             // exceeds the top ordinal
    CHECK_THROWS_AS(parse_map("w*m w -> x", X), ParseError);
    CHECK_THROWS_AS(parse_map("", X), ParseError);
    try {
        parse_map("x -> x ;\nw*m -> ", X);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("print round-trips through parse") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    const std::string printed = fx.map.print();
    const MapSpec reparsed = parse_map(printed, fx.space);
    CHECK(reparsed.print() == printed);
    for (const Point& x : truncation(fx.space, 9)) CHECK(reparsed.apply(x) == fx.map.apply(x));
}

TEST_CASE("first-match is deterministic for disjoint clauses") {
    const SpaceSpec X{pt("w"), "X"};
    const MapSpec a = parse_map("w -> w ; 0 -> 1 ; (k) -> k-1", X);
    const MapSpec b = parse_map("0 -> 1 ; w -> w ; (k) -> k-1", X);
    for (const Point& x : truncation(X, 12)) CHECK(a.apply(x) == b.apply(x));
}

TEST_CASE("applying outside the space is a domain error") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    CHECK_THROWS_AS(fx.map.apply(pt("w^2+1")), DomainError);
    CHECK_THROWS_AS(fx.map.apply(pt("w^3")), DomainError);
}

TEST_CASE("guards: mod and prime") {
    const SpaceSpec X{pt("w"), "X"};
    const MapSpec m = parse_map("w -> w ; (k) -> 1 if k mod 3 = 1 ; (k) -> 2 if prime(k) ; (k) -> 0", X);
    CHECK(m.apply(pt("4")) == pt("1"));   // 4 = 1 (mod 3)
    CHECK(m.apply(pt("3")) == pt("2"));   // prime, not 1 mod 3
    CHECK(m.apply(pt("6")) == pt("0"));
    CHECK(m.apply(pt("7")) == pt("1"));   // first match wins over prime
}

TEST_CASE("validate_continuous accepts the omega2 map and the identity") {
    const fixtures::Fixture fx = fixtures::example_omega2();
    CHECK(validate_continuous(fx.map, 7).ok);
    const MapSpec id = parse_map("x -> x", omega2_space());
    CHECK(validate_continuous(id, 7).ok);
}

TEST_CASE("validate_continuous finds the violation of a column collapse") {
    // Collapse the second column to its index while fixing every limit point:
    // images of the approach to w*2 then stay below w.
    const SpaceSpec X = omega2_space();
    const MapSpec m = parse_map("w^2 -> w^2 ; w*m -> w*m ; w+(b) -> (b) ; x -> x", X);
    const MapContinuityResult r = validate_continuous(m, 7);
    REQUIRE_FALSE(r.ok);
    CHECK(r.violation->at == pt("w*2"));
    CHECK(r.violation->image == pt("w*2"));
}

}  // TEST_SUITE
