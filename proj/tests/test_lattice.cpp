#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vinlab/lattice.hpp"

using namespace vinlab;

TEST_CASE("lattice expressions") {
  SECTION("the (11,11,1) presentation") {
    Lattice l = build_lattice("U(2)+E8(2)+A1");
    CHECK(l.rank() == 11);
    CHECK(abs(det(l.gram)) == 2048);
    CHECK(l.signature() == Inertia{1, 10, 0});
  }
  SECTION("hyperbolic plane") {
    Lattice l = build_lattice("U");
    CHECK(l.gram(0, 0) == 0);
    CHECK(l.gram(0, 1) == 1);
    CHECK(l.gram(1, 0) == 1);
    CHECK(l.gram(1, 1) == 0);
  }
  SECTION("U+D8+D8 equals U+C8^2 as a (-2)-root lattice") {
    Lattice l = build_lattice("U+D8+D8");
    CHECK(l.rank() == 18);
    CHECK(l.signature() == Inertia{1, 17, 0});
    Lattice alias = build_lattice("U+C8+C8");
    CHECK(alias.gram == l.gram);
  }
  SECTION("aliases B, C, F") {
    CHECK(build_lattice("B2(2)").gram == build_lattice("A1+A1").gram);
    CHECK(build_lattice("F4").gram == build_lattice("D4").gram);
    CHECK(build_lattice("C3").gram == build_lattice("D3").gram);
  }
  SECTION("repetition shorthand") {
    CHECK(build_lattice("A1^3").gram == build_lattice("A1+A1+A1").gram);
  }
  SECTION("odd forms parse but are flagged") {
    Lattice l = build_lattice("I{1,2}");
    CHECK_FALSE(l.is_even());
    CHECK(build_lattice("I{0,12}(2)").is_even());
  }
  SECTION("parse failures") {
    CHECK_THROWS_AS(build_lattice("Q5"), Error);
    CHECK_THROWS_AS(build_lattice("U+"), Error);
    CHECK_THROWS_AS(build_lattice("B3"), Error);  // odd without scale
    CHECK_THROWS_AS(build_lattice("E9"), Error);
  }
}

TEST_CASE("two-elementary invariants") {
  SECTION("(11,11,1)") {
    auto inv = two_elementary_invariants(build_lattice("U(2)+E8(2)+A1"));
    CHECK(inv.is_two_elementary);
    CHECK(inv.r == 11);
    CHECK(inv.a == 11);
    CHECK(inv.delta == 1);
    CHECK(inv.g == 0);
    CHECK(inv.k == 0);
  }
  SECTION("U is unimodular") {
    auto inv = two_elementary_invariants(build_lattice("U"));
    CHECK(inv.r == 2);
    CHECK(inv.a == 0);
    CHECK(inv.delta == 0);
    CHECK(inv.g == 10);
    CHECK(inv.k == 1);
  }
  SECTION("(13,9,1)") {
    auto inv = two_elementary_invariants(build_lattice("U+D4+A1^7"));
    CHECK(inv.r == 13);
    CHECK(inv.a == 9);
    CHECK(inv.delta == 1);
  }
  SECTION("dual presentations agree") {
    auto a = two_elementary_invariants(build_lattice("U+F4+B7(2)"));
    auto b = two_elementary_invariants(build_lattice("U+D4+A1^7"));
    CHECK(a.r == b.r);
    CHECK(a.a == b.a);
    CHECK(a.delta == b.delta);
  }
  SECTION("coparity zero cases") {
    CHECK(two_elementary_invariants(build_lattice("U(2)+D4^3")).delta == 0);
    CHECK(two_elementary_invariants(build_lattice("U+D8+D8")).delta == 0);
    auto inv = two_elementary_invariants(build_lattice("U(2)+D8+D6"));
    CHECK(inv.r == 16);
    CHECK(inv.a == 6);
    CHECK(inv.delta == 1);
  }
  SECTION("not two-elementary") {
    CHECK_FALSE(two_elementary_invariants(build_lattice("U+A2")).is_two_elementary);
  }
}

TEST_CASE("divisibility and roots") {
  Lattice u = build_lattice("U");
  CHECK(divisibility(u, {1, 0}) == 1);
  Lattice a1 = build_lattice("A1");
  CHECK(divisibility(a1, {1}) == 2);
  SECTION("every root of E8(2) has divisibility 2") {
    Lattice l = build_lattice("E8(2)");
    auto roots = oracles::box_short_vectors(l.gram, -4);
    CHECK(roots.size() == 240);
    for (const IntVec& r : roots) CHECK(divisibility(l, r) == 2);
  }
  SECTION("is_root cases") {
    Lattice l = build_lattice("U+A1");
    CHECK(is_root(l, {0, 0, 1}));           // norm -2
    CHECK_FALSE(is_root(l, {1, -3, 1}));    // norm -8
    Lattice l2 = build_lattice("U+D4");
    IntVec lng{0, 0, 0, 0, 1, 1};  // sum of the two fork roots = a long root
    CHECK(l2.norm(lng) == -4);
    CHECK(divisibility(l2, lng) == 2);
    CHECK(is_root(l2, lng));                // norm -4, divisibility 2
    Lattice l3 = build_lattice("U+D4");
    IntVec v{1, -2, 0, 0, 0, 0};
    CHECK(l3.norm(v) == -4);
    CHECK(divisibility(l3, v) == 1);
    CHECK_FALSE(is_root(l3, v));            // norm -4 but divisibility 1
  }
}

TEST_CASE("quotient lattice") {
  SECTION("U by its isotropic generator has rank 0") {
    Lattice q = quotient_lattice(build_lattice("U"), {1, 0});
    CHECK(q.rank() == 0);
  }
  SECTION("U+A1 by e recovers A1") {
    Lattice q = quotient_lattice(build_lattice("U+A1"), {1, 0, 0});
    REQUIRE(q.rank() == 1);
    CHECK(q.gram(0, 0) == -2);
  }
  SECTION("quotient signature is (0, r-2)") {
    Lattice l = build_lattice("U+D4+A1");
    Lattice q = quotient_lattice(l, {1, 0, 0, 0, 0, 0, 0});
    CHECK(q.signature() == Inertia{0, 5, 0});
  }
  SECTION("rejects bad input") {
    Lattice l = build_lattice("U");
    CHECK_THROWS_AS(quotient_lattice(l, {1, 1}), Error);  // norm 2
    CHECK_THROWS_AS(quotient_lattice(l, {2, 0}), Error);  // imprimitive
  }
}

TEST_CASE("isotropic classification") {
  SECTION("odd vector in U-summand") {
    Lattice l = build_lattice("U+D4+A1");
    auto c = classify_isotropic(l, {1, 0, 0, 0, 0, 0, 0});
    CHECK(c.kind == IsotropicKind::odd);
    CHECK(c.quotient.a == two_elementary_invariants(l).a);
  }
  SECTION("even vector in U(2)-summand") {
    Lattice l = build_lattice("U(2)+D4^3");
    auto amb = two_elementary_invariants(l);
    auto c = classify_isotropic(l, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(c.kind == IsotropicKind::even_ordinary);
    CHECK(c.quotient.a == amb.a - 2);
    CHECK(c.quotient.delta == amb.delta);
  }
  SECTION("kind is constant under reflections") {
    Lattice l = build_lattice("U+D4+A1");
    IntVec v{1, 0, 0, 0, 0, 0, 0};
    auto kind0 = classify_isotropic(l, v).kind;
    IntVec root{0, 0, 1, 0, 0, 0, 0};
    IntVec w = reflect(l, root, v);
    CHECK(l.norm(w) == 0);
    CHECK(classify_isotropic(l, w).kind == kind0);
  }
}
