#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vinlab/enumerate.hpp"
#include "vinlab/lattice.hpp"

using namespace vinlab;

TEST_CASE("short vector counts on standard lattices") {
  SECTION("A2 has 6 roots") {
    ShortVectorQuery q{gram_A(2), -2, {}};
    auto v = short_vectors(q);
    CHECK(v.size() == 6);
    CHECK(v == oracles::box_short_vectors(q.gram, -2));
  }
  SECTION("E8 has 240 roots") {
    ShortVectorQuery q{gram_E(8), -2, {}};
    auto v = short_vectors(q);
    CHECK(v.size() == 240);
    CHECK(v == oracles::box_short_vectors(q.gram, -2));
  }
  SECTION("A1 has no vectors of norm -4") {
    ShortVectorQuery q{gram_A(1), -4, {}};
    CHECK(short_vectors(q).empty());
  }
  SECTION("indefinite gram is rejected") {
    ShortVectorQuery q{gram_U(), -2, {}};
    CHECK_THROWS_AS(short_vectors(q), Error);
  }
}

TEST_CASE("short vectors match the box-search oracle") {
  std::vector<std::string> exprs = {"A1", "A2", "A3", "D4", "A1^4", "D5",
                                    "A2(2)", "D4(2)", "E6", "E8", "D8"};
  for (const auto& e : exprs) {
    Lattice l = build_lattice(e);
    if (l.rank() > 8) continue;
    for (long t : {-2, -4, -6, -8}) {
      ShortVectorQuery q{l.gram, t, {}};
      auto got = short_vectors(q);
      auto want = oracles::box_short_vectors(l.gram, t);
      INFO(e << " target " << t);
      CHECK(got == want);
      // Closure under negation with zero offset.
      for (const IntVec& v : got)
        CHECK(std::binary_search(
            got.begin(), got.end(), negate(v),
            [](const IntVec& a, const IntVec& b) { return lex_compare(a, b) < 0; }));
    }
  }
}

TEST_CASE("short vectors with affine offsets") {
  std::mt19937 rng(41);
  std::vector<std::string> exprs = {"A2", "A3", "D4", "A1^3"};
  for (const auto& e : exprs) {
    Lattice l = build_lattice(e);
    Enumerator en(l.gram);
    for (int trial = 0; trial < 4; ++trial) {
      RatVec off(l.rank());
      for (auto& x : off) x = Rat(int(rng() % 5) - 2, 1 + int(rng() % 3));
      Rat target = 0;
      // Aim at an attainable value: random integer point's norm.
      IntVec pt(l.rank());
      for (auto& x : pt) x = int(rng() % 3) - 1;
      for (int i = 0; i < l.rank(); ++i)
        for (int j = 0; j < l.rank(); ++j)
          target += (Rat(pt[i]) + off[i]) * Rat(l.gram(i, j)) * (Rat(pt[j]) + off[j]);
      auto got = en.enumerate(target, off);
      CHECK(std::find(got.begin(), got.end(), pt) != got.end());
      if (is_integer(target)) {
        auto want = oracles::box_short_vectors(l.gram, num(target), off);
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("constraints prune soundly") {
  Lattice l = build_lattice("D4");
  Enumerator en(l.gram);
  // Half-space x . g row0 >= 0 keeps exactly the roots with nonnegative
  // first product.
  Constraint c;
  c.coeff = l.gram.row(0);
  c.constant = 0;
  auto all = en.enumerate(Rat(-2), {}, {});
  auto half = en.enumerate(Rat(-2), {}, {c});
  size_t manual = 0;
  for (const IntVec& v : all)
    if (dot(c.coeff, v) >= 0) ++manual;
  CHECK(half.size() == manual);
  CHECK(all.size() == 24);
  for (const IntVec& v : half) CHECK(dot(c.coeff, v) >= 0);
}
