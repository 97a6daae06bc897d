#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vinlab/finiteness.hpp"
#include "vinlab/vinberg.hpp"

using namespace vinlab;

TEST_CASE("roots at height zero") {
  SECTION("(14,8,1) with v0 = e + f") {
    Lattice l = build_lattice("U+D4+D4+A1^4");
    IntVec v0(l.rank(), Int(0));
    v0[0] = v0[1] = 1;
    auto r2 = roots_at_height(l, v0, -2, 0);
    // (-2)-roots orthogonal to v0: e - f, the 24+24 roots of D4^2, and the
    // four A1 pairs.
    CHECK(r2.size() == 58);
    auto r4 = roots_at_height(l, v0, -4, 0);
    // Long roots of the two F4 = D4 blocks (24 each) plus the 24 pair sums
    // from the four A1 summands.
    CHECK(r4.size() == 72);
    for (const IntVec& a : r2) {
      CHECK(l.norm(a) == -2);
      CHECK(l.product(a, v0) == 0);
    }
    for (const IntVec& a : r4) {
      CHECK(l.norm(a) == -4);
      CHECK(divisibility(l, a) == 2);
    }
  }
  SECTION("closed under negation at height zero") {
    Lattice l = build_lattice("U+A2(2)+A1");
    IntVec v0{1, 1, 0, 0, 0};
    auto r = roots_at_height(l, v0, -2, 0);
    for (const IntVec& a : r)
      CHECK(std::find(r.begin(), r.end(), negate(a)) != r.end());
  }
}

TEST_CASE("initial chamber") {
  SECTION("U + A1 has a single chamber root") {
    Lattice l = build_lattice("U+A1");
    auto ch = initial_chamber(l, {1, 1, 0});
    REQUIRE(ch.size() == 2);  // e - f and the A1 generator
    for (const Root& r : ch) CHECK(r.height == 0);
  }
  SECTION("(14,8,1): simple system size equals the rank of the perp root system") {
    Lattice l = build_lattice("U+D4+D4+A1^4");
    IntVec v0(l.rank(), Int(0));
    v0[0] = v0[1] = 1;
    auto ch = initial_chamber(l, v0);
    // v0-perp carries A1 (from e-f), two F4 blocks (D4 with long roots),
    // and four A1's: rank 13.
    CHECK(ch.size() == 13);
    for (size_t i = 0; i < ch.size(); ++i)
      for (size_t j = i + 1; j < ch.size(); ++j)
        CHECK(l.product(ch[i].v, ch[j].v) >= 0);
  }
  SECTION("chamber is deterministic") {
    Lattice l = build_lattice("U+D4+A1");
    IntVec v0{1, 1, 0, 0, 0, 0, 0};
    auto a = initial_chamber(l, v0);
    auto b = initial_chamber(l, v0);
    CHECK(a == b);
  }
}

TEST_CASE("acceptance check") {
  Lattice l = build_lattice("U+A1+A1");
  std::vector<Root> accepted;
  accepted.push_back(make_root(l, {0, 0, 1, 0}, 0));
  CHECK(acceptance_check(l, {0, 0, 0, 1}, accepted));   // orthogonal
  CHECK_FALSE(acceptance_check(l, {0, 0, 1, 1}, accepted));  // product -2
}

TEST_CASE("small complete runs") {
  SECTION("(11,11,1) has 12 roots") {
    Lattice l = build_lattice("U(2)+E8(2)+A1");
    IntVec v0(11, Int(0));
    v0[0] = v0[1] = 1;
    VinbergRun run = run_vinberg_complete(l, v0);
    CHECK(run.status == RunStatus::complete);
    CHECK(run.roots.size() == 12);
    SECTION("rerun reproduces the identical ordered list") {
      VinbergRun again = run_vinberg_complete(l, v0);
      CHECK(again.roots == run.roots);
    }
    SECTION("pairwise products nonnegative") {
      for (size_t i = 0; i < run.roots.size(); ++i)
        for (size_t j = i + 1; j < run.roots.size(); ++j)
          CHECK(l.product(run.roots[i].v, run.roots[j].v) >= 0);
    }
    SECTION("roots generate the lattice") {
      IntMat m(l.rank(), int(run.roots.size()));
      for (int j = 0; j < int(run.roots.size()); ++j)
        for (int i = 0; i < l.rank(); ++i) m(i, j) = run.roots[j].v[i];
      CHECK(spans_unimodularly(m));
    }
  }
  SECTION("(12,10,1) has 14 roots") {
    Lattice l = build_lattice("U+E8(2)+B2(2)");
    IntVec v0(12, Int(0));
    v0[0] = v0[1] = 1;
    VinbergRun run = run_vinberg_complete(l, v0);
    CHECK(run.status == RunStatus::complete);
    CHECK(run.roots.size() == 14);
    SECTION("14th root replays against the first 13") {
      std::vector<Root> first13(run.roots.begin(), run.roots.begin() + 13);
      CHECK(acceptance_check(l, run.roots[13].v, first13));
    }
  }
}

TEST_CASE("budget exhaustion reports honestly") {
  Lattice l = build_lattice("U(2)+E8(2)+A1");
  IntVec v0(11, Int(0));
  v0[0] = v0[1] = 1;
  Budget tiny{5, 2};
  VinbergRun run = run_vinberg_complete(l, v0, tiny);
  CHECK(run.status == RunStatus::budget_exhausted);
}

TEST_CASE("rejects invalid inputs") {
  Lattice l = build_lattice("U+A1");
  CHECK_THROWS_AS(run_vinberg(l, {0, 0, 1}), Error);      // negative norm control
  CHECK_THROWS_AS(run_vinberg(l, {1, 0, 0}), Error);      // isotropic control
  Lattice neg = build_lattice("A2");
  CHECK_THROWS_AS(run_vinberg(neg, {1, 0}), Error);       // not hyperbolic
}
