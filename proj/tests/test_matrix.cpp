#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vinlab/lattice.hpp"
#include "vinlab/matrix.hpp"

using namespace vinlab;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
  IntMat m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  SECTION("already diagonal") {
    IntMat m = from_rows({{2, 0}, {0, 2}});
    SmithResult s = smith_normal_form(m);
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 1) == 2);
    CHECK(mul(mul(s.u, m), s.v) == s.d);
  }
  SECTION("hyperbolic plane is unimodular") {
    IntMat m = gram_U();
    SmithResult s = smith_normal_form(m);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 1);
  }
  SECTION("U(2) + E8(2) + A1 has eleven invariant factors equal to 2") {
    Lattice l = build_lattice("U(2)+E8(2)+A1");
    SmithResult s = smith_normal_form(l.gram);
    auto f = s.invariant_factors();
    REQUIRE(f.size() == 11);
    for (const Int& x : f) CHECK(x == 2);
    CHECK(abs(det(l.gram)) == Int(1) << 11);
    // Independent SNF oracle.
    auto g = oracles::naive_snf_diagonal(l.gram);
    CHECK(std::vector<Int>(f.begin(), f.end()) == g);
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + int(rng() % 24);
    IntMat m = oracles::random_int_matrix(rng, n, -6, 6);
    SmithResult s = smith_normal_form(m);
    CHECK(mul(mul(s.u, m), s.v) == s.d);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    CHECK(abs(det(s.d)) == abs(det(m)));
    auto f = s.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    CHECK(oracles::naive_snf_diagonal(m) == std::vector<Int>(f.begin(), f.end()));
  }
}

TEST_CASE("inertia of standard lattices") {
  CHECK(inertia(gram_U()) == Inertia{1, 1, 0});
  CHECK(inertia(gram_E(8)) == Inertia{0, 8, 0});
  Lattice l = build_lattice("U+D4+A1+A1+A1+A1+A1+A1+A1");
  REQUIRE(l.rank() == 13);
  CHECK(inertia(l.gram) == Inertia{1, 12, 0});
}

TEST_CASE("inertia is invariant under unimodular congruence") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + int(rng() % 8);
    IntMat m = oracles::random_int_matrix(rng, n, -4, 4);
    // Symmetrize.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
    IntMat u = oracles::random_unimodular(rng, n);
    IntMat conj = mul(mul(u, m), u.transpose());
    CHECK(inertia(m) == inertia(conj));
  }
}

TEST_CASE("dual basis") {
  SECTION("one-dimensional") {
    IntMat g = from_rows({{-2}});
    auto d = dual_basis(g, 2);
    REQUIRE(d.size() == 1);
    CHECK(d[0][0] == Rat(-1));
  }
  SECTION("recovers scale times identity") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
      int n = 2 + int(rng() % 6);
      IntMat m = oracles::random_int_matrix(rng, n, -5, 5);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
      if (det(m) == 0) continue;
      auto d = dual_basis(m, 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rat prod = 0;
          for (int k = 0; k < n; ++k) prod += Rat(m(i, k)) * d[j][k];
          CHECK(prod == (i == j ? Rat(2) : Rat(0)));
        }
    }
  }
}

TEST_CASE("dual basis products for the K5^(2) main roots") {
  // 15 vertices: 0..4 for K5 vertices, 5.. for the edges in lex order.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) edges.push_back({i, j});
  IntMat g(15, 15);
  for (int i = 0; i < 15; ++i) g(i, i) = -2;
  for (size_t e = 0; e < edges.size(); ++e) {
    g(edges[e].first, int(5 + e)) = g(int(5 + e), edges[e].first) = 1;
    g(edges[e].second, int(5 + e)) = g(int(5 + e), edges[e].second) = 1;
  }
  auto omega = dual_basis(g, 2);
  auto prod = [&](int a, int b) { return inner_rat(g, omega[a], omega[b]); };
  auto eidx = [&](int a, int b) {
    for (size_t e = 0; e < edges.size(); ++e)
      if (edges[e] == std::pair<int, int>{a, b}) return int(5 + e);
    FAIL("edge not found");
    return -1;
  };
  CHECK(prod(0, 0) == Rat(-6));
  CHECK(prod(0, 1) == Rat(2));
  CHECK(prod(0, eidx(0, 1)) == Rat(-2));
  CHECK(prod(0, eidx(1, 2)) == Rat(2));
  CHECK(prod(eidx(0, 1), eidx(0, 1)) == Rat(-4));
  CHECK(prod(eidx(0, 1), eidx(1, 2)) == Rat(0));
  CHECK(prod(eidx(0, 1), eidx(2, 3)) == Rat(2));
}

TEST_CASE("dual basis products for the K6 edge roots plus vertex sum") {
  // Basis: 15 mutually orthogonal (-2) edge roots and the vertex-root sum
  // with square -12 meeting every edge root in 2.
  IntMat g(16, 16);
  for (int i = 0; i < 15; ++i) g(i, i) = -2;
  g(15, 15) = -12;
  for (int i = 0; i < 15; ++i) g(i, 15) = g(15, i) = 2;
  auto omega = dual_basis(g, 2);
  auto prod = [&](int a, int b) { return inner_rat(g, omega[a], omega[b]); };
  CHECK(prod(0, 0) == Rat(-16, 9));
  CHECK(prod(0, 1) == Rat(2, 9));
  CHECK(prod(0, 15) == Rat(2, 9));
  CHECK(prod(15, 15) == Rat(2, 9));
}

TEST_CASE("kernel and completion") {
  IntMat m = from_rows({{2, 4, 6}});
  IntMat k = kernel_basis(m);
  REQUIRE(k.cols() == 2);
  for (int j = 0; j < 2; ++j) CHECK(dot(m.row(0), k.col(j)) == 0);
  IntVec w{3, 5, 7};
  IntMat full = complete_to_basis(w);
  CHECK(abs(det(full)) == 1);
  CHECK(full.col(0) == w);
}
