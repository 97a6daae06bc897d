#pragma once

// Independent oracles used by the test suites. These deliberately avoid the
// library's algorithm paths: naive box search instead of Fincke-Pohst, plain
// row/column reduction instead of the library SNF, the rank-3 angle-sum rule
// instead of the Lanner catalog.

#include "vinlab/lattice.hpp"

#include <random>

namespace oracles {

using namespace vinlab;

// All x with (x + offset)^T g (x + offset) == target, by exhaustive search
// over the exact dual-diagonal bounding box |x_i + offset_i| <=
// sqrt(|target| * (-g^{-1})_ii).
inline std::vector<IntVec> box_short_vectors(const IntMat& g, const Int& target,
                                             const RatVec& offset = {}) {
  int n = g.rows();
  RatVec c(n, Rat(0));
  if (!offset.empty()) c = offset;
  // Bounds from the inverse diagonal.
  std::vector<Int> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = -1;  // (-g)^{-1} = -(g^{-1})
    RatVec col = solve_rational(g, e);
    Rat b = Rat(-target) * col[i];
    require(b >= 0, "gram not negative definite");
    // |x_i + c_i| <= sqrt(b): integer range via scaled isqrt
    Int u = num(c[i]), w = den(c[i]);
    Int bb = floor_div(num(b) * w * w, den(b));
    Int s = isqrt_floor(bb);
    lo[i] = ceil_div(-s - u, w);
    hi[i] = floor_div(s - u, w);
  }
  std::vector<IntVec> out;

  bool integral = std::all_of(c.begin(), c.end(), [](const Rat& r) { return r == 0; });
  if (integral) {
    // Plain incremental evaluation in machine integers; values stay tiny.
    std::vector<std::vector<long long>> gg(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gg[i][j] = long(g(i, j));
    std::vector<long long> x(n), linear(n + 1, 0), quad(n + 1, 0);
    long long t = long(target);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        if (quad[n] == t) {
          IntVec v(n);
          for (int k = 0; k < n; ++k) v[k] = x[k];
          out.push_back(v);
        }
        return;
      }
      for (long long v = long(lo[i]); v <= long(hi[i]); ++v) {
        x[i] = v;
        long long lin = 0;
        for (int j = 0; j < i; ++j) lin += gg[i][j] * x[j];
        quad[i + 1] = quad[i] + v * (gg[i][i] * v + 2 * lin);
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  } else {
    IntVec x(n);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        Rat q = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            q += (Rat(x[a]) + c[a]) * Rat(g(a, b)) * (Rat(x[b]) + c[b]);
        if (q == Rat(target)) out.push_back(x);
        return;
      }
      for (Int v = lo[i]; v <= hi[i]; ++v) {
        x[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const IntVec& a, const IntVec& b) { return lex_compare(a, b) < 0; });
  return out;
}

// Diagonal of an SNF computed by repeated gcd row/column reduction, without
// transform bookkeeping. Returns the invariant factors.
inline std::vector<Int> naive_snf_diagonal(IntMat m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<Int> diag;
  int t = 0;
  while (t < std::min(rows, cols)) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);
    bool again = false;
    for (int i = t + 1; i < rows; ++i)
      if (m(i, t) % m(t, t) != 0) {
        Int q = floor_div(m(i, t), m(t, t));
        for (int j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        again = true;
      }
    for (int j = t + 1; j < cols; ++j)
      if (m(t, j) % m(t, t) != 0) {
        Int q = floor_div(m(t, j), m(t, t));
        for (int i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        again = true;
      }
    if (again) continue;
    for (int i = t + 1; i < rows; ++i) {
      Int q = m(i, t) / m(t, t);
      for (int j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
    }
    for (int j = t + 1; j < cols; ++j) {
      Int q = m(t, j) / m(t, t);
      for (int i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
    }
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (int jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
          divides = false;
        }
    if (!divides) continue;
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

// Rank-3 Lanner oracle: a triangle of finite Coxeter labels (2, 3, 4 from
// the edge table) is hyperbolic compact iff 1/p + 1/q + 1/r < 1.
inline std::optional<bool> angle_sum_lanner(const std::vector<Int>& norms,
                                            const std::vector<Int>& products) {
  // products: (01, 02, 12). Labels: none -> 2, simple -> 3, double -> 4;
  // bold/broken have no finite label.
  auto label = [&](int a, int b, const Int& p) -> int {
    if (p == 0) return 2;
    if (norms[a] == norms[b]) {
      Int simple = norms[a] == -2 ? 1 : 2;
      if (p == simple) return 3;
      return 0;
    }
    if (p == 2) return 4;
    return 0;
  };
  int p = label(0, 1, products[0]);
  int q = label(0, 2, products[1]);
  int r = label(1, 2, products[2]);
  if (!p || !q || !r) return std::nullopt;  // infinite label: not a simplex triangle
  Rat sum = Rat(1, p) + Rat(1, q) + Rat(1, r);
  return sum < 1;
}

inline IntMat random_int_matrix(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

inline IntMat random_unimodular(std::mt19937& rng, int n, int steps = 30) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int c = coef(rng);
    for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

}  // namespace oracles
