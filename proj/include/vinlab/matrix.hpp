#pragma once

#include "vinlab/core.hpp"

namespace vinlab {

// Dense arbitrary-precision integer matrix, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntVec row(int i) const {
    IntVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  IntVec col(int j) const {
    IntVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(int i, int j) {
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

inline IntMat mul(const IntMat& a, const IntMat& b) {
  require(a.cols() == b.rows(), "matrix dimension mismatch");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline IntVec mul(const IntMat& a, const IntVec& x) {
  require(a.cols() == int(x.size()), "matrix/vector dimension mismatch");
  IntVec y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// x^T G y for a symmetric Gram matrix G.
inline Int inner(const IntMat& g, const IntVec& x, const IntVec& y) {
  return dot(x, mul(g, y));
}

inline IntMat block_diag(const IntMat& a, const IntMat& b) {
  IntMat c(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

// Fraction-free Gaussian elimination (Bareiss).
inline Int det(IntMat m) {
  require(m.rows() == m.cols(), "det of non-square matrix");
  int n = m.rows();
  Int prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;
      }
    prev = m(k, k);
  }
  return n == 0 ? Int(1) : sign * m(n - 1, n - 1);
}

struct SmithResult {
  IntMat d;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMat u;  // unimodular row transform
  IntMat v;  // unimodular column transform: u * m * v == d
  std::vector<Int> invariant_factors() const {
    std::vector<Int> f;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i)
      if (d(i, i) != 0) f.push_back(d(i, i));
    return f;
  }
};

inline SmithResult smith_normal_form(IntMat m) {
  int rows = m.rows(), cols = m.cols();
  IntMat u = IntMat::identity(rows), v = IntMat::identity(cols);

  auto add_row = [&](int dst, int src, const Int& c) {
    for (int j = 0; j < cols; ++j) m(dst, j) += c * m(src, j);
    for (int j = 0; j < rows; ++j) u(dst, j) += c * u(src, j);
  };
  auto add_col = [&](int dst, int src, const Int& c) {
    for (int i = 0; i < rows; ++i) m(i, dst) += c * m(i, src);
    for (int i = 0; i < cols; ++i) v(i, dst) += c * v(i, src);
  };
  auto swap_row = [&](int i, int j) {
    m.swap_rows(i, j);
    u.swap_rows(i, j);
  };
  auto swap_col = [&](int i, int j) {
    m.swap_cols(i, j);
    v.swap_cols(i, j);
  };

  int n = std::min(rows, cols);
  for (int t = 0; t < n; ++t) {
    // Move a minimal-magnitude nonzero entry of the trailing block to (t,t).
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          if (m(i, j) == 0) continue;
          if (pi < 0 || abs(m(i, j)) < abs(m(pi, pj))) pi = i, pj = j;
        }
      if (pi < 0) {
        pi = pj = -1;
        break;
      }
      if (pi != t) swap_row(t, pi);
      if (pj != t) swap_col(t, pj);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i)
        if (m(i, t) != 0) {
          add_row(i, t, -floor_div(m(i, t), m(t, t)));
          if (m(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < cols; ++j)
        if (m(t, j) != 0) {
          add_col(j, t, -floor_div(m(t, j), m(t, t)));
          if (m(t, j) != 0) clean = false;
        }
      if (!clean) continue;
      // Pivot must divide the whole trailing block for the SNF chain.
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols && divides; ++j)
          if (m(i, j) % m(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (m(t, t) == 0) break;
    if (m(t, t) < 0) {
      for (int j = 0; j < cols; ++j) m(t, j) = -m(t, j);
      for (int j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithResult{m, u, v};
}

struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Sylvester inertia by exact symmetric elimination over Q.
inline Inertia inertia(const IntMat& g) {
  require(g.is_symmetric(), "inertia requires a symmetric matrix");
  int n = g.rows();
  std::vector<RatVec> a(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(g(i, j));

  Inertia res;
  std::vector<int> live(n);
  std::iota(live.begin(), live.end(), 0);

  while (!live.empty()) {
    int piv = -1;
    for (int i : live)
      if (a[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // All diagonal zero: find off-diagonal entry and symmetrize, or stop.
      int pi = -1, pj = -1;
      for (size_t x = 0; x < live.size() && pi < 0; ++x)
        for (size_t y = x + 1; y < live.size(); ++y)
          if (a[live[x]][live[y]] != 0) {
            pi = live[x];
            pj = live[y];
            break;
          }
      if (pi < 0) {
        res.zero += int(live.size());
        break;
      }
      // Congruence: row/col pi += row/col pj makes the diagonal nonzero.
      for (int k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (int k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      continue;
    }
    Rat d = a[piv][piv];
    if (d > 0)
      ++res.pos;
    else
      ++res.neg;
    std::vector<int> rest;
    for (int i : live)
      if (i != piv) rest.push_back(i);
    RatVec pivot_row(n);
    for (int j : rest) pivot_row[j] = a[piv][j];
    for (int i : rest) {
      Rat f = a[i][piv] / d;
      if (f == 0) continue;
      for (int j : rest) a[i][j] -= f * pivot_row[j];
    }
    live = std::move(rest);
  }
  return res;
}

// Saturated integer kernel { x : m x = 0 }, basis as columns.
inline IntMat kernel_basis(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  int rank = 0;
  int n = std::min(s.d.rows(), s.d.cols());
  for (int i = 0; i < n; ++i)
    if (s.d(i, i) != 0) ++rank;
  int free = m.cols() - rank;
  IntMat k(m.cols(), free);
  for (int j = 0; j < free; ++j)
    for (int i = 0; i < m.cols(); ++i) k(i, j) = s.v(i, rank + j);
  return k;
}

// Extends a primitive vector to a Z-basis: returns unimodular W with first
// column w.
inline IntMat complete_to_basis(const IntVec& w) {
  int n = int(w.size());
  IntMat col(n, 1);
  for (int i = 0; i < n; ++i) col(i, 0) = w[i];
  SmithResult s = smith_normal_form(col);
  require(s.d(0, 0) == 1, "complete_to_basis requires a primitive vector");
  // u * w = e1, so u^{-1} has first column w; invert the row ops cheaply by
  // solving u * X = I via the adjugate-free route: u is unimodular.
  // Build inverse by Gaussian elimination over Q and round (entries integer).
  int nn = n;
  std::vector<RatVec> a(nn, RatVec(2 * nn));
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) a[i][j] = Rat(s.u(i, j));
    a[i][nn + i] = 1;
  }
  for (int ccol = 0; ccol < nn; ++ccol) {
    int piv = -1;
    for (int i = ccol; i < nn; ++i)
      if (a[i][ccol] != 0) {
        piv = i;
        break;
      }
    require(piv >= 0, "singular unimodular matrix?");
    std::swap(a[ccol], a[piv]);
    Rat d = a[ccol][ccol];
    for (int j = 0; j < 2 * nn; ++j) a[ccol][j] /= d;
    for (int i = 0; i < nn; ++i) {
      if (i == ccol || a[i][ccol] == 0) continue;
      Rat f = a[i][ccol];
      for (int j = 0; j < 2 * nn; ++j) a[i][j] -= f * a[ccol][j];
    }
  }
  IntMat w_full(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      require(is_integer(a[i][nn + j]), "inverse of unimodular not integral");
      w_full(i, j) = num(a[i][nn + j]);
    }
  return w_full;
}

// Solve g x = b over Q; g square nonsingular.
inline RatVec solve_rational(const IntMat& g, const RatVec& b) {
  int n = g.rows();
  require(g.cols() == n && int(b.size()) == n, "solve dimension mismatch");
  std::vector<RatVec> a(n, RatVec(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(g(i, j));
    a[i][n] = b[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    require(piv >= 0, "singular matrix in solve");
    std::swap(a[c], a[piv]);
    Rat d = a[c][c];
    for (int j = c; j <= n; ++j) a[c][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

// Twice-style dual basis: vectors w_j with <basis_i, w_j> = scale * delta_ij,
// in basis coordinates. Column j of scale * g^{-1}.
inline std::vector<RatVec> dual_basis(const IntMat& g, const Rat& scale) {
  require(g.is_symmetric(), "dual_basis requires symmetric Gram");
  require(det(g) != 0, "dual_basis requires nondegenerate Gram");
  int n = g.rows();
  std::vector<RatVec> duals(n);
  for (int j = 0; j < n; ++j) {
    RatVec e(n);
    e[j] = scale;
    duals[j] = solve_rational(g, e);
  }
  return duals;
}

inline Rat inner_rat(const IntMat& g, const RatVec& x, const RatVec& y) {
  int n = g.rows();
  Rat s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rat t = 0;
    for (int j = 0; j < n; ++j) t += Rat(g(i, j)) * y[j];
    s += x[i] * t;
  }
  return s;
}

inline int rank(IntMat m) {
  int rows = m.rows(), cols = m.cols(), r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Int a = m(r, c), b = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) * a - m(r, j) * b;
    }
    ++r;
  }
  return r;
}

// True iff the columns of m span Z^rows with index 1.
inline bool spans_unimodularly(const IntMat& m) {
  if (m.cols() < m.rows()) return false;
  SmithResult s = smith_normal_form(m);
  auto f = s.invariant_factors();
  if (int(f.size()) != m.rows()) return false;
  return std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 1; });
}

}  // namespace vinlab
