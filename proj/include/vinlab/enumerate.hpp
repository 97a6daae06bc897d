#pragma once

#include "vinlab/matrix.hpp"

namespace vinlab {

// Linear side condition coeff.x + constant >= 0 imposed on enumerated vectors.
struct Constraint {
  IntVec coeff;
  Int constant;
};

struct ShortVectorQuery {
  IntMat gram;    // negative definite
  Int target;     // even negative (or zero) norm
  RatVec offset;  // affine shift, may be empty for zero
};

// Fincke-Pohst style enumerator over a fixed negative definite Gram matrix.
// The LDL data is exact rational and reused across calls. Inside a call all
// recursion state is scaled to integers over fixed denominators, so the hot
// loop never touches rational arithmetic; constraints prune subtrees through
// the exact ellipsoid bound max l = sqrt(R * sum(l_j^2 / D_j)).
class Enumerator {
 public:
  explicit Enumerator(const IntMat& gram) : n_(gram.rows()), gram_(gram) {
    require(gram.is_symmetric(), "enumerator needs a symmetric Gram");
    std::vector<RatVec> q(n_, RatVec(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) q[i][j] = Rat(-gram(i, j));
    d_.assign(n_, Rat(0));
    c_.assign(n_, RatVec(n_, Rat(0)));
    for (int k = 0; k < n_; ++k) {
      require(q[k][k] > 0, "indefinite gram");
      d_[k] = q[k][k];
      for (int j = k + 1; j < n_; ++j) c_[k][j] = q[k][j] / d_[k];
      for (int i = k + 1; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
          q[i][j] -= d_[k] * c_[k][i] * c_[k][j];
          q[j][i] = q[i][j];
        }
    }
    mc_ = 1;
    for (int k = 0; k < n_; ++k)
      for (int j = k + 1; j < n_; ++j)
        mc_ = boost::multiprecision::lcm(mc_, den(c_[k][j]));
    dd_ = 1;
    for (int k = 0; k < n_; ++k) dd_ = boost::multiprecision::lcm(dd_, den(d_[k]));
  }

  int dim() const { return n_; }

  // All integer x with (x + offset)^T gram (x + offset) == target satisfying
  // every constraint, sorted lexicographically. The target may be rational
  // (affine offsets shift attained norms off the integers).
  std::vector<IntVec> enumerate(const Rat& target, const RatVec& offset,
                                const std::vector<Constraint>& constraints = {}) const {
    require(target <= 0, "target must be <= 0 for a negative definite form");
    std::vector<IntVec> out;
    if (n_ == 0) {
      if (target == 0) out.push_back({});
      return out;
    }
    RatVec c(n_, Rat(0));
    if (!offset.empty()) {
      require(int(offset.size()) == n_, "offset dimension mismatch");
      c = offset;
    }

    // Common scale: every S_i = c_i + sum_j C_ij (x_j + c_j) has denominator
    // dividing m = mc * den(offsets).
    Int moff = 1;
    for (const Rat& r : c) moff = boost::multiprecision::lcm(moff, den(r));
    const Int m = mc_ * moff;
    const Rat budget = -target;
    const Int bq = den(budget);
    const Int q_scale = dd_ * m * m * bq;  // R is carried as R_num / q_scale
    const Int r_factor = bq;               // q_scale / (dd * m^2)

    // Integer tables.
    std::vector<Int> dn(n_);  // D_k = dn_k / dd
    for (int k = 0; k < n_; ++k) dn[k] = num(d_[k]) * (dd_ / den(d_[k]));
    std::vector<std::vector<Int>> cm(n_, std::vector<Int>(n_, Int(0)));
    for (int k = 0; k < n_; ++k)
      for (int j = k + 1; j < n_; ++j)
        cm[k][j] = num(c_[k][j]) * (m / den(c_[k][j]));
    std::vector<Int> scon(n_);  // m * (c_i + sum_j C_ij c_j)
    for (int i = 0; i < n_; ++i) {
      Rat s = c[i];
      for (int j = i + 1; j < n_; ++j) s += c_[i][j] * c[j];
      scon[i] = num(s) * (m / den(s));
    }

    // Constraint state in z-coordinates: l(x) + const = base + sum a_j z_j.
    struct CState {
      std::vector<Int> an;      // a_j scaled by ma
      Int ma = 1;
      Int base_num = 0;         // (const - a.c) scaled by ma * m
      std::vector<Int> wn, wd;  // W_i = (ma*m)^2 * sum_{j<i} a_j^2/D_j as wn/wd
    };
    std::vector<CState> cs;
    cs.reserve(constraints.size());
    for (const Constraint& ct : constraints) {
      require(int(ct.coeff.size()) == n_, "constraint dimension mismatch");
      RatVec a(n_);
      for (int i = 0; i < n_; ++i) {
        Rat y = Rat(ct.coeff[i]);
        for (int k = 0; k < i; ++k) y -= c_[k][i] * a[k];
        a[i] = y;
      }
      CState s;
      for (const Rat& r : a) s.ma = boost::multiprecision::lcm(s.ma, den(r));
      s.an.resize(n_);
      for (int i = 0; i < n_; ++i) s.an[i] = num(a[i]) * (s.ma / den(a[i]));
      Rat base = Rat(ct.constant);
      for (int i = 0; i < n_; ++i) base -= Rat(ct.coeff[i]) * c[i];
      base *= Rat(s.ma * m);
      require(is_integer(base), "constraint scaling error");
      s.base_num = num(base);
      s.wn.assign(n_ + 1, Int(0));
      s.wd.assign(n_ + 1, Int(1));
      Rat w = 0;
      Rat scale2 = Rat(s.ma * m) * Rat(s.ma * m);
      for (int i = 0; i <= n_; ++i) {
        Rat wi = w * scale2 / Rat(s.ma * s.ma);  // (m)^2 * sum a_j^2 / D_j ... exact
        // W_i must carry the (ma*m)^2 factor against a_j/ma entries:
        // sum (an_j/ma)^2 / D_j * (ma*m)^2 = m^2 * sum an_j^2 / D_j.
        s.wn[i] = num(wi);
        s.wd[i] = den(wi);
        if (i < n_) w += Rat(s.an[i]) * Rat(s.an[i]) / d_[i];
      }
      cs.push_back(std::move(s));
    }

    std::vector<Int> r_num(n_ + 1, Int(0));  // remaining budget entering level
    std::vector<Int> s_num(n_, Int(0));      // m * S_i on the current path
    std::vector<Int> zn(n_, Int(0));         // m * z_i
    std::vector<Int> x(n_), lo(n_), hi(n_);
    std::vector<std::vector<Int>> f(cs.size(), std::vector<Int>(n_ + 1, Int(0)));
    r_num[n_ - 1] = num(budget) * (q_scale / den(budget));

    auto prepare_level = [&](int i) -> bool {
      Int s = scon[i];
      for (int j = i + 1; j < n_; ++j) s += cm[i][j] * x[j];
      s_num[i] = s;
      // zn^2 <= r_num / (r_factor * dn_i), zn = x*m + s_num.
      Int denom = r_factor * dn[i];
      Int b = floor_div(r_num[i], denom);
      if (b < 0) return false;
      Int sq = isqrt_floor(b);
      lo[i] = ceil_div(-sq - s, m);
      hi[i] = floor_div(sq - s, m);
      return lo[i] <= hi[i];
    };

    int level = n_ - 1;
    bool descending = true;
    while (level < n_) {
      if (descending) {
        if (!prepare_level(level)) {
          ++level;
          descending = false;
          continue;
        }
        x[level] = lo[level];
      } else {
        if (x[level] >= hi[level]) {
          ++level;
          continue;
        }
        ++x[level];
        descending = true;
      }
      zn[level] = x[level] * m + s_num[level];
      Int rem = r_num[level] - r_factor * dn[level] * zn[level] * zn[level];
      if (rem < 0) {
        descending = false;
        continue;
      }
      bool pruned = false;
      for (size_t t = 0; t < cs.size(); ++t) {
        Int fv = f[t][level + 1] + cs[t].an[level] * zn[level];
        f[t][level] = fv;
        Int v = cs[t].base_num + fv;  // value * (ma * m)
        if (v < 0) {
          // Prune iff v^2 > R * w_level; W already carries the (ma m)^2
          // scale, so (v_num)^2 q_scale wd > rem wn.
          if (cs[t].wn[level] == 0 ||
              v * v * q_scale * cs[t].wd[level] > rem * cs[t].wn[level]) {
            pruned = true;
            break;
          }
        }
      }
      if (pruned) {
        descending = false;
        continue;
      }
      if (level == 0) {
        if (rem == 0) {
          bool ok = true;
          for (size_t t = 0; t < cs.size() && ok; ++t)
            ok = (cs[t].base_num + f[t][0] >= 0);
          if (ok) out.push_back(x);
        }
        descending = false;
        continue;
      }
      r_num[level - 1] = rem;
      --level;
      descending = true;
    }

    std::sort(out.begin(), out.end(),
              [](const IntVec& a, const IntVec& b) { return lex_compare(a, b) < 0; });
    return out;
  }

 private:
  int n_;
  IntMat gram_;
  std::vector<Rat> d_;
  std::vector<RatVec> c_;  // c_[k][j] = L_{jk}, j > k
  Int mc_ = 1, dd_ = 1;
};

inline std::vector<IntVec> short_vectors(const ShortVectorQuery& q) {
  Enumerator e(q.gram);
  return e.enumerate(Rat(q.target), q.offset);
}

}  // namespace vinlab
