#pragma once

#include "vinlab/enumerate.hpp"
#include "vinlab/lattice.hpp"

#include <functional>
#include <map>

namespace vinlab {

struct Root {
  IntVec v;
  Int norm;    // -2 or -4
  int div;     // 1 or 2
  Int height;  // v . v0, >= 0

  Rat weight() const { return Rat(height * height, -norm); }
  bool operator==(const Root&) const = default;
};

inline Root make_root(const Lattice& l, const IntVec& v, const Int& height) {
  Root r;
  r.v = v;
  r.norm = l.norm(v);
  r.div = int(divisibility(l, v));
  r.height = height;
  require(r.norm == -2 || (r.norm == -4 && r.div == 2), "not a root");
  return r;
}

inline bool acceptance_check(const Lattice& l, const IntVec& candidate,
                             const std::vector<Root>& accepted) {
  for (const Root& b : accepted)
    if (l.product(candidate, b.v) < 0) return false;
  return true;
}

enum class RunStatus { complete, budget_exhausted };

struct Budget {
  long max_roots = 2000;
  long max_weight_levels = 500;
};

struct VinbergRun {
  Lattice lattice;
  IntVec control;
  std::vector<Root> roots;  // acceptance order; initial chamber first
  RunStatus status = RunStatus::budget_exhausted;
  long steps = 0;            // completed weight levels after the chamber
  long accepting_steps = 0;  // those that accepted at least one root
  size_t chamber_size = 0;
  std::vector<std::string> transcript;
};

// Shared per-(lattice, control) state: block-adapted basis of v0-perp and the
// enumerator over its definite Gram.
class RunContext {
 public:
  RunContext(const Lattice& l, const IntVec& v0) : l_(l), v0_(v0) {
    require(l.norm(v0) > 0, "control vector must have positive norm");
    int r = l.rank();
    tvec_ = mul(l.gram, v0);
    d_ = gcd_vec(tvec_);

    // Kernel of x -> x.v0 keeping coordinates outside supp(G v0) intact, so
    // the enumeration basis stays aligned with the direct-sum blocks.
    std::vector<int> supp, rest;
    for (int i = 0; i < r; ++i)
      (tvec_[i] != 0 ? supp : rest).push_back(i);
    require(!supp.empty(), "degenerate control vector");
    IntMat trow(1, int(supp.size()));
    for (size_t j = 0; j < supp.size(); ++j) trow(0, int(j)) = tvec_[supp[j]];
    IntMat tker = kernel_basis(trow);
    kernel_ = IntMat(r, r - 1);
    int col = 0;
    for (int j = 0; j < tker.cols(); ++j, ++col)
      for (size_t i = 0; i < supp.size(); ++i) kernel_(supp[i], col) = tker(int(i), j);
    for (int i : rest) kernel_(i, col++)  = 1;

    // Particular solution p1 with p1 . v0 = d.
    {
      IntMat row(1, r);
      for (int j = 0; j < r; ++j) row(0, j) = tvec_[j];
      SmithResult s = smith_normal_form(row);
      require(s.d(0, 0) == d_, "unexpected SNF of product row");
      p1_ = s.v.col(0);
      require(dot(p1_, tvec_) == d_, "bad particular solution");
    }

    gram_perp_ = IntMat(r - 1, r - 1);
    for (int i = 0; i < r - 1; ++i)
      for (int j = 0; j < r - 1; ++j)
        gram_perp_(i, j) = inner(l.gram, kernel_.col(i), kernel_.col(j));
    enumerator_.emplace(gram_perp_);
  }

  const Lattice& lattice() const { return l_; }
  const IntVec& control() const { return v0_; }
  const Int& control_divisibility() const { return d_; }
  const IntMat& perp_basis() const { return kernel_; }
  const IntMat& perp_gram() const { return gram_perp_; }

  IntVec to_ambient(const IntVec& x, const IntVec& p) const {
    IntVec a = p;
    for (int i = 0; i < kernel_.rows(); ++i)
      for (int j = 0; j < kernel_.cols(); ++j) a[i] += kernel_(i, j) * x[j];
    return a;
  }

  // All roots with given norm and height h, optionally pre-filtered by the
  // linear conditions alpha . beta >= 0 for beta in `against`.
  std::vector<IntVec> roots_at_height(const Int& norm, const Int& h,
                                      const std::vector<Root>& against = {}) const {
    std::vector<IntVec> out;
    if (h % d_ != 0) return out;
    int r = l_.rank();
    IntVec p = scale(p1_, h / d_);

    // (p + K x)^2 = norm  ->  (x + s)^T A (x + s) = norm - p^2 + s^T A s.
    IntVec b(r - 1);
    IntVec gp = mul(l_.gram, p);
    for (int j = 0; j < r - 1; ++j) b[j] = dot(kernel_.col(j), gp);
    RatVec brat(r - 1);
    for (int j = 0; j < r - 1; ++j) brat[j] = Rat(b[j]);
    RatVec s = solve_rational(gram_perp_, brat);
    Rat target = Rat(norm - inner(l_.gram, p, p));
    for (int j = 0; j < r - 1; ++j) target += s[j] * brat[j];
    if (target > 0) return out;

    std::vector<Constraint> cons;
    cons.reserve(against.size());
    for (const Root& beta : against) {
      Constraint c;
      IntVec gb = mul(l_.gram, beta.v);
      c.coeff.resize(r - 1);
      for (int j = 0; j < r - 1; ++j) c.coeff[j] = dot(kernel_.col(j), gb);
      c.constant = dot(p, gb);
      cons.push_back(std::move(c));
    }

    for (const IntVec& x : enumerator_->enumerate(target, s, cons)) {
      IntVec alpha = to_ambient(x, p);
      Int n = l_.norm(alpha);
      if (n != norm) continue;
      if (norm == -4 && gcd_vec(mul(l_.gram, alpha)) != 2) continue;
      out.push_back(std::move(alpha));
    }
    std::sort(out.begin(), out.end(),
              [](const IntVec& a, const IntVec& b2) { return lex_compare(a, b2) < 0; });
    return out;
  }

 private:
  Lattice l_;
  IntVec v0_;
  IntVec tvec_, p1_;
  Int d_ = 0;
  IntMat kernel_, gram_perp_;
  mutable std::optional<Enumerator> enumerator_;
};

// Public single-shot variant of the candidate generator.
inline std::vector<IntVec> roots_at_height(const Lattice& l, const IntVec& v0,
                                           const Int& norm, const Int& h) {
  require(h >= 0, "height must be nonnegative");
  require(norm == -2 || norm == -4, "root norm must be -2 or -4");
  return RunContext(l, v0).roots_at_height(norm, h);
}

namespace detail {

// Sign of alpha against the deterministic generic functional: the first
// nonzero product with the perturbation directions e_k projected to v0-perp,
// i.e. the lex sign of G alpha restricted to v0-perp data. For alpha in
// v0-perp the products are just the coordinates of G alpha.
inline int generic_sign(const Lattice& l, const IntVec& alpha) {
  IntVec g = mul(l.gram, alpha);
  for (const Int& x : g) {
    if (x > 0) return 1;
    if (x < 0) return -1;
  }
  return 0;
}

}  // namespace detail

// Simple system of the finite root system { alpha : alpha . v0 = 0 }.
inline std::vector<Root> initial_chamber(const Lattice& l, const IntVec& v0) {
  require(l.norm(v0) > 0, "control vector must have positive norm");
  RunContext ctx(l, v0);
  std::vector<IntVec> all;
  for (Int norm : {Int(-2), Int(-4)})
    for (IntVec& a : ctx.roots_at_height(norm, 0)) all.push_back(std::move(a));

  std::vector<IntVec> positive;
  for (const IntVec& a : all) {
    int s = detail::generic_sign(l, a);
    require(s != 0, "generic functional vanished on a root");
    if (s > 0) positive.push_back(a);
  }
  std::map<IntVec, bool> pos_set;
  for (const IntVec& a : positive) pos_set[a] = true;

  std::vector<Root> simple;
  for (const IntVec& a : positive) {
    bool decomposable = false;
    for (const IntVec& b : positive) {
      if (b == a) continue;
      if (pos_set.count(sub(a, b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(make_root(l, a, 0));
  }
  std::sort(simple.begin(), simple.end(),
            [](const Root& a, const Root& b) { return lex_compare(a.v, b.v) < 0; });
  for (size_t i = 0; i < simple.size(); ++i)
    for (size_t j = i + 1; j < simple.size(); ++j)
      require(l.product(simple[i].v, simple[j].v) >= 0,
              "initial chamber is not a chamber");
  return simple;
}

// Completeness probe invoked at weight-level boundaries; receives the
// accepted roots, returns true when they bound a finite-volume polyhedron.
using CompletenessCheck = std::function<bool(const Lattice&, const std::vector<Root>&)>;

inline VinbergRun run_vinberg(const Lattice& l, const IntVec& v0,
                              const Budget& budget = {},
                              const CompletenessCheck& is_complete = nullptr,
                              bool record_transcript = false) {
  require(l.is_hyperbolic(), "lattice must be hyperbolic");
  require(l.is_even(), "lattice must be even");
  {
    auto inv = two_elementary_invariants(l);
    require(inv.is_two_elementary, "lattice must be 2-elementary");
  }
  RunContext ctx(l, v0);
  VinbergRun run;
  run.lattice = l;
  run.control = v0;
  run.roots = initial_chamber(l, v0);
  run.chamber_size = run.roots.size();
  if (record_transcript)
    run.transcript.push_back("chamber: " + std::to_string(run.roots.size()) +
                             " roots at height 0");

  int r = l.rank();
  auto span_rank = [&]() {
    IntMat m(r, int(run.roots.size()));
    for (int j = 0; j < int(run.roots.size()); ++j)
      for (int i = 0; i < r; ++i) m(i, j) = run.roots[j].v[i];
    return rank(m);
  };
  bool spanning = span_rank() == r;

  Int step2 = ctx.control_divisibility();              // heights for norm -2
  Int step4 = boost::multiprecision::lcm(step2, Int(2));  // heights for norm -4
  Int h2 = step2, h4 = step4;

  while (true) {
    if (long(run.roots.size()) >= budget.max_roots ||
        run.steps >= budget.max_weight_levels) {
      run.status = RunStatus::budget_exhausted;
      break;
    }
    // Next weight level: h2^2/2 vs h4^2/4, never equal.
    Int norm;
    Int h;
    if (h2 * h2 * 2 < h4 * h4) {
      norm = -2;
      h = h2;
      h2 += step2;
    } else {
      norm = -4;
      h = h4;
      h4 += step4;
    }
    std::vector<IntVec> candidates = ctx.roots_at_height(norm, h, run.roots);
    size_t before = run.roots.size();
    for (const IntVec& cvec : candidates) {
      bool ok = true;  // enumeration pre-filtered against roots[0..before)
      for (size_t j = before; j < run.roots.size() && ok; ++j)
        ok = l.product(cvec, run.roots[j].v) >= 0;
      if (record_transcript)
        run.transcript.push_back("level " + std::to_string(run.steps + 1) + " norm " +
                                 norm.str() + " height " + h.str() + ": " +
                                 vec_to_string(cvec) + (ok ? " accept" : " reject"));
      if (ok) run.roots.push_back(make_root(l, cvec, h));
    }
    ++run.steps;
    if (run.roots.size() > before) ++run.accepting_steps;
    if (!spanning && run.roots.size() != before) spanning = span_rank() == r;
    if (spanning && run.roots.size() > before && is_complete &&
        is_complete(l, run.roots)) {
      run.status = RunStatus::complete;
      break;
    }
  }
  return run;
}

}  // namespace vinlab
