#pragma once

#include "vinlab/diagram.hpp"

namespace vinlab {

// ---------------------------------------------------------------------------
// Edge criterion: every elliptic subdiagram of rank r-2 extends in exactly
// two ways, to an elliptic subdiagram of rank r-1 or to a parabolic
// subdiagram of rank r-2 containing it (an edge of the polyhedron has two
// ends, finite or ideal).
// ---------------------------------------------------------------------------

namespace detail {

// Incremental component bookkeeping for subset DFS: vertices are pushed and
// popped, and only the merged component is reclassified.
class ComponentTracker {
 public:
  explicit ComponentTracker(const CoxeterDiagram& d) : d_(&d) {}

  // Adds v, merging every component it touches. Returns the class of the
  // merged component.
  CompClass push(int v) {
    Undo u;
    std::vector<int> merged{v};
    for (size_t idx = 0; idx < alive_.size();) {
      Comp& c = comps_[alive_[idx]];
      if (d_->adj[v].intersects(c.bits)) {
        merged.insert(merged.end(), c.verts.begin(), c.verts.end());
        u.removed.push_back(alive_[idx]);
        rank_ -= c.rank();
        if (c.cls == CompClass::affine) --affine_;
        if (c.cls == CompClass::neither) --neither_;
        alive_[idx] = alive_.back();
        alive_.pop_back();
      } else {
        ++idx;
      }
    }
    std::sort(merged.begin(), merged.end());
    Comp fresh;
    fresh.verts = merged;
    fresh.bits = VBits(d_->size());
    for (int w : merged) fresh.bits.set(w);
    ComponentType t = classify_component(*d_, merged);
    fresh.cls = t.cls;
    u.added = int(comps_.size());
    comps_.push_back(std::move(fresh));
    alive_.push_back(u.added);
    rank_ += comps_[u.added].rank();
    if (comps_[u.added].cls == CompClass::affine) ++affine_;
    if (comps_[u.added].cls == CompClass::neither) ++neither_;
    undo_.push_back(std::move(u));
    return comps_[u.added].cls;
  }

  void pop() {
    Undo& u = undo_.back();
    const Comp& added = comps_[u.added];
    rank_ -= added.rank();
    if (added.cls == CompClass::affine) --affine_;
    if (added.cls == CompClass::neither) --neither_;
    auto it = std::find(alive_.begin(), alive_.end(), u.added);
    *it = alive_.back();
    alive_.pop_back();
    comps_.pop_back();
    for (int idx : u.removed) {
      alive_.push_back(idx);
      rank_ += comps_[idx].rank();
      if (comps_[idx].cls == CompClass::affine) ++affine_;
      if (comps_[idx].cls == CompClass::neither) ++neither_;
    }
    undo_.pop_back();
  }

  int rank() const { return rank_; }
  int affine_components() const { return affine_; }
  int live_components() const { return int(alive_.size()); }
  bool all_elliptic() const { return affine_ == 0 && neither_ == 0; }
  bool all_affine() const { return neither_ == 0 && affine_ == live_components(); }
  bool any_neither() const { return neither_ > 0; }

 private:
  struct Comp {
    std::vector<int> verts;
    VBits bits;
    CompClass cls = CompClass::neither;
    int rank() const {
      return int(verts.size()) - (cls == CompClass::affine ? 1 : 0);
    }
  };
  struct Undo {
    std::vector<int> removed;
    int added = -1;
  };
  const CoxeterDiagram* d_;
  std::vector<Comp> comps_;
  std::vector<int> alive_;
  std::vector<Undo> undo_;
  int rank_ = 0, affine_ = 0, neither_ = 0;
};

// Count parabolic subdiagrams of rank |base| containing the elliptic set
// `base`, stopping once the count exceeds `cap`. Added vertices must keep
// every component elliptic-or-affine without raising the rank.
inline int count_parabolic_completions(const CoxeterDiagram& d,
                                       const std::vector<int>& base, int cap) {
  int n = d.size();
  int target = int(base.size());
  ComponentTracker tracker(d);
  // Bold edges stay admissible here: a bold pair is the affine ~A1.
  VBits broken(n), in_set(n);
  for (int v : base) {
    tracker.push(v);
    broken.or_with(d.broken_adj[v]);
    in_set.set(v);
  }
  require(tracker.all_elliptic(), "completion base must be elliptic");
  int found = 0;
  auto dfs = [&](auto&& self, int from) -> bool {  // true = cap exceeded
    if (tracker.all_affine() && tracker.rank() == target) {
      return ++found > cap;  // affine components cannot grow further
    }
    for (int v = from; v < n; ++v) {
      if (in_set.test(v) || broken.test(v)) continue;
      CompClass cls = tracker.push(v);
      if (cls == CompClass::neither || tracker.rank() > target) {
        tracker.pop();
        continue;
      }
      VBits broken_save = broken;
      broken.or_with(d.broken_adj[v]);
      in_set.set(v);
      bool stop = self(self, v + 1);
      in_set.reset(v);
      broken = std::move(broken_save);
      tracker.pop();
      if (stop) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

inline int count_extension_ways(const CoxeterDiagram& d, const std::vector<int>& s,
                                int cap, const ParabolicCensus* census) {
  int n = d.size();
  ComponentTracker tracker(d);
  VBits bad(n), in_set(n);
  for (int v : s) {
    tracker.push(v);
    bad.or_with(d.bad_adj[v]);
    in_set.set(v);
  }
  int ways = 0;
  for (int v = 0; v < n && ways <= cap; ++v) {
    if (in_set.test(v) || bad.test(v)) continue;
    CompClass cls = tracker.push(v);
    if (cls == CompClass::elliptic) ++ways;
    tracker.pop();
  }
  if (ways > cap) return ways;
  if (census) {
    VBits sb(n);
    for (int v : s) sb.set(v);
    for (const Parabolic& p : census->maximal) {
      bool contains = true;
      for (size_t k = 0; k < sb.w.size() && contains; ++k)
        contains = (sb.w[k] & ~p.verts.w[k]) == 0;
      if (contains && ++ways > cap) break;
    }
  } else {
    ways += count_parabolic_completions(d, s, cap - ways + 1);
  }
  return ways;
}

}  // namespace detail

struct EdgeCriterionResult {
  bool value = false;
  bool spanning = false;
  std::vector<int> witness;  // failing rank-(r-2) elliptic subdiagram
  int witness_ways = -1;
};

inline EdgeCriterionResult edge_criterion_detailed(
    const CoxeterDiagram& d, const ParabolicCensus* census = nullptr) {
  EdgeCriterionResult res;
  int r = d.lattice.rank();
  res.spanning = d.span_rank() == r;
  if (!res.spanning) return res;
  int target = r - 2;
  int n = d.size();

  // DFS over elliptic subsets, newest roots first (descending indices):
  // incomplete chambers have their unfinished edges near the most recently
  // accepted roots, so violations surface immediately.
  std::vector<int> verts;
  detail::ComponentTracker tracker(d);
  VBits bad(n), in_set(n);

  auto check_full = [&]() -> bool {  // true = violation found
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    int ways = detail::count_extension_ways(d, sorted, 2, census);
    if (ways != 2) {
      res.witness = sorted;
      res.witness_ways = ways;
      return true;
    }
    return false;
  };

  auto pool_size = [&](int limit) {
    int cnt = 0;
    for (int v = 0; v < limit; ++v)
      if (!bad.test(v) && !in_set.test(v)) ++cnt;
    return cnt;
  };

  auto dfs = [&](auto&& self, int limit) -> bool {
    if (int(verts.size()) == target) return check_full();
    if (int(verts.size()) + pool_size(limit) < target) return false;
    for (int v = limit - 1; v >= 0; --v) {
      if (bad.test(v) || in_set.test(v)) continue;
      CompClass cls = tracker.push(v);
      if (!tracker.all_elliptic() || cls != CompClass::elliptic) {
        tracker.pop();
        continue;
      }
      verts.push_back(v);
      in_set.set(v);
      VBits bad_save = bad;
      bad.or_with(d.bad_adj[v]);
      bool stop = self(self, v);
      bad = std::move(bad_save);
      in_set.reset(v);
      verts.pop_back();
      tracker.pop();
      if (stop) return true;
    }
    return false;
  };
  bool failed = target == 0 ? check_full() : dfs(dfs, n);
  res.value = !failed;
  return res;
}

inline bool edge_criterion(const CoxeterDiagram& d,
                           const ParabolicCensus* census = nullptr) {
  return edge_criterion_detailed(d, census).value;
}

// ---------------------------------------------------------------------------
// Sufficient condition: no Lanner subdiagrams, and every connected parabolic
// subdiagram lies in a maximal parabolic of rank r-2. Only applicable to
// diagrams without broken edges.
// ---------------------------------------------------------------------------

struct SufficientConditionResult {
  bool value = false;
  bool applicable = false;
  std::vector<int> lanner_witness;
  std::vector<int> orphan_component;  // affine component in no maximal parabolic
};

inline std::optional<std::vector<int>> find_lanner_subdiagram(const CoxeterDiagram& d) {
  int n = d.size();
  // Lanner diagrams are connected with 3..5 vertices and finite edges only;
  // grow connected subsets over simple/double edges.
  std::vector<int> verts;
  std::vector<char> in_set(n, 0), blocked(n, 0);
  std::optional<std::vector<int>> hit;
  auto dfs = [&](auto&& self, int anchor) -> bool {
    if (verts.size() >= 3) {
      std::vector<int> sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (lanner_check(d, sorted)) {
        hit = sorted;
        return true;
      }
    }
    if (verts.size() == 5) return false;
    std::set<int> cs;
    for (int v : verts)
      for (int u : d.finite_adj[v].members())
        if (u > anchor && !in_set[u] && !blocked[u]) cs.insert(u);
    std::vector<int> locally_blocked;
    bool stop = false;
    for (int u : cs) {
      verts.push_back(u);
      in_set[u] = 1;
      stop = self(self, anchor);
      in_set[u] = 0;
      verts.pop_back();
      if (stop) break;
      blocked[u] = 1;
      locally_blocked.push_back(u);
    }
    for (int u : locally_blocked) blocked[u] = 0;
    return stop;
  };
  for (int start = 0; start < n && !hit; ++start) {
    verts = {start};
    in_set[start] = 1;
    dfs(dfs, start);
    in_set[start] = 0;
  }
  return hit;
}

inline SufficientConditionResult sufficient_condition_detailed(
    const CoxeterDiagram& d, const ParabolicCensus* census = nullptr) {
  SufficientConditionResult res;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (d.kind[i][j] == EdgeKind::broken) return res;  // not applicable
  res.applicable = true;

  if (auto lan = find_lanner_subdiagram(d)) {
    res.lanner_witness = *lan;
    return res;
  }

  ParabolicCensus local;
  if (!census) {
    local = enumerate_maximal_parabolics(d);
    census = &local;
  }
  std::vector<char> used(census->components.size(), 0);
  for (const Parabolic& p : census->maximal)
    for (int id : p.comp_ids) used[id] = 1;
  for (size_t i = 0; i < census->components.size(); ++i)
    if (!used[i]) {
      res.orphan_component = census->components[i].vert_list;
      return res;
    }
  res.value = true;
  return res;
}

inline bool sufficient_condition(const CoxeterDiagram& d) {
  return sufficient_condition_detailed(d).value;
}

// ---------------------------------------------------------------------------
// Cone check: extreme rays of { x : x . alpha_i >= 0 } via the double
// description method in exact rational arithmetic. Finite volume iff every
// extreme ray rho has rho^2 >= 0 and rho . v0 >= 0.
// ---------------------------------------------------------------------------

struct ConeCheckResult {
  bool value = false;
  bool ran = false;
  std::vector<IntVec> rays;
  std::vector<IntVec> bad_rays;
};

namespace detail {

// Extreme rays of { x : rows . x >= 0 }, where `rows` has full column rank
// and the cone is pointed. Standard incremental double description with the
// combinatorial adjacency test.
inline std::vector<IntVec> extreme_rays(const std::vector<IntVec>& rows, int dim) {
  // Find dim linearly independent starting rows.
  std::vector<int> base;
  {
    IntMat m(dim, 0);
    for (size_t i = 0; i < rows.size() && int(base.size()) < dim; ++i) {
      IntMat trial(dim, int(base.size()) + 1);
      for (size_t j = 0; j < base.size(); ++j)
        for (int k = 0; k < dim; ++k) trial(k, int(j)) = rows[base[j]][k];
      for (int k = 0; k < dim; ++k) trial(k, int(base.size())) = rows[i][k];
      if (rank(trial) == int(base.size()) + 1) base.push_back(int(i));
    }
    require(int(base.size()) == dim, "cone constraints do not span");
  }

  // Initial simplicial cone: rays = columns of the inverse of the base rows.
  IntMat b(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) b(i, k) = rows[base[i]][k];
  std::vector<IntVec> rays;
  for (int j = 0; j < dim; ++j) {
    RatVec e(dim, Rat(0));
    // Solve b^T ... we need ray r_j with rows[base[i]] . r_j = delta_ij.
    RatVec rhs(dim, Rat(0));
    rhs[j] = 1;
    RatVec x = solve_rational(b, rhs);
    Int lcm = 1;
    for (const Rat& q : x) lcm = boost::multiprecision::lcm(lcm, den(q));
    IntVec r(dim);
    for (int k = 0; k < dim; ++k) r[k] = num(x[k]) * (lcm / den(x[k]));
    rays.push_back(primitive_part(r));
  }

  std::vector<std::vector<int>> active(rays.size());  // indices of tight rows
  auto recompute_active = [&](const IntVec& ray, const std::vector<int>& processed) {
    std::vector<int> act;
    for (int idx : processed)
      if (dot(rows[idx], ray) == 0) act.push_back(idx);
    return act;
  };

  std::vector<int> processed = base;
  for (size_t i = 0; i < rays.size(); ++i)
    active[i] = recompute_active(rays[i], processed);

  for (size_t c = 0; c < rows.size(); ++c) {
    if (std::find(base.begin(), base.end(), int(c)) != base.end()) continue;
    std::vector<Int> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) val[i] = dot(rows[c], rays[i]);
    bool any_neg = std::any_of(val.begin(), val.end(),
                               [](const Int& x) { return x < 0; });
    processed.push_back(int(c));
    if (!any_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) active[i].push_back(int(c));
      continue;
    }
    std::vector<IntVec> next;
    std::vector<std::vector<int>> next_active;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      next.push_back(rays[i]);
      auto a = active[i];
      if (val[i] == 0) a.push_back(int(c));
      next_active.push_back(a);
    }
    // Combine adjacent (+,-) pairs.
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        // Common active set.
        std::vector<int> common;
        std::set_intersection(active[i].begin(), active[i].end(),
                              active[j].begin(), active[j].end(),
                              std::back_inserter(common));
        if (int(common.size()) < dim - 2) continue;
        // Combinatorial adjacency: no third ray's active set contains it.
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == i || k == j) continue;
          adjacent = !std::includes(active[k].begin(), active[k].end(),
                                    common.begin(), common.end());
        }
        if (!adjacent) continue;
        IntVec nr = sub(scale(rays[j], val[i]), scale(rays[i], val[j]));
        nr = primitive_part(nr);
        auto a = recompute_active(nr, processed);
        next.push_back(std::move(nr));
        next_active.push_back(std::move(a));
      }
    }
    rays = std::move(next);
    active = std::move(next_active);
    for (auto& a : active) std::sort(a.begin(), a.end());
  }
  std::sort(rays.begin(), rays.end(),
            [](const IntVec& a, const IntVec& b) { return lex_compare(a, b) < 0; });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace detail

inline ConeCheckResult cone_check(const Lattice& l, const std::vector<IntVec>& roots,
                                  const IntVec& v0) {
  ConeCheckResult res;
  res.ran = true;
  int r = l.rank();
  std::vector<IntVec> rows;
  rows.reserve(roots.size());
  for (const IntVec& a : roots) rows.push_back(mul(l.gram, a));
  {
    IntMat m(r, int(rows.size()));
    for (size_t j = 0; j < rows.size(); ++j)
      for (int i = 0; i < r; ++i) m(i, int(j)) = rows[j][i];
    if (rank(m) < r) {
      // The cone contains a full line; it cannot sit inside the closed
      // positive cone. Witness: a kernel vector (or its negative).
      IntMat mt(int(rows.size()), r);
      for (size_t j = 0; j < rows.size(); ++j)
        for (int i = 0; i < r; ++i) mt(int(j), i) = rows[j][i];
      IntMat k = kernel_basis(mt);
      IntVec ell = k.col(0);
      if (l.norm(ell) < 0)
        res.bad_rays.push_back(ell);
      else if (l.product(ell, v0) < 0)
        res.bad_rays.push_back(ell);
      else
        res.bad_rays.push_back(negate(ell));
      res.value = false;
      return res;
    }
  }
  res.rays = detail::extreme_rays(rows, r);
  res.value = true;
  for (const IntVec& ray : res.rays) {
    if (l.norm(ray) < 0 || l.product(ray, v0) < 0) {
      res.bad_rays.push_back(ray);
      res.value = false;
    }
  }
  return res;
}

inline ConeCheckResult cone_check(const CoxeterDiagram& d) {
  std::vector<IntVec> roots;
  for (const Root& r : d.roots) roots.push_back(r.v);
  return cone_check(d.lattice, roots, d.control);
}

// ---------------------------------------------------------------------------
// Combined report. The verdict is the edge criterion; the other two methods
// are cross-checks.
// ---------------------------------------------------------------------------

struct FinitenessOptions {
  bool run_sufficient = true;
  bool run_cone = false;
  size_t cone_max_roots = 60;
};

struct FinitenessReport {
  bool verdict = false;
  EdgeCriterionResult edge;
  SufficientConditionResult sufficient;
  ConeCheckResult cone;
};

inline FinitenessReport run_finiteness(const CoxeterDiagram& d,
                                       const FinitenessOptions& opt = {},
                                       const ParabolicCensus* census = nullptr) {
  FinitenessReport rep;
  rep.edge = edge_criterion_detailed(d, census);
  rep.verdict = rep.edge.value;
  if (opt.run_sufficient) rep.sufficient = sufficient_condition_detailed(d, census);
  if (opt.run_cone && d.roots.size() <= opt.cone_max_roots) rep.cone = cone_check(d);
  if (rep.cone.ran && rep.edge.spanning)
    require(rep.cone.value == rep.edge.value,
            "cone check disagrees with the edge criterion");
  return rep;
}

// Vinberg run wired to the edge criterion as the termination test. The
// diagram grows incrementally across checks instead of being rebuilt.
inline VinbergRun run_vinberg_complete(const Lattice& l, const IntVec& v0,
                                       const Budget& budget = {},
                                       bool record_transcript = false) {
  auto cache = std::make_shared<CoxeterDiagram>();
  CompletenessCheck check = [cache](const Lattice& lat,
                                    const std::vector<Root>& roots) {
    if (cache->roots.empty()) {
      VinbergRun tmp;
      tmp.lattice = lat;
      tmp.roots = {roots.front()};
      *cache = build_diagram(tmp);
    }
    for (size_t i = cache->roots.size(); i < roots.size(); ++i)
      append_root(*cache, roots[i]);
    return edge_criterion(*cache);
  };
  return run_vinberg(l, v0, budget, check, record_transcript);
}

}  // namespace vinlab
