#pragma once

#include "vinlab/vinberg.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>

namespace vinlab {

enum class EdgeKind { none, simple, double_, bold, broken };

inline std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::none: return "none";
    case EdgeKind::simple: return "simple";
    case EdgeKind::double_: return "double";
    case EdgeKind::bold: return "bold";
    case EdgeKind::broken: return "broken";
  }
  return "?";
}

// Intersection table for chamber pairs of (-2)/(-4) roots.
inline EdgeKind classify_edge(const Int& n1, const Int& n2, const Int& product) {
  require((n1 == -2 || n1 == -4) && (n2 == -2 || n2 == -4), "bad root norms");
  require(product >= 0, "negative product is not a chamber pair");
  if (product == 0) return EdgeKind::none;
  if (n1 == -2 && n2 == -2) {
    if (product == 1) return EdgeKind::simple;
    if (product == 2) return EdgeKind::bold;
    return EdgeKind::broken;
  }
  if (n1 == -4 && n2 == -4) {
    require(product % 2 == 0, "odd product between divisibility-2 roots");
    if (product == 2) return EdgeKind::simple;
    if (product == 4) return EdgeKind::bold;
    return EdgeKind::broken;
  }
  require(product % 2 == 0, "odd product violates divisibility 2");
  if (product == 2) return EdgeKind::double_;
  return EdgeKind::broken;
}

// Small dynamic bitset over diagram vertices.
struct VBits {
  int n = 0;
  std::vector<uint64_t> w;

  VBits() = default;
  explicit VBits(int n_) : n(n_), w((n_ + 63) / 64, 0) {}
  void resize(int n_) {
    n = n_;
    w.resize((n_ + 63) / 64, 0);
  }
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool intersects(const VBits& o) const {
    for (size_t k = 0; k < w.size(); ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
  void or_with(const VBits& o) {
    for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
  std::vector<int> members() const {
    std::vector<int> m;
    for (int i = 0; i < n; ++i)
      if (test(i)) m.push_back(i);
    return m;
  }
  auto operator<=>(const VBits& o) const { return w <=> o.w; }
  bool operator==(const VBits& o) const { return w == o.w; }
};

struct SubdiagramLabel {
  char family = 'A';
  int n = 0;
  bool affine = false;
  bool scaled = false;

  std::string str() const {
    std::string s = affine ? "~" : "";
    s += family;
    s += std::to_string(n);
    if (scaled) s += "(2)";
    return s;
  }
  // Pretty form with a combining tilde, e.g. C̃8(2).
  std::string pretty() const {
    std::string s(1, family);
    if (affine) s += "\xcc\x83";
    s += std::to_string(n);
    if (scaled) s += "(2)";
    return s;
  }
  auto key() const { return std::make_tuple(-n, family, scaled, affine); }
  bool operator==(const SubdiagramLabel&) const = default;
};

inline SubdiagramLabel parse_label(const std::string& s) {
  SubdiagramLabel l;
  size_t pos = 0;
  if (s[pos] == '~') {
    l.affine = true;
    ++pos;
  }
  l.family = s[pos++];
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  l.n = std::stoi(s.substr(start, pos - start));
  l.scaled = (s.substr(pos) == "(2)");
  return l;
}

inline std::string label_multiset_str(std::vector<SubdiagramLabel> labels) {
  std::sort(labels.begin(), labels.end(),
            [](const SubdiagramLabel& a, const SubdiagramLabel& b) {
              return a.key() < b.key();
            });
  std::string s;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += " ";
    s += labels[i].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// CoxeterDiagram: accepted roots with exact products and classified edges.
// ---------------------------------------------------------------------------

struct CoxeterDiagram {
  Lattice lattice;
  IntVec control;
  std::vector<Root> roots;
  std::vector<std::vector<Int>> product;   // exact pairwise Gram data
  std::vector<std::vector<EdgeKind>> kind;
  std::vector<VBits> adj;        // any nonzero product
  std::vector<VBits> finite_adj; // simple or double edge
  std::vector<VBits> bad_adj;    // bold or broken edge
  std::vector<VBits> broken_adj; // broken edge only

  int size() const { return int(roots.size()); }
  bool white(int i) const { return roots[i].norm == -2; }

  int span_rank() const {
    int r = lattice.rank();
    IntMat m(r, size());
    for (int j = 0; j < size(); ++j)
      for (int i = 0; i < r; ++i) m(i, j) = roots[j].v[i];
    return rank(m);
  }
};

// Extends the diagram with one accepted root, updating products and edges.
inline void append_root(CoxeterDiagram& d, const Root& root) {
  int n = d.size();
  IntVec g = mul(d.lattice.gram, root.v);
  d.roots.push_back(root);
  for (int i = 0; i < n; ++i) {
    d.product[i].push_back(dot(d.roots[i].v, g));
    d.kind[i].push_back(classify_edge(d.roots[i].norm, root.norm, d.product[i][n]));
  }
  d.product.emplace_back(n + 1, Int(0));
  d.kind.emplace_back(n + 1, EdgeKind::none);
  for (int i = 0; i < n; ++i) {
    d.product[n][i] = d.product[i][n];
    d.kind[n][i] = d.kind[i][n];
  }
  d.product[n][n] = root.norm;
  for (int i = 0; i < n; ++i) {
    d.adj[i].resize(n + 1);
    d.finite_adj[i].resize(n + 1);
    d.bad_adj[i].resize(n + 1);
    d.broken_adj[i].resize(n + 1);
  }
  d.adj.emplace_back(n + 1);
  d.finite_adj.emplace_back(n + 1);
  d.bad_adj.emplace_back(n + 1);
  d.broken_adj.emplace_back(n + 1);
  for (int i = 0; i < n; ++i) {
    EdgeKind k = d.kind[i][n];
    if (k == EdgeKind::none) continue;
    d.adj[i].set(n);
    d.adj[n].set(i);
    if (k == EdgeKind::simple || k == EdgeKind::double_) {
      d.finite_adj[i].set(n);
      d.finite_adj[n].set(i);
    } else {
      d.bad_adj[i].set(n);
      d.bad_adj[n].set(i);
      if (k == EdgeKind::broken) {
        d.broken_adj[i].set(n);
        d.broken_adj[n].set(i);
      }
    }
  }
}

inline CoxeterDiagram build_diagram(const VinbergRun& run) {
  require(!run.roots.empty(), "diagram needs at least one root");
  CoxeterDiagram d;
  d.lattice = run.lattice;
  d.control = run.control;
  d.roots = run.roots;
  int n = d.size();
  d.product.assign(n, std::vector<Int>(n, Int(0)));
  d.kind.assign(n, std::vector<EdgeKind>(n, EdgeKind::none));
  d.adj.assign(n, VBits(n));
  d.finite_adj.assign(n, VBits(n));
  d.bad_adj.assign(n, VBits(n));
  d.broken_adj.assign(n, VBits(n));
  std::vector<IntVec> gr(n);
  for (int i = 0; i < n; ++i) gr[i] = mul(d.lattice.gram, d.roots[i].v);
  for (int i = 0; i < n; ++i) {
    d.product[i][i] = d.roots[i].norm;
    for (int j = i + 1; j < n; ++j) {
      Int p = dot(d.roots[i].v, gr[j]);
      d.product[i][j] = d.product[j][i] = p;
      EdgeKind k = classify_edge(d.roots[i].norm, d.roots[j].norm, p);
      d.kind[i][j] = d.kind[j][i] = k;
      if (k == EdgeKind::none) continue;
      d.adj[i].set(j);
      d.adj[j].set(i);
      if (k == EdgeKind::simple || k == EdgeKind::double_) {
        d.finite_adj[i].set(j);
        d.finite_adj[j].set(i);
      } else {
        d.bad_adj[i].set(j);
        d.bad_adj[j].set(i);
        if (k == EdgeKind::broken) {
          d.broken_adj[i].set(j);
          d.broken_adj[j].set(i);
        }
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Connected component classification against the elliptic / affine catalog.
// All decisions are combinatorial over edge kinds and vertex colors; affine
// matches additionally produce the positive integer marks (exact kernel).
// ---------------------------------------------------------------------------

enum class CompClass { elliptic, affine, neither };

struct ComponentType {
  CompClass cls = CompClass::neither;
  SubdiagramLabel label;
  std::vector<Int> marks;  // affine only, aligned with the vertex list
};

namespace detail {

inline std::vector<Int> affine_marks(const CoxeterDiagram& d,
                                     const std::vector<int>& verts) {
  int m = int(verts.size());
  IntMat g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = d.product[verts[i]][verts[j]];
  IntMat k = kernel_basis(g);
  require(k.cols() == 1, "affine component must have corank 1");
  IntVec marks = primitive_part(k.col(0), true);
  for (const Int& x : marks) require(x > 0, "affine marks must be positive");
  return marks;
}

}  // namespace detail

// Classify the induced subdiagram on a CONNECTED vertex set.
inline ComponentType classify_component(const CoxeterDiagram& d,
                                        const std::vector<int>& verts) {
  ComponentType res;
  int m = int(verts.size());
  auto elliptic = [&](char fam, int n, bool scaled) {
    res.cls = CompClass::elliptic;
    res.label = SubdiagramLabel{fam, n, false, scaled};
    return res;
  };
  auto affine = [&](char fam, int n, bool scaled) {
    res.cls = CompClass::affine;
    res.label = SubdiagramLabel{fam, n, true, scaled};
    res.marks = detail::affine_marks(d, verts);
    return res;
  };

  if (m == 1) return elliptic('A', 1, !d.white(verts[0]));

  int bolds = 0, doubles = 0, edges = 0;
  std::vector<int> deg(m, 0);
  std::vector<std::vector<int>> nb(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      EdgeKind k = d.kind[verts[i]][verts[j]];
      if (k == EdgeKind::none) continue;
      if (k == EdgeKind::broken) return res;
      if (k == EdgeKind::bold) ++bolds;
      if (k == EdgeKind::double_) ++doubles;
      ++edges;
      ++deg[i];
      ++deg[j];
      nb[i].push_back(j);
      nb[j].push_back(i);
    }

  if (bolds) {
    if (m == 2 && bolds == 1 && d.white(verts[0]) == d.white(verts[1]))
      return affine('A', 1, !d.white(verts[0]));
    return res;
  }
  if (edges > m) return res;

  bool has_cycle = (edges == m);
  int maxdeg = *std::max_element(deg.begin(), deg.end());

  if (doubles == 0) {
    bool black = !d.white(verts[0]);
    if (has_cycle) {
      if (maxdeg != 2) return res;
      return affine('A', m - 1, black);
    }
    if (edges != m - 1) return res;  // disconnected; caller bug
    if (maxdeg <= 2) return elliptic('A', m, black);
    if (maxdeg >= 5) return res;
    std::vector<int> branch;
    for (int i = 0; i < m; ++i)
      if (deg[i] >= 3) branch.push_back(i);
    if (maxdeg == 4) {
      if (m == 5 && branch.size() == 1) return affine('D', 4, black);
      return res;
    }
    if (branch.size() == 1) {
      // Legs from the single trivalent node.
      int b = branch[0];
      std::vector<int> legs;
      for (int s : nb[b]) {
        int len = 1, prev = b, cur = s;
        while (deg[cur] == 2) {
          int nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
          prev = cur;
          cur = nxt;
          ++len;
        }
        legs.push_back(len);
      }
      std::sort(legs.begin(), legs.end(), std::greater<>());
      int a = legs[0], bb = legs[1], c = legs[2];
      if (bb == 1 && c == 1) return elliptic('D', m, black);
      if (c == 1 && bb == 2) {
        if (a == 2) return elliptic('E', 6, black);
        if (a == 3) return elliptic('E', 7, black);
        if (a == 4) return elliptic('E', 8, black);
        if (a == 5) return affine('E', 8, black);
      }
      if (a == 2 && bb == 2 && c == 2) return affine('E', 6, black);
      if (a == 3 && bb == 3 && c == 1) return affine('E', 7, black);
      return res;
    }
    if (branch.size() == 2) {
      // ~D_n: both trivalent nodes carry exactly two leaves.
      for (int b : branch) {
        int leaves = 0;
        for (int s : nb[b])
          if (deg[s] == 1) ++leaves;
        if (leaves != 2) return res;
      }
      return affine('D', m - 1, black);
    }
    return res;
  }

  // Shapes with double edges: paths and single-fork trees only.
  if (has_cycle || edges != m - 1 || maxdeg > 3) return res;
  std::vector<std::pair<int, int>> dpairs;
  for (int i = 0; i < m; ++i)
    for (int j : nb[i])
      if (j > i && d.kind[verts[i]][verts[j]] == EdgeKind::double_)
        dpairs.push_back({i, j});

  int nbranch = 0, branch = -1;
  for (int i = 0; i < m; ++i)
    if (deg[i] == 3) {
      ++nbranch;
      branch = i;
    }

  auto core_black = [&](int excluded) {
    for (int i = 0; i < m; ++i)
      if (i != excluded) return !d.white(verts[i]);
    return false;
  };

  if (doubles == 2) {
    if (nbranch) return res;
    auto [a1, b1] = dpairs[0];
    auto [a2, b2] = dpairs[1];
    int e1 = deg[a1] == 1 ? a1 : b1;
    int e2 = deg[a2] == 1 ? a2 : b2;
    if (deg[e1] != 1 || deg[e2] != 1 || e1 == e2) return res;
    // Middle vertices monochrome, ends the opposite color.
    bool mid_black = !d.white(verts[deg[a1] == 1 ? b1 : a1]);
    for (int i = 0; i < m; ++i) {
      bool is_end = (i == e1 || i == e2);
      if (!is_end && !d.white(verts[i]) != mid_black) return res;
      if (is_end && !d.white(verts[i]) == mid_black) return res;
    }
    return affine('C', m - 1, mid_black);
  }
  if (doubles != 1) return res;
  auto [p, q] = dpairs[0];

  if (nbranch == 1) {
    // ~B_n: fork of two leaves, the double edge terminating the long leg.
    int term = deg[p] == 1 ? p : (deg[q] == 1 ? q : -1);
    if (term < 0) return res;
    int leaves = 0;
    for (int s : nb[branch])
      if (deg[s] == 1 && s != term) ++leaves;
    if (leaves < 2) return res;
    bool cb = core_black(term);
    for (int i = 0; i < m; ++i)
      if (i != term && !d.white(verts[i]) != cb) return res;
    if (!d.white(verts[term]) == cb) return res;
    return affine('B', m - 1, cb);
  }
  if (nbranch) return res;

  // Path with one double edge.
  if (deg[p] == 1 || deg[q] == 1) {
    int term = deg[p] == 1 ? p : q;
    if (m == 2) return elliptic('C', 2, false);
    bool cb = core_black(term);
    for (int i = 0; i < m; ++i)
      if (i != term && !d.white(verts[i]) != cb) return res;
    return cb ? elliptic('B', m, true) : elliptic('C', m, false);
  }
  // Interior double edge: F4 / ~F4 shapes.
  auto side_size = [&](int from, int avoid) {
    // Count vertices reachable from `from` without crossing the double edge.
    std::vector<int> stack{from};
    std::vector<bool> seen(m, false);
    seen[avoid] = true;
    seen[from] = true;
    int cnt = 0;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      ++cnt;
      for (int s : nb[cur])
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
    }
    return cnt;
  };
  int sp = side_size(p, q), sq = side_size(q, p);
  if (m == 4 && sp == 2 && sq == 2) return elliptic('F', 4, false);
  if (m == 5 && (sp == 3 || sq == 3)) {
    int big = sp == 3 ? p : q;
    return affine('F', 4, !d.white(verts[big]));
  }
  return res;
}

// Split a vertex set into connected components under nonzero products.
inline std::vector<std::vector<int>> split_components(const CoxeterDiagram& d,
                                                      const std::vector<int>& verts) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(verts.size(), false);
  for (size_t s = 0; s < verts.size(); ++s) {
    if (used[s]) continue;
    std::vector<size_t> stack{s};
    used[s] = true;
    std::vector<int> comp;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(verts[cur]);
      for (size_t t = 0; t < verts.size(); ++t)
        if (!used[t] && d.kind[verts[cur]][verts[t]] != EdgeKind::none) {
          used[t] = true;
          stack.push_back(t);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Spec surface: per-component elliptic labels, or nothing if any component
// fails to be elliptic.
inline std::optional<std::vector<SubdiagramLabel>> elliptic_type(
    const CoxeterDiagram& d, const std::vector<int>& verts) {
  std::vector<SubdiagramLabel> out;
  for (const auto& comp : split_components(d, verts)) {
    ComponentType t = classify_component(d, comp);
    if (t.cls != CompClass::elliptic) return std::nullopt;
    out.push_back(t.label);
  }
  return out;
}

inline std::optional<std::vector<SubdiagramLabel>> parabolic_components(
    const CoxeterDiagram& d, const std::vector<int>& verts) {
  std::vector<SubdiagramLabel> out;
  for (const auto& comp : split_components(d, verts)) {
    ComponentType t = classify_component(d, comp);
    if (t.cls != CompClass::affine) return std::nullopt;
    out.push_back(t.label);
  }
  return out;
}

inline bool subset_is_elliptic(const CoxeterDiagram& d, const std::vector<int>& verts) {
  for (const auto& comp : split_components(d, verts)) {
    if (classify_component(d, comp).cls != CompClass::elliptic) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Affine components and maximal parabolic subdiagrams.
// ---------------------------------------------------------------------------

struct AffineComponent {
  VBits verts;
  std::vector<int> vert_list;
  SubdiagramLabel label;
  std::vector<Int> marks;
  VBits conflict;  // members plus everything adjacent to a member
};

inline std::vector<AffineComponent> enumerate_affine_components(
    const CoxeterDiagram& d, int max_rank) {
  int n = d.size();
  std::vector<AffineComponent> out;
  auto emit = [&](const std::vector<int>& verts, const ComponentType& t) {
    AffineComponent c;
    c.verts = VBits(n);
    for (int v : verts) c.verts.set(v);
    c.vert_list = verts;
    c.label = t.label;
    c.marks = t.marks;
    c.conflict = c.verts;
    for (int v : verts) c.conflict.or_with(d.adj[v]);
    out.push_back(std::move(c));
  };

  // Bold pairs are the only affine components not connected in finite_adj.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.kind[i][j] == EdgeKind::bold && d.roots[i].norm == d.roots[j].norm) {
        std::vector<int> verts{i, j};
        ComponentType t = classify_component(d, verts);
        if (t.cls == CompClass::affine) emit(verts, t);
      }

  // Connected grow over simple/double edges; stop at affine, prune at bad.
  std::vector<int> verts;
  std::vector<char> in_set(n, 0), blocked(n, 0);
  auto dfs = [&](auto&& self, int anchor) -> void {
    // Candidate extensions: finite-neighbors of the set, index > anchor,
    // not blocked at this branch depth.
    std::vector<int> cands;
    {
      std::set<int> cs;
      for (int v : verts)
        for (int u : d.finite_adj[v].members())
          if (u > anchor && !in_set[u] && !blocked[u]) cs.insert(u);
      cands.assign(cs.begin(), cs.end());
    }
    std::vector<int> locally_blocked;
    for (int u : cands) {
      if (blocked[u]) continue;
      verts.push_back(u);
      in_set[u] = 1;
      std::vector<int> sorted_verts = verts;
      std::sort(sorted_verts.begin(), sorted_verts.end());
      ComponentType t = classify_component(d, sorted_verts);
      if (t.cls == CompClass::affine) {
        emit(sorted_verts, t);
      } else if (t.cls == CompClass::elliptic && int(verts.size()) <= max_rank) {
        self(self, anchor);
      }
      in_set[u] = 0;
      verts.pop_back();
      blocked[u] = 1;
      locally_blocked.push_back(u);
    }
    for (int u : locally_blocked) blocked[u] = 0;
  };
  for (int start = 0; start < n; ++start) {
    verts = {start};
    in_set[start] = 1;
    dfs(dfs, start);
    in_set[start] = 0;
  }

  std::sort(out.begin(), out.end(),
            [](const AffineComponent& a, const AffineComponent& b) {
              return a.verts < b.verts;
            });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const AffineComponent& a, const AffineComponent& b) {
                          return a.verts == b.verts;
                        }),
            out.end());
  return out;
}

struct Parabolic {
  VBits verts;
  std::vector<int> comp_ids;  // indices into the component table
};

struct ParabolicCensus {
  std::vector<AffineComponent> components;
  std::vector<Parabolic> maximal;  // every component affine, rank == r-2
};

// All vertex sets whose components are affine with total rank r - 2.
inline ParabolicCensus enumerate_maximal_parabolics(const CoxeterDiagram& d) {
  ParabolicCensus census;
  int r = d.lattice.rank();
  int target = r - 2;
  census.components = enumerate_affine_components(d, target);
  auto& comps = census.components;

  // Rank-descending order lets the accumulated rank hit the target quickly.
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return comps[a].label.n > comps[b].label.n;
  });
  std::vector<int> suffix_max(order.size() + 1, 0);
  for (int i = int(order.size()) - 1; i >= 0; --i)
    suffix_max[i] = std::max(suffix_max[i + 1], comps[order[i]].label.n);

  std::vector<int> chosen;
  VBits used(d.size()), conflict(d.size());
  auto dfs = [&](auto&& self, size_t from, int rank_acc) -> void {
    if (rank_acc == target) {
      Parabolic p;
      p.verts = used;
      p.comp_ids = chosen;
      census.maximal.push_back(std::move(p));
      return;
    }
    for (size_t i = from; i < order.size(); ++i) {
      const AffineComponent& c = comps[order[i]];
      int nr = rank_acc + c.label.n;
      if (nr > target) continue;
      if (rank_acc + suffix_max[i] * int(order.size() - i) < target)
        break;  // not enough rank left in the suffix
      if (c.verts.intersects(conflict)) continue;
      VBits save_used = used, save_conf = conflict;
      used.or_with(c.verts);
      conflict.or_with(c.conflict);
      chosen.push_back(order[i]);
      self(self, i + 1, nr);
      chosen.pop_back();
      used = std::move(save_used);
      conflict = std::move(save_conf);
    }
  };
  dfs(dfs, 0, 0);
  std::sort(census.maximal.begin(), census.maximal.end(),
            [](const Parabolic& a, const Parabolic& b) { return a.verts < b.verts; });
  return census;
}

inline std::vector<SubdiagramLabel> parabolic_labels(const ParabolicCensus& census,
                                                     const Parabolic& p) {
  std::vector<SubdiagramLabel> ls;
  for (int id : p.comp_ids) ls.push_back(census.components[id].label);
  return ls;
}

// Primitive isotropic vector carried by a parabolic subdiagram, normalized
// against the control vector. All components must give proportional vectors.
inline IntVec parabolic_isotropic_vector(const CoxeterDiagram& d,
                                         const std::vector<int>& verts) {
  auto comps = split_components(d, verts);
  require(!comps.empty(), "empty parabolic");
  IntVec v;
  for (const auto& comp : comps) {
    ComponentType t = classify_component(d, comp);
    require(t.cls == CompClass::affine, "non-parabolic input");
    IntVec w(d.lattice.rank(), Int(0));
    for (size_t i = 0; i < comp.size(); ++i)
      w = add(w, scale(d.roots[comp[i]].v, t.marks[i]));
    require(d.lattice.norm(w) == 0, "component vector not isotropic");
    w = primitive_part(w, true);
    if (v.empty())
      v = w;
    else
      require(v == w || v == negate(w), "component isotropic vectors not proportional");
  }
  if (!d.control.empty()) {
    Int h = d.lattice.product(v, d.control);
    require(h != 0, "isotropic vector orthogonal to control");
    if (h < 0) v = negate(v);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Gamma_4: induced subdiagram on the (-4)-roots.
// ---------------------------------------------------------------------------

struct InducedSubdiagram {
  std::vector<int> verts;                       // diagram indices
  std::vector<std::pair<int, int>> edges;       // positions into verts
  std::vector<EdgeKind> edge_kinds;
};

inline InducedSubdiagram extract_gamma4(const CoxeterDiagram& d,
                                        bool drop_bold = false) {
  InducedSubdiagram s;
  for (int i = 0; i < d.size(); ++i)
    if (!d.white(i)) s.verts.push_back(i);
  for (size_t a = 0; a < s.verts.size(); ++a)
    for (size_t b = a + 1; b < s.verts.size(); ++b) {
      EdgeKind k = d.kind[s.verts[a]][s.verts[b]];
      if (k == EdgeKind::none) continue;
      if (drop_bold && k == EdgeKind::bold) continue;
      s.edges.push_back({int(a), int(b)});
      s.edge_kinds.push_back(k);
    }
  return s;
}

// ---------------------------------------------------------------------------
// Lanner subdiagrams: compact hyperbolic simplices, matched over angle data.
// ---------------------------------------------------------------------------

inline bool lanner_check(const CoxeterDiagram& d, const std::vector<int>& verts) {
  int m = int(verts.size());
  if (m < 3 || m > 5) return false;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      EdgeKind k = d.kind[verts[i]][verts[j]];
      if (k == EdgeKind::bold || k == EdgeKind::broken) return false;
    }
  if (split_components(d, verts).size() != 1) return false;
  {
    ComponentType t = classify_component(d, verts);
    if (t.cls != CompClass::neither) return false;
  }
  // Every facet must be elliptic (compactness of the simplex).
  for (int skip = 0; skip < m; ++skip) {
    std::vector<int> facet;
    for (int i = 0; i < m; ++i)
      if (i != skip) facet.push_back(verts[i]);
    if (!subset_is_elliptic(d, facet)) return false;
  }
  // Signature (1, m-1): exact inertia of the induced Gram.
  IntMat g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = d.product[verts[i]][verts[j]];
  Inertia in = inertia(g);
  return in.pos == 1 && in.zero == 0;
}

}  // namespace vinlab
