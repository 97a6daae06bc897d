#pragma once

#include "vinlab/diagram.hpp"

#include <functional>
#include <map>

namespace vinlab {

// Complete vertex- and edge-colored graph; color 0 on a pair means no edge.
struct ColoredGraph {
  int n = 0;
  std::vector<int> vcolor;
  std::vector<std::vector<int>> ecolor;

  static ColoredGraph from_diagram(const CoxeterDiagram& d) {
    ColoredGraph g;
    g.n = d.size();
    g.vcolor.resize(g.n);
    for (int i = 0; i < g.n; ++i)
      g.vcolor[i] = (d.roots[i].norm == -2 ? 0 : 2) + (d.roots[i].div - 1);
    g.ecolor.assign(g.n, std::vector<int>(g.n, 0));
    std::map<Int, int> codes;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j) {
        const Int& p = d.product[i][j];
        if (p == 0) continue;
        auto [it, fresh] = codes.insert({p, int(codes.size()) + 1});
        g.ecolor[i][j] = g.ecolor[j][i] = it->second;
      }
    return g;
  }
};

namespace detail {

// Iterated color refinement over the complete colored-pair relation; returns
// stable colors with deterministic class ids.
inline std::vector<int> refine_colors(const ColoredGraph& g, std::vector<int> colors) {
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sigs(g.n);
    for (int i = 0; i < g.n; ++i) {
      std::vector<int> s;
      s.push_back(colors[i]);
      std::vector<std::pair<int, int>> nb;
      for (int j = 0; j < g.n; ++j) {
        if (j == i || g.ecolor[i][j] == 0) continue;
        nb.push_back({g.ecolor[i][j], colors[j]});
      }
      std::sort(nb.begin(), nb.end());
      for (auto& [a, b] : nb) {
        s.push_back(a);
        s.push_back(b);
      }
      sigs[i] = {std::move(s), i};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [s, i] : sigs) ids.insert({s, 0});
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> fresh(g.n);
    for (const auto& [s, i] : sigs) fresh[i] = ids[s];
    if (fresh == colors) return colors;
    // Stable iff the partition stops splitting; compare class counts.
    std::set<int> a(colors.begin(), colors.end()), b(fresh.begin(), fresh.end());
    bool same = a.size() == b.size();
    colors = std::move(fresh);
    if (same) return colors;
  }
}

inline std::vector<std::vector<int>> search_maps(const ColoredGraph& g1,
                                                 const ColoredGraph& g2,
                                                 bool first_only) {
  std::vector<std::vector<int>> found;
  if (g1.n != g2.n) return found;
  int n = g1.n;
  std::vector<int> c1 = refine_colors(g1, g1.vcolor);
  std::vector<int> c2 = refine_colors(g2, g2.vcolor);
  {
    std::vector<int> h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return found;
  }
  // Most-constrained-first vertex order: smallest color class, then index.
  std::vector<int> class_size(n + 1, 0);
  for (int c : c1) ++class_size[c];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_size[c1[a]] != class_size[c1[b]])
      return class_size[c1[a]] < class_size[c1[b]];
    return a < b;
  });

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) {
      found.push_back(image);
      return first_only;
    }
    int u = order[depth];
    for (int v = 0; v < n; ++v) {
      if (used[v] || c2[v] != c1[u]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        int w = order[k];
        ok = g1.ecolor[u][w] == g2.ecolor[v][image[w]];
      }
      if (!ok) continue;
      image[u] = v;
      used[v] = 1;
      bool stop = self(self, depth + 1);
      used[v] = 0;
      image[u] = -1;
      if (stop) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace detail

inline std::string cycle_notation(const std::vector<int>& perm) {
  int n = int(perm.size());
  std::vector<char> seen(n, 0);
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    std::string cyc = "(" + std::to_string(i + 1);
    seen[i] = 1;
    for (int j = perm[i]; j != i; j = perm[j]) {
      seen[j] = 1;
      cyc += " " + std::to_string(j + 1);
    }
    s += cyc + ")";
  }
  return s.empty() ? "()" : s;
}

// Permutation group stored by its full element list (the diagram groups here
// are small), with a reduced generating set for export.
struct PermGroup {
  int degree = 0;
  std::vector<std::vector<int>> elements;
  std::vector<std::vector<int>> generators;

  Int order() const { return Int(elements.size()); }

  static PermGroup from_elements(int degree, std::vector<std::vector<int>> elems) {
    PermGroup g;
    g.degree = degree;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g.elements = std::move(elems);
    g.generators = g.reduce_generators();
    return g;
  }

  std::vector<std::vector<int>> reduce_generators() const {
    std::vector<std::vector<int>> gens;
    std::set<std::vector<int>> closure;
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    closure.insert(id);
    for (const auto& e : elements) {
      if (closure.count(e)) continue;
      gens.push_back(e);
      // Rebuild closure with the new generator.
      std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
      while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& a : frontier)
          for (const auto& gsel : gens) {
            std::vector<int> prod(degree);
            for (int i = 0; i < degree; ++i) prod[i] = gsel[a[i]];
            if (closure.insert(prod).second) next.push_back(std::move(prod));
          }
        frontier = std::move(next);
      }
      if (closure.size() == elements.size()) break;
    }
    return gens;
  }

  std::vector<std::vector<int>> vertex_orbits() const {
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : elements)
      for (int i = 0; i < degree; ++i) {
        int a = find(i), b = find(e[i]);
        if (a != b) parent[a] = b;
      }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < degree; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, mem] : groups) orbits.push_back(mem);
    return orbits;
  }

  std::vector<int> vertex_orbit_sizes() const {
    std::vector<int> sizes;
    for (const auto& o : vertex_orbits()) sizes.push_back(int(o.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }
};

// Full automorphism group of the diagram: vertex permutations preserving
// norms, divisibilities, and every exact pairwise product.
inline PermGroup diagram_automorphisms(const CoxeterDiagram& d) {
  ColoredGraph g = ColoredGraph::from_diagram(d);
  return PermGroup::from_elements(g.n, detail::search_maps(g, g, false));
}

// Automorphisms of the diagram fixing the listed vertices pointwise.
inline PermGroup diagram_automorphisms_fixing(const CoxeterDiagram& d,
                                              const std::vector<int>& pinned) {
  ColoredGraph g = ColoredGraph::from_diagram(d);
  int tag = 1000;
  for (int v : pinned) g.vcolor[v] = tag++;
  return PermGroup::from_elements(g.n, detail::search_maps(g, g, false));
}

inline VBits apply_perm(const std::vector<int>& perm, const VBits& s) {
  VBits t(s.n);
  for (int v : s.members()) t.set(perm[v]);
  return t;
}

// Orbit partition of the group action on vertex sets via generator closure;
// the list must be closed under the action. Returns one representative per
// orbit (the minimum of the orbit).
inline std::vector<VBits> orbit_representatives(const PermGroup& g,
                                                const std::vector<VBits>& objects) {
  std::set<VBits> universe(objects.begin(), objects.end());
  std::set<VBits> seen;
  std::vector<VBits> reps;
  for (const VBits& ob : objects) {
    if (seen.count(ob)) continue;
    VBits best = ob;
    std::vector<VBits> frontier{ob};
    seen.insert(ob);
    while (!frontier.empty()) {
      std::vector<VBits> next;
      for (const VBits& cur : frontier)
        for (const auto& gen : g.generators) {
          VBits im = apply_perm(gen, cur);
          require(universe.count(im), "object list not closed under the action");
          if (seen.insert(im).second) {
            if (im < best) best = im;
            next.push_back(std::move(im));
          }
        }
      frontier = std::move(next);
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

inline int orbit_count(const PermGroup& g, const std::vector<VBits>& objects) {
  return int(orbit_representatives(g, objects).size());
}

}  // namespace vinlab
