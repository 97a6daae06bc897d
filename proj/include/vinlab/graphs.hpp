#pragma once

#include "vinlab/permgroup.hpp"

namespace vinlab {

// Simple undirected graph: no loops, no multi-edges.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // i < j
  std::string name;

  void add_edge(int i, int j) {
    require(i != j && i >= 0 && j >= 0 && i < n && j < n, "bad edge");
    edges.insert({std::min(i, j), std::max(i, j)});
  }
  bool has_edge(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
  }
  int degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges)
      if (a == v || b == v) ++d;
    return d;
  }
  std::vector<int> degree_sequence() const {
    std::vector<int> d(n, 0);
    for (auto& [a, b] : edges) ++d[a], ++d[b];
    std::sort(d.begin(), d.end());
    return d;
  }
  ColoredGraph colored() const {
    ColoredGraph g;
    g.n = n;
    g.vcolor.assign(n, 0);
    g.ecolor.assign(n, std::vector<int>(n, 0));
    for (auto& [a, b] : edges) g.ecolor[a][b] = g.ecolor[b][a] = 1;
    return g;
  }
};

inline Graph complete_graph(int n) {
  Graph g;
  g.n = n;
  g.name = "K" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph complete_bipartite(int p, int q) {
  Graph g;
  g.n = p + q;
  g.name = "K" + std::to_string(p) + "," + std::to_string(q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

// The D4 tree: a central vertex of degree 3 and three ends.
inline Graph d4_tree() {
  Graph g;
  g.n = 4;
  g.name = "D4";
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

// Tree with three legs of p, q, r edges from a central vertex.
inline Graph t_tree(int p, int q, int r) {
  Graph g;
  g.n = p + q + r - 2;
  g.name = "T" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
  int next = 1;
  for (int len : {p - 1, q - 1, r - 1}) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  require(next == g.n, "T-tree construction mismatch");
  return g;
}

inline Graph petersen_graph() {
  Graph g;
  g.n = 10;
  g.name = "Petersen";
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

// Heawood graph: incidence of points and lines of the Fano plane.
inline Graph heawood_graph() {
  Graph g;
  g.n = 14;
  g.name = "Heawood";
  // Points 0..6, lines 7..13; Fano lines via quadratic residues.
  const int lines[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                           {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  for (int l = 0; l < 7; ++l)
    for (int t = 0; t < 3; ++t) g.add_edge(lines[l][t], 7 + l);
  return g;
}

// Complement within the complete bipartite graph on the two color classes.
// The classes must be the vertices of even/odd... detected by 2-coloring.
inline Graph bipartite_complement(const Graph& g) {
  // 2-color the graph; must be connected bipartite or a known bipartition.
  std::vector<int> color(g.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < g.n; ++u) {
        if (!g.has_edge(v, u)) continue;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else
          require(color[u] != color[v], "graph is not bipartite");
      }
    }
  }
  Graph c;
  c.n = g.n;
  c.name = "bipartite_complement(" + g.name + ")";
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (color[i] != color[j] && !g.has_edge(i, j)) c.add_edge(i, j);
  return c;
}

inline Graph line_graph(const Graph& g) {
  Graph l;
  std::vector<std::pair<int, int>> es(g.edges.begin(), g.edges.end());
  l.n = int(es.size());
  l.name = "L(" + g.name + ")";
  for (int a = 0; a < l.n; ++a)
    for (int b = a + 1; b < l.n; ++b) {
      auto [i, j] = es[a];
      auto [k, m] = es[b];
      if (i == k || i == m || j == k || j == m) l.add_edge(a, b);
    }
  return l;
}

inline Graph graph_complement(const Graph& g) {
  Graph c;
  c.n = g.n;
  c.name = "complement(" + g.name + ")";
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!g.has_edge(i, j)) c.add_edge(i, j);
  return c;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u;
  u.n = a.n + b.n;
  u.name = a.name + "+" + b.name;
  for (auto& [i, j] : a.edges) u.add_edge(i, j);
  for (auto& [i, j] : b.edges) u.add_edge(a.n + i, a.n + j);
  return u;
}

// K12 minus three disjoint K4's: the component graph of Gamma_4' for the
// (18,4,0) lattice.
inline Graph k12_minus_three_k4() {
  Graph g = complete_graph(12);
  g.name = "K12-3K4";
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.edges.erase({4 * b + i, 4 * b + j});
  return g;
}

// Edge n-fold subdivision: each edge becomes a path of n edges with n-1 new
// vertices. |E| -> n |E|, |V| -> |V| + (n-1)|E|.
inline Graph edge_subdivide(const Graph& g, int n) {
  require(n >= 2, "subdivision needs n >= 2");
  Graph s;
  s.n = g.n + (n - 1) * int(g.edges.size());
  s.name = g.name + "^(" + std::to_string(n) + ")";
  int next = g.n;
  for (auto& [i, j] : g.edges) {
    int prev = i;
    for (int k = 0; k < n - 1; ++k) {
      s.add_edge(prev, next);
      prev = next++;
    }
    s.add_edge(prev, j);
  }
  return s;
}

inline Graph named_graph(const std::string& name, const std::vector<int>& params = {}) {
  if (name == "complete") {
    require(params.size() == 1, "complete(n)");
    return complete_graph(params[0]);
  }
  if (name == "complete_bipartite") {
    require(params.size() == 2, "complete_bipartite(p,q)");
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "path_tree_D4" || name == "D4") return d4_tree();
  if (name == "petersen") return petersen_graph();
  if (name == "heawood") return heawood_graph();
  if (name == "bipartite_complement_heawood")
    return bipartite_complement(heawood_graph());
  if (name == "line_graph_K33") return line_graph(complete_bipartite(3, 3));
  if (name == "line_graph_K6") return line_graph(complete_graph(6));
  throw Error("unknown named graph '" + name + "'");
}

inline PermGroup graph_automorphisms(const Graph& g) {
  ColoredGraph c = g.colored();
  return PermGroup::from_elements(c.n, detail::search_maps(c, c, false));
}

// Isomorphism g1 -> g2 as a vertex map, if one exists.
inline std::optional<std::vector<int>> graph_isomorphism(const Graph& g1,
                                                         const Graph& g2) {
  if (g1.n != g2.n || g1.edges.size() != g2.edges.size()) return std::nullopt;
  auto maps = detail::search_maps(g1.colored(), g2.colored(), true);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

}  // namespace vinlab
