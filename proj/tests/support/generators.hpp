#pragma once

// Seeded fixture generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "gms/graph.hpp"

namespace gms::gen {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {  // inclusive bounds
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline MultiGraph random_multigraph(Rng& rng, int max_vertices,
                                    double edge_factor = 1.4,
                                    bool allow_loops = true) {
  MultiGraph g;
  int n = uniform(rng, 1, max_vertices);
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  int m = static_cast<int>(edge_factor * n);
  for (int i = 0; i < m; ++i) {
    int u = uniform(rng, 0, n - 1);
    int v = uniform(rng, 0, n - 1);
    if (u == v && !allow_loops) continue;
    g.add_edge(u, v);
  }
  return g;
}

inline MultiGraph random_connected_graph(Rng& rng, int n,
                                         double extra_edge_prob = 0.3) {
  MultiGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int v = 1; v < n; ++v) g.add_edge(uniform(rng, 0, v - 1), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) &&
          std::bernoulli_distribution(extra_edge_prob)(rng))
        g.add_edge(u, v);
  return g;
}

inline VertexSet random_subset(Rng& rng, const VertexSet& vs,
                               bool non_empty = true) {
  VertexSet out;
  for (Vertex v : vs)
    if (uniform(rng, 0, 1)) out.push_back(v);
  if (out.empty() && non_empty && !vs.empty())
    out.push_back(vs[uniform(rng, 0, static_cast<int>(vs.size()) - 1)]);
  return out;
}

// Valid tree-decomposition from a random elimination order.
inline TreeDecomposition elimination_tree_decomposition(Rng& rng,
                                                        const MultiGraph& g) {
  VertexSet order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<VertexSet> adj_sets;  // fill-in adjacency as sorted sets
  auto idx = [&](Vertex v) {
    const VertexSet& vs = g.vertices();
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) -
                            vs.begin());
  };
  adj_sets.assign(g.vertex_count(), {});
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj_sets[idx(e.u)] = set_union(adj_sets[idx(e.u)], {e.v});
    adj_sets[idx(e.v)] = set_union(adj_sets[idx(e.v)], {e.u});
  }

  TreeDecomposition td;
  std::vector<char> eliminated(g.vertex_count(), 0);
  std::vector<int> bag_of_vertex(g.vertex_count(), -1);
  for (std::size_t step = 0; step < order.size(); ++step) {
    Vertex v = order[step];
    VertexSet nbrs;
    for (Vertex w : adj_sets[idx(v)])
      if (!eliminated[idx(w)]) nbrs.push_back(w);
    td.bags.push_back(set_union(nbrs, {v}));
    bag_of_vertex[idx(v)] = static_cast<int>(td.bags.size()) - 1;
    eliminated[idx(v)] = 1;
    for (Vertex a : nbrs)
      for (Vertex b : nbrs)
        if (a < b) {
          adj_sets[idx(a)] = set_union(adj_sets[idx(a)], {b});
          adj_sets[idx(b)] = set_union(adj_sets[idx(b)], {a});
        }
  }
  // connect each bag to the bag of the first later-eliminated neighbor
  std::vector<int> elim_pos(g.vertex_count());
  for (std::size_t step = 0; step < order.size(); ++step)
    elim_pos[idx(order[step])] = static_cast<int>(step);
  for (std::size_t step = 0; step < order.size(); ++step) {
    Vertex v = order[step];
    int bag = bag_of_vertex[idx(v)];
    Vertex best = -1;
    int best_pos = static_cast<int>(order.size());
    for (Vertex w : td.bags[bag])
      if (w != v && elim_pos[idx(w)] > static_cast<int>(step) &&
          elim_pos[idx(w)] < best_pos) {
        best = w;
        best_pos = elim_pos[idx(w)];
      }
    if (best >= 0) td.tree.push_back({bag, bag_of_vertex[idx(best)]});
  }
  // a disconnected graph yields a forest; chain remaining roots together
  if (!td.bags.empty()) {
    std::vector<int> parent(td.bags.size(), -1);
    std::vector<std::vector<int>> adj(td.bags.size());
    for (auto [a, b] : td.tree) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(td.bags.size(), 0);
    std::vector<int> roots;
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
      if (seen[i]) continue;
      roots.push_back(static_cast<int>(i));
      std::vector<int> stack{static_cast<int>(i)};
      seen[i] = 1;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : adj[a])
          if (!seen[b]) {
            seen[b] = 1;
            stack.push_back(b);
          }
      }
    }
    for (std::size_t i = 1; i < roots.size(); ++i)
      td.tree.push_back({roots[i - 1], roots[i]});
  }
  return td;
}

}  // namespace gms::gen
