#pragma once

// Brute-force reference implementations used to validate library results.
// These are deliberately independent of the library algorithms: plain
// exhaustive enumeration, no flow, no incremental tricks.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "gms/graph.hpp"

namespace gms::oracle {

// Maximum number of vertex-disjoint x-y paths, by exhaustive search over
// families of simple paths (each path trimmed at its first y-vertex).
inline int max_disjoint_paths_brute(const MultiGraph& g, const VertexSet& x,
                                    const VertexSet& y) {
  std::set<Vertex> avail(g.vertices().begin(), g.vertices().end());

  std::function<int()> best = [&]() -> int {
    Vertex start = -1;
    for (Vertex v : x)
      if (avail.count(v)) {
        start = v;
        break;
      }
    if (start < 0) return 0;

    // option 1: leave `start` unused
    avail.erase(start);
    int result = best();
    avail.insert(start);

    // option 2: route a path from `start` to the first y-vertex it reaches
    std::vector<Vertex> path{start};
    std::function<void()> dfs = [&]() {
      Vertex cur = path.back();
      if (contains(y, cur)) {
        for (Vertex v : path) avail.erase(v);
        result = std::max(result, 1 + best());
        for (Vertex v : path) avail.insert(v);
        return;
      }
      for (Vertex w : g.neighbors(cur)) {
        if (!avail.count(w)) continue;
        bool on_path = std::find(path.begin(), path.end(), w) != path.end();
        if (on_path) continue;
        path.push_back(w);
        dfs();
        path.pop_back();
      }
    };
    dfs();
    return result;
  };
  return best();
}

// Every ordered separation of g with order at most max_order. A separation
// is a separator S plus an assignment of the components of g - S to sides.
inline std::vector<Separation> all_separations(const MultiGraph& g,
                                               int max_order) {
  std::vector<Separation> out;
  const VertexSet& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet sep;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sep.push_back(vs[i]);
    if (static_cast<int>(sep.size()) > max_order) continue;
    std::vector<VertexSet> comps = g.without_vertices(sep).components();
    int k = static_cast<int>(comps.size());
    if (k > 20) continue;  // cannot happen at oracle scale
    for (unsigned am = 0; am < (1u << k); ++am) {
      VertexSet a = sep, b = sep;
      for (int i = 0; i < k; ++i) {
        if (am & (1u << i))
          a = set_union(a, comps[i]);
        else
          b = set_union(b, comps[i]);
      }
      if (a.empty() || b.empty()) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

// Direct axiom-by-axiom path-decomposition check.
inline bool path_decomposition_valid_brute(const MultiGraph& g,
                                           const PathDecomposition& d) {
  for (Vertex v : g.vertices()) {
    bool seen = false, gap = false;
    bool any = false;
    for (const auto& bag : d.bags) {
      bool in = contains(bag, v);
      if (in) {
        if (gap) return false;  // interval broken
        seen = true;
        any = true;
      } else if (seen) {
        gap = true;
      }
    }
    if (!any) return false;
  }
  for (const Edge& e : g.edges()) {
    bool cov = false;
    for (const auto& bag : d.bags)
      if (contains(bag, e.u) && contains(bag, e.v)) cov = true;
    if (!cov) return false;
  }
  for (const auto& bag : d.bags)
    if (!is_subset(bag, g.vertices())) return false;
  return true;
}

}  // namespace gms::oracle
