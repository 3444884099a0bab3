#include "gms/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gms {

VertexSet normalized(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void MultiGraph::add_vertex(Vertex v) {
  if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void MultiGraph::add_vertices(const VertexSet& vs) {
  for (Vertex v : vs) add_vertex(v);
}

int MultiGraph::add_edge(Vertex u, Vertex v) {
  int id = max_edge_id() + 1;
  add_edge_with_id(id, u, v);
  return id;
}

void MultiGraph::add_edge_with_id(int id, Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("edge endpoint not in vertex set");
  if (has_edge_id(id))
    throw std::invalid_argument("duplicate edge id " + std::to_string(id));
  edges_.push_back({id, u, v});
}

void MultiGraph::remove_edge(int edge_id) {
  for (auto it = edges_.begin(); it != edges_.end(); ++it)
    if (it->id == edge_id) {
      edges_.erase(it);
      return;
    }
  throw std::invalid_argument("remove_edge: unknown id");
}

void MultiGraph::remove_vertex(Vertex v) {
  if (!has_vertex(v)) throw std::invalid_argument("remove_vertex: unknown");
  edges_.erase(std::remove_if(edges_.begin(), edges_.end(),
                              [v](const Edge& e) { return e.u == v || e.v == v; }),
               edges_.end());
  vertices_.erase(std::lower_bound(vertices_.begin(), vertices_.end(), v));
}

void MultiGraph::set_edge_endpoint(int edge_id, int end, Vertex v) {
  if (!has_vertex(v))
    throw std::invalid_argument("set_edge_endpoint: unknown vertex");
  for (Edge& e : edges_)
    if (e.id == edge_id) {
      (end == 0 ? e.u : e.v) = v;
      return;
    }
  throw std::invalid_argument("set_edge_endpoint: unknown edge");
}

bool MultiGraph::has_vertex(Vertex v) const { return contains(vertices_, v); }

int MultiGraph::max_edge_id() const {
  int m = -1;
  for (const Edge& e : edges_) m = std::max(m, e.id);
  return m;
}

const Edge& MultiGraph::edge_by_id(int id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

bool MultiGraph::has_edge_id(int id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return true;
  return false;
}

bool MultiGraph::adjacent(Vertex u, Vertex v) const {
  for (const Edge& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  return false;
}

VertexSet MultiGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  return normalized(std::move(out));
}

std::vector<int> MultiGraph::incident_edges(Vertex v) const {
  std::vector<int> ids;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

MultiGraph MultiGraph::induced(const VertexSet& vs) const {
  MultiGraph h;
  for (Vertex v : vs)
    if (has_vertex(v)) h.add_vertex(v);
  for (const Edge& e : edges_)
    if (h.has_vertex(e.u) && h.has_vertex(e.v))
      h.add_edge_with_id(e.id, e.u, e.v);
  return h;
}

MultiGraph MultiGraph::without_vertices(const VertexSet& vs) const {
  return induced(set_difference(vertices_, vs));
}

VertexSet MultiGraph::component_of(Vertex v) const {
  std::set<Vertex> seen{v};
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : neighbors(u))
      if (seen.insert(w).second) queue.push_back(w);
  }
  return VertexSet(seen.begin(), seen.end());
}

std::vector<VertexSet> MultiGraph::components() const {
  std::vector<VertexSet> comps;
  std::set<Vertex> left(vertices_.begin(), vertices_.end());
  while (!left.empty()) {
    VertexSet c = component_of(*left.begin());
    for (Vertex v : c) left.erase(v);
    comps.push_back(std::move(c));
  }
  return comps;
}

bool MultiGraph::connected() const { return components().size() <= 1; }

bool verify_separation(const MultiGraph& g, const Separation& s) {
  if (s.side_a.empty() || s.side_b.empty()) return false;
  if (!is_subset(s.side_a, g.vertices()) || !is_subset(s.side_b, g.vertices()))
    return false;
  if (set_union(s.side_a, s.side_b) != g.vertices()) return false;
  for (const Edge& e : g.edges()) {
    bool in_a = contains(s.side_a, e.u) && contains(s.side_a, e.v);
    bool in_b = contains(s.side_b, e.u) && contains(s.side_b, e.v);
    if (!in_a && !in_b) return false;
  }
  return true;
}

namespace {

DecompositionCheck check_coverage(const MultiGraph& g,
                                  const std::vector<VertexSet>& bags) {
  VertexSet covered;
  for (const auto& bag : bags) covered = set_union(covered, bag);
  if (!is_subset(g.vertices(), covered))
    return DecompositionCheck::fail("vertex not covered by any bag");
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (const auto& bag : bags)
      if (contains(bag, e.u) && contains(bag, e.v)) {
        found = true;
        break;
      }
    if (!found)
      return DecompositionCheck::fail("edge " + std::to_string(e.id) +
                                      " not covered by any bag");
  }
  int width = -1;
  for (const auto& bag : bags)
    width = std::max(width, static_cast<int>(bag.size()) - 1);
  return DecompositionCheck::ok(width);
}

}  // namespace

DecompositionCheck verify_path_decomposition(const MultiGraph& g,
                                             const PathDecomposition& d) {
  if (d.bags.empty()) {
    if (g.vertex_count() == 0) return DecompositionCheck::ok(-1);
    return DecompositionCheck::fail("empty decomposition of non-empty graph");
  }
  for (const auto& bag : d.bags)
    if (!is_subset(bag, g.vertices()))
      return DecompositionCheck::fail("bag contains unknown vertex");
  DecompositionCheck cover = check_coverage(g, d.bags);
  if (!cover.valid) return cover;
  for (Vertex v : g.vertices()) {
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(d.bags.size()); ++i)
      if (contains(d.bags[i], v)) {
        if (first < 0) first = i;
        last = i;
      }
    for (int i = first; i <= last; ++i)
      if (!contains(d.bags[i], v))
        return DecompositionCheck::fail(
            "occurrence of vertex " + std::to_string(v) + " not contiguous");
  }
  return cover;
}

DecompositionCheck verify_tree_decomposition(const MultiGraph& g,
                                             const TreeDecomposition& d) {
  int n = static_cast<int>(d.bags.size());
  if (n == 0) {
    if (g.vertex_count() == 0) return DecompositionCheck::ok(-1);
    return DecompositionCheck::fail("empty decomposition of non-empty graph");
  }
  for (const auto& bag : d.bags)
    if (!is_subset(bag, g.vertices()))
      return DecompositionCheck::fail("bag contains unknown vertex");
  // tree shape: connected and acyclic on nodes 0..n-1
  if (static_cast<int>(d.tree.size()) != n - 1)
    return DecompositionCheck::fail("decomposition tree is not a tree");
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : d.tree) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      return DecompositionCheck::fail("tree edge references unknown node");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        queue.push_back(b);
      }
  }
  if (reached != n)
    return DecompositionCheck::fail("decomposition tree is not connected");
  DecompositionCheck cover = check_coverage(g, d.bags);
  if (!cover.valid) return cover;
  // connectivity axiom: the nodes containing any vertex induce a subtree
  for (Vertex v : g.vertices()) {
    std::vector<int> holders;
    for (int i = 0; i < n; ++i)
      if (contains(d.bags[i], v)) holders.push_back(i);
    if (holders.empty()) continue;
    std::set<int> holder_set(holders.begin(), holders.end());
    std::set<int> comp{holders[0]};
    std::deque<int> q2{holders[0]};
    while (!q2.empty()) {
      int a = q2.front();
      q2.pop_front();
      for (int b : adj[a])
        if (holder_set.count(b) && comp.insert(b).second) q2.push_back(b);
    }
    if (comp.size() != holders.size())
      return DecompositionCheck::fail("bags containing vertex " +
                                      std::to_string(v) +
                                      " do not form a subtree");
  }
  return cover;
}

VertexSet Linkage::all_vertices() const {
  std::vector<Vertex> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  return normalized(std::move(all));
}

bool verify_linkage(const MultiGraph& g, const Linkage& l) {
  std::set<Vertex> used;
  for (const auto& p : l.paths) {
    if (p.empty()) return false;
    for (Vertex v : p) {
      if (!g.has_vertex(v)) return false;
      if (!used.insert(v).second) return false;  // disjointness
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.adjacent(p[i], p[i + 1])) return false;
    Vertex a = p.front(), b = p.back();
    bool fwd = contains(l.endpoint_set_x, a) && contains(l.endpoint_set_y, b);
    bool bwd = contains(l.endpoint_set_x, b) && contains(l.endpoint_set_y, a);
    if (!fwd && !bwd) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Unit-capacity flow with vertex splitting. Node 2p is the in-copy and
// 2p+1 the out-copy of the vertex at position p; arcs are explored in
// insertion order, which is ascending by id, so augmentation is
// deterministic.

namespace {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int flow = 0;
    int rev;  // index of reverse arc in arcs[to]
  };

  explicit FlowNet(int n) : adj(n) {}

  void add_arc(int from, int to, int cap) {
    adj[from].push_back({to, cap, 0, static_cast<int>(adj[to].size())});
    adj[to].push_back({from, 0, 0, static_cast<int>(adj[from].size()) - 1});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
    std::deque<int> queue{s};
    pred[s] = {s, -1};
    while (!queue.empty() && pred[t].first < 0) {
      int a = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(adj[a].size()); ++i) {
        const Arc& arc = adj[a][i];
        if (arc.flow < arc.cap && pred[arc.to].first < 0) {
          pred[arc.to] = {a, i};
          queue.push_back(arc.to);
        }
      }
    }
    if (pred[t].first < 0) return false;
    for (int v = t; v != s;) {
      auto [p, i] = pred[v];
      adj[p][i].flow += 1;
      adj[adj[p][i].to][adj[p][i].rev].flow -= 1;
      v = p;
    }
    return true;
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (augment(s, t)) ++total;
    return total;
  }

  std::vector<char> reachable_from(int s) const {
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (const Arc& arc : adj[a])
        if (arc.flow < arc.cap && !seen[arc.to]) {
          seen[arc.to] = 1;
          queue.push_back(arc.to);
        }
    }
    return seen;
  }

  std::vector<char> coreachable_to(int t) const {
    // nodes with a residual path to t
    std::vector<char> seen(adj.size(), 0);
    seen[t] = 1;
    std::deque<int> queue{t};
    while (!queue.empty()) {
      int b = queue.front();
      queue.pop_front();
      for (const Arc& back : adj[b]) {
        // residual arc from back.to into b exists iff the partner arc at
        // back.to has spare capacity
        const Arc& fwd = adj[back.to][back.rev];
        if (fwd.flow < fwd.cap && !seen[back.to]) {
          seen[back.to] = 1;
          queue.push_back(back.to);
        }
      }
    }
    return seen;
  }

  std::vector<std::vector<Arc>> adj;
};

struct SplitNet {
  // split digraph over positions of `verts`
  FlowNet net;
  std::vector<Vertex> verts;
  int source, sink;

  static constexpr int kInf = 1 << 20;

  SplitNet(const MultiGraph& g, const VertexSet& x, const VertexSet& y)
      : net(static_cast<int>(g.vertices().size()) * 2 + 2),
        verts(g.vertices()) {
    int n = static_cast<int>(verts.size());
    source = 2 * n;
    sink = 2 * n + 1;
    for (int p = 0; p < n; ++p) net.add_arc(2 * p, 2 * p + 1, 1);
    // parallel edges are redundant for vertex-disjoint paths
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      int pu = pos(e.u), pv = pos(e.v);
      if (seen.insert({std::min(pu, pv), std::max(pu, pv)}).second) {
        net.add_arc(2 * pu + 1, 2 * pv, kInf);
        net.add_arc(2 * pv + 1, 2 * pu, kInf);
      }
    }
    for (Vertex v : x) net.add_arc(source, 2 * pos(v), 1);
    for (Vertex v : y) net.add_arc(2 * pos(v) + 1, sink, 1);
  }

  int pos(Vertex v) const {
    return static_cast<int>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  }

  // Walks flow-carrying arcs from every saturated source arc, yielding the
  // vertex paths of a flow decomposition.
  std::vector<std::vector<Vertex>> extract_paths() const {
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::vector<char>> used(net.adj.size());
    for (auto& u : used) {
      // sized lazily below
    }
    for (std::size_t a = 0; a < net.adj.size(); ++a)
      used[a].assign(net.adj[a].size(), 0);
    for (std::size_t i = 0; i < net.adj[source].size(); ++i) {
      const auto& arc = net.adj[source][i];
      if (arc.flow <= 0) continue;
      std::vector<Vertex> path;
      int node = arc.to;
      while (node != sink) {
        if (node % 2 == 0) path.push_back(verts[node / 2]);
        bool advanced = false;
        for (std::size_t j = 0; j < net.adj[node].size(); ++j) {
          const auto& nxt = net.adj[node][j];
          if (nxt.flow > 0 && !used[node][j]) {
            used[node][j] = 1;
            node = nxt.to;
            advanced = true;
            break;
          }
        }
        if (!advanced) throw std::logic_error("flow decomposition stuck");
      }
      paths.push_back(std::move(path));
    }
    return paths;
  }
};

}  // namespace

DisjointPathsResult disjoint_paths(const MultiGraph& g, const VertexSet& x,
                                   const VertexSet& y) {
  if (!is_subset(x, g.vertices()) || !is_subset(y, g.vertices()))
    throw std::invalid_argument("disjoint_paths: endpoint not in graph");
  SplitNet sn(g, x, y);
  int value = sn.net.max_flow(sn.source, sn.sink);
  DisjointPathsResult out;
  out.linkage.paths = sn.extract_paths();
  std::sort(out.linkage.paths.begin(), out.linkage.paths.end());
  out.linkage.endpoint_set_x = x;
  out.linkage.endpoint_set_y = y;

  std::vector<char> reach = sn.net.reachable_from(sn.source);
  VertexSet sep;
  int n = static_cast<int>(sn.verts.size());
  for (int p = 0; p < n; ++p)
    if (reach[2 * p] && !reach[2 * p + 1]) sep.push_back(sn.verts[p]);
  for (Vertex v : x)
    if (!reach[2 * sn.pos(v)]) sep.push_back(v);  // cut at the source arc
  for (Vertex v : y)
    if (reach[2 * sn.pos(v) + 1]) sep.push_back(v);  // cut at the sink arc
  out.separator = normalized(std::move(sep));
  if (static_cast<int>(out.separator.size()) != value)
    throw std::logic_error("Menger certificate size mismatch");
  return out;
}

Separation leftmost_min_separator(const MultiGraph& g, const VertexSet& x,
                                  const VertexSet& y, Vertex forced) {
  if (!g.has_vertex(forced))
    throw std::invalid_argument("leftmost_min_separator: forced not in graph");
  if (!is_subset(x, g.vertices()) || !is_subset(y, g.vertices()))
    throw std::invalid_argument("leftmost_min_separator: terminal not in graph");
  MultiGraph h = g.without_vertices({forced});
  VertexSet xs = set_difference(x, {forced});
  VertexSet ys = set_difference(y, {forced});
  SplitNet sn(h, xs, ys);
  sn.net.max_flow(sn.source, sn.sink);
  std::vector<char> coreach = sn.net.coreachable_to(sn.sink);

  int n = static_cast<int>(sn.verts.size());
  VertexSet cut;
  for (int p = 0; p < n; ++p)
    if (!coreach[2 * p] && coreach[2 * p + 1]) cut.push_back(sn.verts[p]);
  // terminals whose source/sink arc crosses the cut boundary
  for (std::size_t i = 0; i < sn.net.adj[sn.source].size(); ++i) {
    const auto& arc = sn.net.adj[sn.source][i];
    if (!coreach[sn.source] && coreach[arc.to] && arc.flow == arc.cap)
      cut.push_back(sn.verts[arc.to / 2]);
  }
  for (Vertex v : ys)
    if (!coreach[2 * sn.pos(v) + 1]) cut.push_back(v);
  cut = normalized(std::move(cut));

  VertexSet b_inner;
  for (int p = 0; p < n; ++p)
    if (coreach[2 * p]) b_inner.push_back(sn.verts[p]);
  VertexSet sep = set_union(cut, VertexSet{forced});
  Separation s;
  s.side_b = set_union(sep, b_inner);
  s.side_a = set_union(set_difference(g.vertices(), s.side_b), sep);
  if (!verify_separation(g, s) || !is_subset(x, s.side_a) ||
      !is_subset(y, s.side_b))
    throw std::logic_error("leftmost_min_separator produced invalid separation");
  return s;
}

MultiGraph torso(const MultiGraph& g, const TreeDecomposition& d, int node) {
  if (node < 0 || node >= static_cast<int>(d.bags.size()))
    throw std::invalid_argument("torso: unknown node");
  MultiGraph t = g.induced(d.bags[node]);
  int next_id = std::max(g.max_edge_id(), t.max_edge_id()) + 1;
  for (auto [a, b] : d.tree) {
    int nb = a == node ? b : (b == node ? a : -1);
    if (nb < 0) continue;
    VertexSet overlap = set_intersection(d.bags[node], d.bags[nb]);
    for (std::size_t i = 0; i < overlap.size(); ++i)
      for (std::size_t j = i + 1; j < overlap.size(); ++j)
        if (!t.adjacent(overlap[i], overlap[j]))
          t.add_edge_with_id(next_id++, overlap[i], overlap[j]);
  }
  return t;
}

TreeDecomposition combine_decompositions(
    const MultiGraph& g, const TreeDecomposition& outer,
    const std::vector<TreeDecomposition>& inner) {
  int outer_n = static_cast<int>(outer.bags.size());
  if (static_cast<int>(inner.size()) != outer_n)
    throw std::invalid_argument(
        "combine_decompositions: one inner decomposition per outer node");
  for (int i = 0; i < outer_n; ++i) {
    DecompositionCheck c =
        verify_tree_decomposition(torso(g, outer, i), inner[i]);
    if (!c.valid)
      throw std::invalid_argument(
          "combine_decompositions: inner decomposition invalid for torso of "
          "node " +
          std::to_string(i) + ": " + c.violation);
  }
  TreeDecomposition out;
  std::vector<int> offset(outer_n, 0);
  for (int i = 0; i < outer_n; ++i) {
    offset[i] = static_cast<int>(out.bags.size());
    for (const auto& bag : inner[i].bags) out.bags.push_back(bag);
    for (auto [a, b] : inner[i].tree)
      out.tree.push_back({offset[i] + a, offset[i] + b});
  }
  auto node_with_overlap = [&](int i, const VertexSet& overlap) {
    for (int k = 0; k < static_cast<int>(inner[i].bags.size()); ++k)
      if (is_subset(overlap, inner[i].bags[k])) return offset[i] + k;
    throw std::logic_error(
        "combine_decompositions: no inner bag contains the torso overlap");
  };
  for (auto [a, b] : outer.tree) {
    VertexSet overlap = set_intersection(outer.bags[a], outer.bags[b]);
    out.tree.push_back(
        {node_with_overlap(a, overlap), node_with_overlap(b, overlap)});
  }
  return out;
}

}  // namespace gms
