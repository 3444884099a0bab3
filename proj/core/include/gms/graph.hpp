#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gms {

using Vertex = int;

/// Sorted vector of distinct vertex ids. All set helpers below expect and
/// preserve this normal form.
using VertexSet = std::vector<Vertex>;

VertexSet normalized(std::vector<Vertex> xs);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

struct Edge {
  int id;
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool is_loop() const { return u == v; }
};

/// Finite multigraph with loops and parallel edges. Edge ids are unique and
/// survive subgraph extraction unchanged.
class MultiGraph {
 public:
  MultiGraph() = default;

  void add_vertex(Vertex v);
  void add_vertices(const VertexSet& vs);
  int add_edge(Vertex u, Vertex v);              // assigns the next free id
  void add_edge_with_id(int id, Vertex u, Vertex v);
  void remove_edge(int edge_id);
  /// Removes v together with all incident edges.
  void remove_vertex(Vertex v);
  /// Re-points one endpoint of an existing edge (end 0 is u, end 1 is v).
  void set_edge_endpoint(int edge_id, int end, Vertex v);

  bool has_vertex(Vertex v) const;
  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  int max_edge_id() const;

  const Edge& edge_by_id(int id) const;
  bool has_edge_id(int id) const;
  /// True if some edge joins u and v (loops only count for u == v).
  bool adjacent(Vertex u, Vertex v) const;

  /// Distinct neighbors, ascending; loops do not make a vertex its own
  /// neighbor.
  VertexSet neighbors(Vertex v) const;
  /// Ids of all edges incident to v (loops listed once), ascending.
  std::vector<int> incident_edges(Vertex v) const;

  /// Subgraph induced on `vs`; edge ids are preserved.
  MultiGraph induced(const VertexSet& vs) const;
  MultiGraph without_vertices(const VertexSet& vs) const;

  VertexSet component_of(Vertex v) const;
  std::vector<VertexSet> components() const;
  bool connected() const;

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
};

/// Ordered separation (A, B): non-empty sides covering all vertices such
/// that every edge lies inside one side.
struct Separation {
  VertexSet side_a;
  VertexSet side_b;

  VertexSet separator() const { return set_intersection(side_a, side_b); }
  int order() const { return static_cast<int>(separator().size()); }
  Separation flipped() const { return {side_b, side_a}; }

  bool operator==(const Separation& o) const {
    return side_a == o.side_a && side_b == o.side_b;
  }
  bool operator<(const Separation& o) const {
    return side_a != o.side_a ? side_a < o.side_a : side_b < o.side_b;
  }
};

bool verify_separation(const MultiGraph& g, const Separation& s);

struct PathDecomposition {
  std::vector<VertexSet> bags;
};

struct TreeDecomposition {
  std::vector<VertexSet> bags;                 // node i has bag bags[i]
  std::vector<std::pair<int, int>> tree;       // edges between node indices
  std::optional<int> root;

  std::size_t node_count() const { return bags.size(); }
};

/// Outcome of a decomposition check: either a width or the first violated
/// axiom.
struct DecompositionCheck {
  bool valid = false;
  int width = -1;
  std::string violation;

  static DecompositionCheck ok(int w) { return {true, w, {}}; }
  static DecompositionCheck fail(std::string why) {
    return {false, -1, std::move(why)};
  }
};

DecompositionCheck verify_path_decomposition(const MultiGraph& g,
                                             const PathDecomposition& d);
DecompositionCheck verify_tree_decomposition(const MultiGraph& g,
                                             const TreeDecomposition& d);

/// Family of pairwise vertex-disjoint paths, each with one end in X and the
/// other in Y.
struct Linkage {
  std::vector<std::vector<Vertex>> paths;
  VertexSet endpoint_set_x;
  VertexSet endpoint_set_y;

  std::size_t size() const { return paths.size(); }
  VertexSet all_vertices() const;
};

/// True iff paths are vertex-disjoint, walk along edges of g, and each joins
/// X to Y.
bool verify_linkage(const MultiGraph& g, const Linkage& l);

/// Maximum family of vertex-disjoint x–y paths plus a separator of equal
/// size (Menger certificate). Deterministic: augmentation explores arcs in
/// ascending id order.
struct DisjointPathsResult {
  Linkage linkage;
  VertexSet separator;
};

DisjointPathsResult disjoint_paths(const MultiGraph& g, const VertexSet& x,
                                   const VertexSet& y);

/// Among separations (A,B) with x ⊆ A, y ⊆ B and forced ∈ A∩B, returns one
/// minimizing (|A∩B|, |B|) lexicographically.
Separation leftmost_min_separator(const MultiGraph& g, const VertexSet& x,
                                  const VertexSet& y, Vertex forced);

/// Torso of a decomposition node: induced subgraph on its bag plus a clique
/// on every overlap with a neighboring bag.
MultiGraph torso(const MultiGraph& g, const TreeDecomposition& d, int node);

/// Replaces every node of `outer` by a tree-decomposition of its torso and
/// reconnects along overlap-containing bags. Width never exceeds the largest
/// inner width.
TreeDecomposition combine_decompositions(
    const MultiGraph& g, const TreeDecomposition& outer,
    const std::vector<TreeDecomposition>& inner);

}  // namespace gms
