#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gms/graph.hpp"
#include "gms/surface.hpp"

namespace gms {

/// A graph with a linearly ordered set of society vertices.
struct Vortex {
  MultiGraph graph;
  std::vector<Vertex> society;

  int length() const { return static_cast<int>(society.size()); }
  VertexSet society_set() const { return normalized(society); }
  VertexSet interior() const {
    return set_difference(graph.vertices(), society_set());
  }
};

struct VortexDecomposition {
  enum class Kind { kLinear, kCircular };
  Kind kind = Kind::kLinear;
  std::vector<VertexSet> bags;
};

struct VortexCheck {
  bool valid = false;
  int depth = -1;
  int adhesion = -1;
  std::string violation;
};

/// Checks the decomposition axioms (path-decomposition with w_i in X_i for
/// linear; the four cyclic axioms for circular) and reports depth and
/// adhesion. Circular adhesion includes the wrap pair.
VortexCheck verify_vortex_decomposition(const Vortex& v,
                                        const VortexDecomposition& d);

/// Exact minimum adhesion over all decompositions, by branch-and-bound over
/// per-vertex bag intervals. Society length must be at least 3 and the
/// vortex at most 12 vertices.
int vortex_adhesion(const Vortex& v);

/// V - x with the merged-bag decomposition; adhesion never increases.
/// Requires a valid linear decomposition and society length at least 3.
std::pair<Vortex, VortexDecomposition> vortex_delete_vertex(
    const Vortex& v, const VortexDecomposition& d, Vertex x);

/// Every society pair is joined by a path with no inner society vertices,
/// and every triple by two internally disjoint such paths through the
/// middle vertex.
bool is_properly_attached(const Vortex& v);

struct MergeResult {
  VertexSet apex_add;
  Vortex merged;
  VortexDecomposition decomposition;
};

/// Merges two vortices along a curve hitting `curve_hits`, entering the
/// discs at society positions k and l (1-based). Both vortices need length
/// at least 4 and valid linear decompositions.
MergeResult merge_vortices(const Vortex& v, const Vortex& w,
                           const VortexDecomposition& dv,
                           const VortexDecomposition& dw,
                           const VertexSet& curve_hits, int k, int l);

/// Certificate that a vortex decomposition is linked: equal-size adhesion
/// sets, a linkage realizing them, and a society path (or cycle) avoiding
/// the linkage.
struct LinkedCertificate {
  VortexDecomposition decomposition;
  std::vector<VertexSet> adhesion_sets;
  /// Linear: the X_1-X_n paths (trimmed to their first/last adhesion-set
  /// vertices). Circular: closed walks stored with the first vertex not
  /// repeated at the end.
  std::vector<std::vector<Vertex>> linkage;
  std::vector<Vertex> society_path;  // closed for circular certificates
};

bool verify_linked(const Vortex& v, const LinkedCertificate& c,
                   std::string* why = nullptr);

struct LinkResult {
  Vortex vortex;  // the rebuilt vortex on the region graph
  LinkedCertificate certificate;
  VertexSet deleted;
};

/// Lemma-style linking: deletes one vertex per enclosing cycle plus a
/// society vertex (and possibly one adhesion set), pushes a maximum family
/// of disjoint paths as deep as possible, and reads the linked
/// decomposition off the leftmost minimal separators along the outermost
/// path. The enclosure must consist of adhesion+1 cycles tightly enclosing
/// the society inside the host.
LinkResult link_vortex(const EmbeddedGraph& host, const Vortex& v,
                       const VortexDecomposition& d,
                       const ConcentricFamily& enclosure);

/// Circular variant: cycle vertices are split instead of deleted and the
/// copies are re-identified afterwards, yielding a circular linked
/// decomposition. Deletes at most adhesion+2 vertices.
LinkResult link_vortex_circular(const EmbeddedGraph& host, const Vortex& v,
                                const VortexDecomposition& d,
                                const ConcentricFamily& enclosure);

struct CircularToLinear {
  Vortex vortex;
  VortexDecomposition decomposition;  // linear
  VertexSet deleted;
};

/// Deletes the overlap of the two bags meeting at `cut_index` (1-based,
/// between bags cut_index-1 and cut_index) and re-indexes so the wrap
/// overlap is empty; the result is a valid linear decomposition.
CircularToLinear circular_to_linear(const Vortex& v,
                                    const VortexDecomposition& d,
                                    int cut_index);

}  // namespace gms
