#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gms/graph.hpp"

namespace gms {

/// One end of an edge: `end` is 0 at Edge::u and 1 at Edge::v. A loop has
/// both ends at the same vertex.
struct EdgeEnd {
  int edge;
  int end;

  auto operator<=>(const EdgeEnd&) const = default;
};

/// Graph embedded in a surface, encoded as a rotation system with edge
/// signs. Sign -1 marks an orientation-reversing edge, which is how
/// non-orientable surfaces arise.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(MultiGraph g, std::map<Vertex, std::vector<EdgeEnd>> rotation,
                std::map<int, int> sign);

  const MultiGraph& graph() const { return graph_; }
  const std::vector<EdgeEnd>& rotation(Vertex v) const;
  const std::map<Vertex, std::vector<EdgeEnd>>& rotations() const {
    return rotation_;
  }
  int sign(int edge_id) const;
  const std::map<int, int>& signs() const { return sign_; }

  Vertex end_vertex(const EdgeEnd& h) const;
  EdgeEnd other_end(const EdgeEnd& h) const;
  int end_position(const EdgeEnd& h) const;  // index within its rotation

  /// Throws std::invalid_argument when the rotation system is malformed.
  void validate() const;

  // -- mutation used by surgery operations -------------------------------
  /// Reverses the local rotation at v and flips the sign of every non-loop
  /// edge at v; an equivalent embedding of the same surface.
  void flip_vertex(Vertex v);
  /// Flips vertices so that every edge of some spanning forest has sign +1.
  void normalize_signs();
  void remove_edge(int edge_id);
  void remove_vertex(Vertex v);
  /// Contracts non-loop edge `edge_id`, merging Edge::v's rotation into
  /// Edge::u at the position of the contracted end. Keeps u.
  void contract_edge(int edge_id);
  /// Splits v at rotation gaps g1, g2: the first new vertex receives the
  /// ends strictly after gap g1 up to gap g2, the second the rest. Returns
  /// the two new vertex ids (second may be isolated when g1 == g2). Ids
  /// default to the next free ones; callers sharing an id space with other
  /// graphs can pass explicit fresh ids.
  std::pair<Vertex, Vertex> split_vertex(Vertex v, int gap1, int gap2,
                                         Vertex id_a = -1, Vertex id_b = -1);

  Vertex fresh_vertex_id() const;
  void add_isolated_vertex(Vertex v);
  /// Inserts edge u-v with sign +1, placing the new ends at gap `gap_u` of
  /// u's rotation and gap `gap_v` of v's. Returns the edge id.
  int insert_edge_at(Vertex u, int gap_u, Vertex v, int gap_v);

  EmbeddedGraph induced(const VertexSet& keep) const;

 private:
  MultiGraph graph_;
  std::map<Vertex, std::vector<EdgeEnd>> rotation_;
  std::map<int, int> sign_;
};

/// A face of the embedding: the boundary walk lists, in traversal order,
/// each visited vertex with the edge-end the walk leaves through.
struct Face {
  int id = -1;
  std::vector<Vertex> walk;            // vertex at each traversal step
  std::vector<EdgeEnd> out_ends;       // end the walk leaves through
  VertexSet vertex_set;

  int degree() const { return static_cast<int>(walk.size()); }
};

/// Result of face tracing; also records which face owns each rotation gap
/// ("corner") and which faces lie on the two sides of each edge.
struct FaceTrace {
  std::vector<Face> faces;
  std::map<std::pair<Vertex, int>, int> corner_face;   // (vertex, gap) -> face
  std::map<int, std::pair<int, int>> edge_sides;       // edge -> two face ids

  const Face& face(int id) const { return faces.at(id); }
  std::vector<int> faces_at(Vertex v) const;
};

FaceTrace trace_faces(const EmbeddedGraph& e);

/// Euler genus 2 - chi, summed over components; components with no edges
/// count as spheres.
int euler_genus(const EmbeddedGraph& e);

/// Minimum number of vertices hit by a curve from x to y that meets the
/// graph only in vertices, endpoints included; 1 when x == y. Empty when no
/// such curve exists (different components).
std::optional<int> sigma_distance(const EmbeddedGraph& e, Vertex x, Vertex y);

/// Contracts the closure of face `face_id` to a single fresh vertex whose
/// rotation inherits the order in which its neighbors' edges crossed the
/// face boundary.
EmbeddedGraph contract_face(const EmbeddedGraph& e, int face_id);

/// Closed curve meeting the graph only in vertices, as an alternating
/// vertex/face walk: after vertices[i] the curve crosses faces[i] to reach
/// vertices[i+1] (cyclically). A curve inside a single face has no
/// vertices and one face. `corners`, when present, pins down the rotation
/// gaps (arrival, departure) used at each vertex.
struct Noose {
  std::vector<Vertex> vertices;
  std::vector<int> faces;
  std::vector<std::pair<int, int>> corners;

  VertexSet hit_set() const { return normalized(vertices); }
};

/// True iff the walk is locally consistent with the embedding (every listed
/// face is incident to its flanking vertices).
bool verify_noose(const EmbeddedGraph& e, const Noose& n);

/// True iff the noose visits every face at most once.
bool check_noose_face_crossings(const EmbeddedGraph& e, const Noose& n);

struct NooseCut {
  std::vector<EmbeddedGraph> pieces;             // one per component
  std::vector<int> piece_genus;
  bool genus_reducing = false;
  /// for every split noose vertex, the two replacement ids
  std::map<Vertex, std::pair<Vertex, Vertex>> copies;
};

/// Cuts the surface along the noose: every noose vertex splits into two
/// copies along the curve's corners, holes are capped, and the resulting
/// components are re-traced. genus_reducing is true iff every resulting
/// component has smaller Euler genus than the input.
NooseCut cut_along_noose(const EmbeddedGraph& e, const Noose& n);

/// Cycle given explicitly as vertices plus the edge chosen between each
/// consecutive pair (wrapping).
struct EmbeddedCycle {
  std::vector<Vertex> verts;
  std::vector<int> edges;

  static EmbeddedCycle from_vertices(const MultiGraph& g,
                                     const std::vector<Vertex>& vs);
};

struct CycleCut {
  bool two_sided = false;
  bool separates = false;
  VertexSet side_a;  // original vertices strictly on each side
  VertexSet side_b;
  int genus_a = -1;  // genus of the capped piece on each side
  int genus_b = -1;
};

/// Cuts a connected embedded graph along a cycle, doubling the cycle.
CycleCut cut_along_cycle(const EmbeddedGraph& e, const EmbeddedCycle& c);

/// True iff the cycle bounds a disc whose interior contains `inside` (which
/// must avoid the cycle). An empty `inside` asks only whether some side is
/// a disc.
bool cycle_bounds_disc(const EmbeddedGraph& e, const EmbeddedCycle& c,
                       const VertexSet& inside);

/// Vertices strictly inside the disc bounded by c that contains `anchor`
/// material (anchor may be on the boundary walk of the relevant side).
/// Throws if c does not bound such a disc.
VertexSet disc_interior(const EmbeddedGraph& e, const EmbeddedCycle& c,
                        const VertexSet& anchor);

/// Smallest k <= length_bound such that some genus-reducing noose hits
/// exactly k vertices; empty when every noose up to the bound fails.
struct Representativity {
  std::optional<int> value;
  std::optional<Noose> witness;
};

Representativity representativity(const EmbeddedGraph& e, int length_bound);

/// Concentric cycles, outermost first: D(C_1) contains D(C_2) and so on.
struct ConcentricFamily {
  std::vector<std::vector<Vertex>> cycles;

  std::size_t size() const { return cycles.size(); }
};

struct ConcentricSearch {
  ConcentricFamily family;
  bool success = false;
  int blocking_layer = -1;  // number of cycles found when growth got stuck
};

/// Builds up to k disjoint nested cycles around a face by growing face
/// layers of the radial structure outward from `region`.
ConcentricSearch find_concentric_cycles(const EmbeddedGraph& e, int region,
                                        int k);

/// Same growth, seeded with every face incident to a vertex of `core`; the
/// cycles enclose `core` and avoid it.
ConcentricSearch concentric_cycles_around(const EmbeddedGraph& e,
                                          const VertexSet& core, int k);

/// Checks pairwise disjointness, disc bounding, nesting, and strict
/// enclosure of omega.
bool verify_concentric_enclosure(const EmbeddedGraph& e,
                                 const ConcentricFamily& family,
                                 const VertexSet& omega,
                                 std::string* why = nullptr);

/// Tight enclosure: every vertex of C_k is within sigma-distance n-k+2 of
/// omega. Throws when the family does not enclose omega.
bool is_tightly_enclosing(const EmbeddedGraph& e,
                          const ConcentricFamily& family,
                          const VertexSet& omega);

struct TightenResult {
  ConcentricFamily family;
  std::vector<long> potential_trace;  // strictly decreasing across rewrites
};

/// Iteratively replaces cycles by cheaper enclosing cycles in the same
/// annulus until the family tightly encloses omega.
TightenResult tighten_cycles(const EmbeddedGraph& e,
                             const ConcentricFamily& family,
                             const VertexSet& omega);

}  // namespace gms
