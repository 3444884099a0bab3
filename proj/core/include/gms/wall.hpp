#pragma once

#include <map>
#include <optional>
#include <string>

#include "gms/graph.hpp"
#include "gms/surface.hpp"

namespace gms {

/// The canonical wall H_r: r horizontal paths of length r-1 with vertical
/// rungs between consecutive rows wherever row and column index have equal
/// parity. Vertex (i, j) (1-based row i, column j) has id (i-1)*r + (j-1).
struct ElementaryWall {
  int r = 0;
  MultiGraph graph;

  Vertex at(int i, int j) const { return (i - 1) * r + (j - 1); }
  /// Inverse of at(): (row, column), 1-based.
  std::pair<int, int> coords(Vertex v) const {
    return {v / r + 1, v % r + 1};
  }
};

ElementaryWall elementary_wall(int r);

/// The canonical plane embedding of H_r (rotations in drawing order).
EmbeddedGraph wall_plane_embedding(const ElementaryWall& w);

struct WallFeatures {
  std::vector<std::vector<Vertex>> rows;
  std::vector<std::vector<Vertex>> columns;  // zigzag column-pair paths
  std::vector<std::vector<Vertex>> bricks;   // 6-cycles in cyclic order
  std::vector<Vertex> boundary_cycle;        // empty when r <= 2
};

WallFeatures wall_features(const ElementaryWall& w);

/// Subdivision certificate: branch vertices map injectively into the host
/// and every wall edge maps to a host path between the images of its ends,
/// all paths internally disjoint and internally avoiding branch images.
struct WallCertificate {
  int r = 0;
  std::map<Vertex, Vertex> branch_map;
  std::map<int, std::vector<Vertex>> path_map;  // wall edge id -> host path

  Vertex branch_image(Vertex wall_vertex) const {
    return branch_map.at(wall_vertex);
  }
  /// Every host vertex used by the subdivision.
  VertexSet image_vertices() const;
};

/// The identity certificate of H_r into any host containing it verbatim.
WallCertificate identity_certificate(const ElementaryWall& w);

bool verify_wall_certificate(const MultiGraph& host, int r,
                             const WallCertificate& cert,
                             std::string* why = nullptr);

/// Host walk realizing a wall walk (consecutive wall vertices joined by
/// wall edges; closed when the input is closed).
std::vector<Vertex> map_walk_through_certificate(
    const ElementaryWall& w, const WallCertificate& cert,
    const std::vector<Vertex>& wall_walk, bool closed);

/// Features of a certified wall, pulled back through the path map.
WallFeatures wall_features_host(const ElementaryWall& w,
                                const WallCertificate& cert);

/// Flatness: the image of the boundary cycle bounds a disc containing a
/// degree-3 vertex of H - C. Throws when the certificate is invalid for e.
bool is_flat(const EmbeddedGraph& e, const WallCertificate& cert);

/// First (row-major, odd offsets) aligned k-subwall whose bricks all bound
/// discs and which is flat in e.
std::optional<WallCertificate> find_flat_subwall(const EmbeddedGraph& e,
                                                 const WallCertificate& cert,
                                                 int k);

/// Certificate for the aligned k-subwall of `cert` at 1-based offset
/// (i0, j0); requires i0 = j0 (mod 2) so the rung pattern carries over.
WallCertificate subwall_certificate(const ElementaryWall& w,
                                    const WallCertificate& cert, int k,
                                    int i0, int j0);

struct SubwallWithRings {
  WallCertificate subwall;
  ConcentricFamily rings;  // outermost first, disjoint from the subwall
};

/// Central k-subwall plus m nested wall cycles around it. Requires
/// r >= k + 4m: a ring must cross every spanned row gap once per side and
/// rungs alternate, so each layer consumes two columns.
SubwallWithRings subwall_with_enclosure(const EmbeddedGraph& e,
                                        const WallCertificate& cert, int k,
                                        int m);

}  // namespace gms
