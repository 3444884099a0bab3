#include "gms/wall.hpp"

#include <doctest.h>

#include <functional>
#include <set>

#include "support/embed_fixtures.hpp"
#include "support/generators.hpp"

using namespace gms;

namespace {

// all 6-cycles of a graph, by brute-force DFS (oracle for brick counts)
int count_hexagons(const MultiGraph& g) {
  std::set<VertexSet> found;
  std::vector<Vertex> path;
  std::function<void(Vertex)> dfs = [&](Vertex cur) {
    if (path.size() == 6) {
      if (g.adjacent(cur, path.front())) found.insert(normalized(path));
      return;
    }
    for (Vertex nb : g.neighbors(cur)) {
      if (nb < path.front()) continue;
      if (std::find(path.begin(), path.end(), nb) != path.end()) continue;
      path.push_back(nb);
      dfs(nb);
      path.pop_back();
    }
  };
  for (Vertex v : g.vertices()) {
    path = {v};
    dfs(v);
  }
  return static_cast<int>(found.size());
}

}  // namespace

TEST_CASE("elementary wall sizes") {
  ElementaryWall w1 = elementary_wall(1);
  CHECK(w1.graph.vertex_count() == 1);
  CHECK(w1.graph.edge_count() == 0);

  ElementaryWall w2 = elementary_wall(2);
  CHECK(w2.graph.vertex_count() == 4);
  CHECK(w2.graph.edge_count() == 3);

  ElementaryWall w3 = elementary_wall(3);
  CHECK(w3.graph.vertex_count() == 9);
  CHECK(w3.graph.edge_count() == 9);

  // |E| = r(r-1) + rung count, cross-checked by direct parity enumeration
  for (int r = 1; r <= 12; ++r) {
    ElementaryWall w = elementary_wall(r);
    int rungs = 0;
    for (int i = 1; i < r; ++i)
      for (int j = 1; j <= r; ++j)
        if ((i % 2 == 1 && j % 2 == 1) || (i % 2 == 0 && j % 2 == 0)) ++rungs;
    CHECK(static_cast<int>(w.graph.vertex_count()) == r * r);
    CHECK(static_cast<int>(w.graph.edge_count()) == r * (r - 1) + rungs);
  }
}

TEST_CASE("wall features: rows, columns, bricks, boundary") {
  ElementaryWall w3 = elementary_wall(3);
  WallFeatures f3 = wall_features(w3);
  CHECK(f3.rows.size() == 3);
  CHECK(f3.bricks.size() == 1);
  CHECK(count_hexagons(w3.graph) == 1);
  CHECK(f3.boundary_cycle.size() == 6);
  CHECK(normalized(f3.boundary_cycle) == normalized(f3.bricks[0]));

  ElementaryWall w4 = elementary_wall(4);
  WallFeatures f4 = wall_features(w4);
  CHECK(f4.bricks.size() == 3);
  // brick count equals the number of finite faces of the plane embedding
  EmbeddedGraph e4 = wall_plane_embedding(w4);
  CHECK(static_cast<int>(trace_faces(e4).faces.size()) - 1 == 3);
  CHECK(euler_genus(e4) == 0);

  ElementaryWall w1 = elementary_wall(1);
  WallFeatures f1 = wall_features(w1);
  CHECK(f1.bricks.empty());
  CHECK(f1.boundary_cycle.empty());

  // columns are paths covering their column pairs
  for (int r = 2; r <= 7; ++r) {
    ElementaryWall w = elementary_wall(r);
    WallFeatures f = wall_features(w);
    CHECK(f.columns.size() == static_cast<std::size_t>(r / 2));
    for (const auto& col : f.columns) {
      CHECK(col.size() == static_cast<std::size_t>(2 * r));
      for (std::size_t i = 0; i + 1 < col.size(); ++i)
        CHECK(w.graph.adjacent(col[i], col[i + 1]));
    }
  }
}

TEST_CASE("brick count equals finite plane faces for larger walls") {
  for (int r = 3; r <= 8; ++r) {
    ElementaryWall w = elementary_wall(r);
    WallFeatures f = wall_features(w);
    EmbeddedGraph e = wall_plane_embedding(w);
    CHECK(static_cast<int>(f.bricks.size()) ==
          static_cast<int>(trace_faces(e).faces.size()) - 1);
    CHECK(static_cast<int>(f.bricks.size()) == count_hexagons(w.graph));
  }
}

TEST_CASE("wall certificate verification") {
  ElementaryWall w = elementary_wall(3);
  WallCertificate id = identity_certificate(w);
  CHECK(verify_wall_certificate(w.graph, 3, id));

  // subdivide one edge of the host and re-route the certificate through it
  MultiGraph host = w.graph;
  const Edge e0 = host.edges().front();
  host.remove_edge(e0.id);
  Vertex mid = 100;
  host.add_vertex(mid);
  host.add_edge(e0.u, mid);
  host.add_edge(mid, e0.v);
  WallCertificate sub = id;
  sub.path_map[e0.id] = {e0.u, mid, e0.v};
  CHECK(verify_wall_certificate(host, 3, sub));

  WallCertificate broken = id;
  broken.branch_map[w.at(1, 1)] = broken.branch_map.at(w.at(1, 2));
  CHECK_FALSE(verify_wall_certificate(w.graph, 3, broken));
}

TEST_CASE("flatness of plane walls follows the literal degree-3 reading") {
  // H - C (boundary-cycle vertices deleted) first has a degree-3 vertex at
  // r = 7: smaller walls are never flat under the letter of the definition
  for (int r : {3, 4, 5, 6, 7, 8}) {
    ElementaryWall w = elementary_wall(r);
    EmbeddedGraph e = wall_plane_embedding(w);
    WallCertificate id = identity_certificate(w);
    CHECK(is_flat(e, id) == (r >= 7));
  }
}

TEST_CASE("is_flat rejects a certificate image missing from the host") {
  ElementaryWall w = elementary_wall(3);
  EmbeddedGraph e = wall_plane_embedding(w);
  WallCertificate wrong = identity_certificate(w);
  wrong.branch_map[w.at(1, 1)] = 500;
  CHECK_THROWS(is_flat(e, wrong));
}

TEST_CASE("find_flat_subwall in a plane wall") {
  ElementaryWall w = elementary_wall(9);
  EmbeddedGraph e = wall_plane_embedding(w);
  WallCertificate id = identity_certificate(w);
  auto sub = find_flat_subwall(e, id, 7);
  REQUIRE(sub.has_value());
  // row-major first hit: the top-left aligned 7-subwall
  CHECK(sub->branch_map.at(elementary_wall(7).at(1, 1)) == w.at(1, 1));
  CHECK(is_flat(e, *sub));
  CHECK(verify_wall_certificate(e.graph(), 7, *sub));

  CHECK_FALSE(find_flat_subwall(e, id, 10).has_value());
}

TEST_CASE("flat subwall search with a handle on the host") {
  // raise the host genus with a small handle in the outer face; a planar
  // patch still yields a flat subwall
  ElementaryWall w = elementary_wall(9);
  EmbeddedGraph e = wall_plane_embedding(w);
  Vertex corner = w.at(9, 9);
  int d = static_cast<int>(e.rotation(corner).size());
  int l1 = e.insert_edge_at(corner, d - 1, corner, d - 1);
  int l2 = e.insert_edge_at(corner, e.end_position({l1, 0}),
                            corner, e.end_position({l1, 1}));
  (void)l2;
  CHECK(euler_genus(e) == 2);
  WallCertificate id = identity_certificate(w);
  auto sub = find_flat_subwall(e, id, 7);
  REQUIRE(sub.has_value());
  CHECK(is_flat(e, *sub));
}

TEST_CASE("subwall_with_enclosure returns disjoint nested rings") {
  ElementaryWall w = elementary_wall(11);
  EmbeddedGraph e = wall_plane_embedding(w);
  WallCertificate id = identity_certificate(w);
  SubwallWithRings s = subwall_with_enclosure(e, id, 3, 2);
  CHECK(verify_wall_certificate(e.graph(), 3, s.subwall));
  CHECK(s.rings.size() == 2);
  VertexSet sub_image = s.subwall.image_vertices();
  CHECK(verify_concentric_enclosure(e, s.rings, sub_image));

  SubwallWithRings plain = subwall_with_enclosure(e, id, 3, 0);
  CHECK(plain.rings.size() == 0);

  // insufficient wall size is rejected with the required minimum
  CHECK_THROWS(subwall_with_enclosure(e, id, 6, 2));
}
