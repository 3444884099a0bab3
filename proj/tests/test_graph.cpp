#include "gms/graph.hpp"

#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gms;

namespace {

MultiGraph triangle() {
  MultiGraph g;
  g.add_vertices({0, 1, 2});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

MultiGraph path3() {  // a-b-c as 0-1-2
  MultiGraph g;
  g.add_vertices({0, 1, 2});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

MultiGraph complete(int n) {
  MultiGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

MultiGraph grid(int rows, int cols) {
  MultiGraph g;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) g.add_vertex(id(r, c));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

}  // namespace

TEST_CASE("separation verification") {
  // path a-b-c: the ac edge is absent, so {a,b},{b,c} covers everything
  MultiGraph g = path3();
  CHECK(verify_separation(g, {{0, 1}, {1, 2}}));
  CHECK_FALSE(verify_separation(g, {{0}, {1, 2}}));  // edge 01 uncovered
  CHECK_FALSE(verify_separation(g, {{}, {0, 1, 2}}));
  // on the full triangle the same split leaves edge ac crossing
  CHECK_FALSE(verify_separation(triangle(), {{0, 1}, {1, 2}}));
}

TEST_CASE("separation must cover all vertices") {
  MultiGraph g = path3();
  CHECK_FALSE(verify_separation(g, {{0}, {1}}));
  CHECK(verify_separation(g, {{0, 1}, {1, 2}}));
  // loops never cross a separation
  g.add_edge(1, 1);
  CHECK(verify_separation(g, {{0, 1}, {1, 2}}));
}

TEST_CASE("disjoint paths on a path graph") {
  MultiGraph g = path3();
  auto r = disjoint_paths(g, {0}, {2});
  CHECK(r.linkage.size() == 1);
  CHECK(r.separator.size() == 1);
  CHECK(verify_linkage(g, r.linkage));
}

TEST_CASE("disjoint paths in K4") {
  MultiGraph g = complete(4);
  auto r = disjoint_paths(g, {0, 1}, {2, 3});
  CHECK(r.linkage.size() == 2);
  CHECK(r.separator.size() == 2);
  CHECK(oracle::max_disjoint_paths_brute(g, {0, 1}, {2, 3}) == 2);
}

TEST_CASE("disjoint paths degenerate x equals y") {
  MultiGraph g = path3();
  auto r = disjoint_paths(g, {0}, {0});
  CHECK(r.linkage.size() == 1);
  CHECK(r.linkage.paths[0] == std::vector<Vertex>{0});
  CHECK(r.separator == VertexSet{0});
}

TEST_CASE("Menger equivalence on random multigraphs") {
  gen::Rng rng(20240811);
  for (int iter = 0; iter < 120; ++iter) {
    MultiGraph g = gen::random_multigraph(rng, 8);
    VertexSet x = gen::random_subset(rng, g.vertices());
    VertexSet y = gen::random_subset(rng, g.vertices());
    auto r = disjoint_paths(g, x, y);
    int brute = oracle::max_disjoint_paths_brute(g, x, y);
    REQUIRE(static_cast<int>(r.linkage.size()) == brute);
    REQUIRE(static_cast<int>(r.separator.size()) == brute);
    REQUIRE(verify_linkage(g, r.linkage));
    // separator actually separates: removing it kills all x-y paths
    MultiGraph h = g.without_vertices(r.separator);
    VertexSet xr = set_difference(x, r.separator);
    VertexSet yr = set_difference(y, r.separator);
    CHECK(oracle::max_disjoint_paths_brute(h, xr, yr) == 0);
  }
}

TEST_CASE("leftmost separator on a path") {
  MultiGraph g = path3();
  Separation s = leftmost_min_separator(g, {0}, {2}, 1);
  CHECK(s.side_a == VertexSet{0, 1});
  CHECK(s.side_b == VertexSet{1, 2});
}

TEST_CASE("leftmost separator degenerate") {
  MultiGraph g = path3();
  Separation s = leftmost_min_separator(g, {0}, {0}, 0);
  CHECK(s.separator() == VertexSet{0});
  CHECK(contains(s.side_a, 0));
  CHECK(contains(s.side_b, 0));
}

TEST_CASE("leftmost separator on the 2x3 grid matches exhaustive search") {
  // vertices 0..5, rows 0-1-2 / 3-4-5; x = left column, y = right column
  MultiGraph g = grid(2, 3);
  VertexSet x{0, 3}, y{2, 5};
  Vertex forced = 1;
  Separation got = leftmost_min_separator(g, x, y, forced);

  auto seps = oracle::all_separations(g, 6);
  bool better = false;
  for (const auto& s : seps) {
    if (!is_subset(x, s.side_a) || !is_subset(y, s.side_b)) continue;
    if (!contains(s.separator(), forced)) continue;
    auto key = std::make_pair(s.order(), static_cast<int>(s.side_b.size()));
    auto got_key =
        std::make_pair(got.order(), static_cast<int>(got.side_b.size()));
    if (key < got_key) better = true;
  }
  CHECK_FALSE(better);
  CHECK(got.order() == 2);
  CHECK(contains(got.separator(), forced));
  CHECK(verify_separation(g, got));
}

TEST_CASE("leftmost separator minimality on random graphs") {
  gen::Rng rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    MultiGraph g = gen::random_multigraph(rng, 7, 1.6, false);
    VertexSet x = gen::random_subset(rng, g.vertices());
    VertexSet y = gen::random_subset(rng, g.vertices());
    Vertex forced =
        g.vertices()[gen::uniform(rng, 0, (int)g.vertex_count() - 1)];
    Separation got = leftmost_min_separator(g, x, y, forced);
    REQUIRE(verify_separation(g, got));
    REQUIRE(is_subset(x, got.side_a));
    REQUIRE(is_subset(y, got.side_b));
    REQUIRE(contains(got.separator(), forced));
    for (const auto& s : oracle::all_separations(g, (int)g.vertex_count())) {
      if (!is_subset(x, s.side_a) || !is_subset(y, s.side_b)) continue;
      if (!contains(s.separator(), forced)) continue;
      auto key = std::make_pair(s.order(), (int)s.side_b.size());
      auto got_key = std::make_pair(got.order(), (int)got.side_b.size());
      REQUIRE(got_key <= key);
    }
  }
}

TEST_CASE("path decomposition widths and violations") {
  MultiGraph g = path3();
  PathDecomposition single{{{0, 1, 2}}};
  auto c = verify_path_decomposition(g, single);
  CHECK(c.valid);
  CHECK(c.width == 2);

  PathDecomposition two{{{0, 1}, {1, 2}}};
  c = verify_path_decomposition(g, two);
  CHECK(c.valid);
  CHECK(c.width == 1);

  PathDecomposition broken{{{0}, {2}, {1}}};
  c = verify_path_decomposition(g, broken);
  CHECK_FALSE(c.valid);
  CHECK_FALSE(c.violation.empty());
}

TEST_CASE("path decomposition checker agrees with brute axioms") {
  gen::Rng rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    MultiGraph g = gen::random_multigraph(rng, 6);
    PathDecomposition d;
    int bags = gen::uniform(rng, 1, 4);
    for (int i = 0; i < bags; ++i)
      d.bags.push_back(gen::random_subset(rng, g.vertices(), false));
    CHECK(verify_path_decomposition(g, d).valid ==
          oracle::path_decomposition_valid_brute(g, d));
  }
}

TEST_CASE("torso adds overlap cliques") {
  // path 0-1-2, star decomposition: center {1}, leaves {0,1} and {1,2}
  MultiGraph g = path3();
  TreeDecomposition d;
  d.bags = {{1}, {0, 1}, {1, 2}};
  d.tree = {{0, 1}, {0, 2}};
  MultiGraph center = torso(g, d, 0);
  CHECK(center.vertex_count() == 1);
  CHECK(center.edge_count() == 0);

  MultiGraph leaf = torso(g, d, 1);
  CHECK(leaf.vertices() == VertexSet{0, 1});
  CHECK(leaf.edge_count() == 1);  // the original edge, single-vertex overlap

  // two bags overlapping in one vertex add no clique edge
  TreeDecomposition d2;
  d2.bags = {{0, 1, 2}, {2, 3, 4}};
  d2.tree = {{0, 1}};
  MultiGraph g2;
  g2.add_vertices({0, 1, 2, 3, 4});
  g2.add_edge(0, 1);
  g2.add_edge(2, 3);
  MultiGraph t0 = torso(g2, d2, 0);
  CHECK(t0.edge_count() == 1);
}

TEST_CASE("torso overlap induces a clique") {
  gen::Rng rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    MultiGraph g = gen::random_connected_graph(rng, gen::uniform(rng, 2, 8));
    TreeDecomposition d = gen::elimination_tree_decomposition(rng, g);
    REQUIRE(verify_tree_decomposition(g, d).valid);
    for (int node = 0; node < static_cast<int>(d.bags.size()); ++node) {
      MultiGraph t = torso(g, d, node);
      MultiGraph ind = g.induced(d.bags[node]);
      for (const Edge& e : ind.edges()) CHECK(t.has_edge_id(e.id));
      for (auto [a, b] : d.tree) {
        int nb = a == node ? b : (b == node ? a : -1);
        if (nb < 0) continue;
        VertexSet ov = set_intersection(d.bags[node], d.bags[nb]);
        for (std::size_t i = 0; i < ov.size(); ++i)
          for (std::size_t j = i + 1; j < ov.size(); ++j)
            CHECK(t.adjacent(ov[i], ov[j]));
      }
    }
  }
}

TEST_CASE("combine_decompositions basics") {
  MultiGraph g;  // path 0-1-2-3
  g.add_vertices({0, 1, 2, 3});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);

  TreeDecomposition outer;
  outer.bags = {{0, 1, 2}, {2, 3}};
  outer.tree = {{0, 1}};

  // width-1 decompositions of both torsos
  TreeDecomposition inner0;
  inner0.bags = {{0, 1}, {1, 2}};
  inner0.tree = {{0, 1}};
  TreeDecomposition inner1;
  inner1.bags = {{2, 3}};

  TreeDecomposition combined =
      combine_decompositions(g, outer, {inner0, inner1});
  auto c = verify_tree_decomposition(g, combined);
  CHECK(c.valid);
  CHECK(c.width == 1);
}

TEST_CASE("combine_decompositions single outer node returns inner") {
  MultiGraph g = triangle();
  TreeDecomposition outer;
  outer.bags = {{0, 1, 2}};
  TreeDecomposition inner;
  inner.bags = {{0, 1, 2}};
  TreeDecomposition combined = combine_decompositions(g, outer, {inner});
  CHECK(combined.bags == inner.bags);
}

TEST_CASE("combined width never exceeds max inner width") {
  gen::Rng rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    MultiGraph g = gen::random_connected_graph(rng, gen::uniform(rng, 2, 10));
    TreeDecomposition outer = gen::elimination_tree_decomposition(rng, g);
    REQUIRE(verify_tree_decomposition(g, outer).valid);
    std::vector<TreeDecomposition> inner;
    int max_inner_width = -1;
    for (int node = 0; node < static_cast<int>(outer.bags.size()); ++node) {
      MultiGraph t = torso(g, outer, node);
      TreeDecomposition td = gen::elimination_tree_decomposition(rng, t);
      auto c = verify_tree_decomposition(t, td);
      REQUIRE(c.valid);
      max_inner_width = std::max(max_inner_width, c.width);
      inner.push_back(std::move(td));
    }
    TreeDecomposition combined = combine_decompositions(g, outer, inner);
    auto c = verify_tree_decomposition(g, combined);
    REQUIRE(c.valid);
    CHECK(c.width <= max_inner_width);
  }
}
