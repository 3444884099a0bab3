#pragma once

// Embedded-graph fixtures: coordinate-driven planar rotations, grids,
// cylinders, tori, and random rotation systems.

#include <cmath>
#include <map>
#include <random>

#include "gms/graph.hpp"
#include "gms/surface.hpp"
#include "support/generators.hpp"

namespace gms::gen {

using Coords = std::map<Vertex, std::pair<double, double>>;

// Planar embedding of a simple straight-line-drawable graph: rotations are
// the counterclockwise angular orders.
inline EmbeddedGraph planar_from_coords(const MultiGraph& g,
                                        const Coords& xy) {
  std::map<Vertex, std::vector<EdgeEnd>> rot;
  for (Vertex v : g.vertices()) {
    std::vector<std::pair<double, EdgeEnd>> dirs;
    for (int id : g.incident_edges(v)) {
      const Edge& e = g.edge_by_id(id);
      if (e.is_loop()) throw std::invalid_argument("loops unsupported here");
      Vertex w = e.other(v);
      double ang = std::atan2(xy.at(w).second - xy.at(v).second,
                              xy.at(w).first - xy.at(v).first);
      dirs.push_back({ang, EdgeEnd{id, e.u == v ? 0 : 1}});
    }
    std::sort(dirs.begin(), dirs.end());
    std::vector<EdgeEnd> r;
    for (auto& [ang, end] : dirs) r.push_back(end);
    rot[v] = std::move(r);
  }
  return EmbeddedGraph(g, std::move(rot), {});
}

struct GridFixture {
  MultiGraph graph;
  Coords coords;
  int rows, cols;

  Vertex at(int r, int c) const { return r * cols + c; }
};

inline GridFixture square_grid(int rows, int cols) {
  GridFixture f;
  f.rows = rows;
  f.cols = cols;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      f.graph.add_vertex(f.at(r, c));
      f.coords[f.at(r, c)] = {double(c), double(r)};
    }
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) f.graph.add_edge(f.at(r, c), f.at(r, c + 1));
      if (r + 1 < rows) f.graph.add_edge(f.at(r, c), f.at(r + 1, c));
    }
  return f;
}

inline EmbeddedGraph grid_embedding(int rows, int cols) {
  GridFixture f = square_grid(rows, cols);
  return planar_from_coords(f.graph, f.coords);
}

// Concentric-ring cylinder: `rings` circles of `width` vertices, spokes
// between consecutive rings. Ring 0 is outermost.
struct CylinderFixture {
  MultiGraph graph;
  Coords coords;
  int rings, width;

  Vertex at(int ring, int j) const { return ring * width + j; }
  std::vector<Vertex> ring_cycle(int ring) const {
    std::vector<Vertex> c;
    for (int j = 0; j < width; ++j) c.push_back(at(ring, j));
    return c;
  }
};

inline CylinderFixture cylinder(int rings, int width) {
  CylinderFixture f;
  f.rings = rings;
  f.width = width;
  for (int r = 0; r < rings; ++r)
    for (int j = 0; j < width; ++j) {
      f.graph.add_vertex(f.at(r, j));
      double rad = rings - r + 1.0;
      double ang = 2.0 * M_PI * j / width;
      f.coords[f.at(r, j)] = {rad * std::cos(ang), rad * std::sin(ang)};
    }
  for (int r = 0; r < rings; ++r)
    for (int j = 0; j < width; ++j) {
      f.graph.add_edge(f.at(r, j), f.at(r, (j + 1) % width));
      if (r + 1 < rings) f.graph.add_edge(f.at(r, j), f.at(r + 1, j));
    }
  return f;
}

inline EmbeddedGraph cylinder_embedding(const CylinderFixture& f) {
  return planar_from_coords(f.graph, f.coords);
}

// Toroidal wrap of an n x n grid: rotations N,E,S,W at every vertex.
inline EmbeddedGraph torus_grid(int n) {
  MultiGraph g;
  auto at = [n](int r, int c) {
    return ((r + n) % n) * n + ((c + n) % n);
  };
  for (int v = 0; v < n * n; ++v) g.add_vertex(v);
  std::map<std::pair<Vertex, Vertex>, int> edge_id;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int id1 = g.add_edge(at(r, c), at(r, c + 1));
      edge_id[{at(r, c), at(r, c + 1)}] = id1;
      int id2 = g.add_edge(at(r, c), at(r + 1, c));
      edge_id[{at(r, c), at(r + 1, c)}] = id2;
    }
  auto end_toward = [&](Vertex from, Vertex to, bool horizontal) -> EdgeEnd {
    auto it = edge_id.find({from, to});
    if (it != edge_id.end()) return {it->second, 0};
    return {edge_id.at({to, from}), 1};
    (void)horizontal;
  };
  std::map<Vertex, std::vector<EdgeEnd>> rot;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Vertex v = at(r, c);
      rot[v] = {end_toward(v, at(r - 1, c), false),
                end_toward(v, at(r, c + 1), true),
                end_toward(v, at(r + 1, c), false),
                end_toward(v, at(r, c - 1), true)};
    }
  return EmbeddedGraph(std::move(g), std::move(rot), {});
}

inline EmbeddedGraph random_embedding(Rng& rng, int max_vertices,
                                      int max_edges, bool random_signs) {
  MultiGraph g;
  int n = uniform(rng, 1, max_vertices);
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  int m = uniform(rng, 0, max_edges);
  for (int i = 0; i < m; ++i) g.add_edge(uniform(rng, 0, n - 1),
                                         uniform(rng, 0, n - 1));
  std::map<Vertex, std::vector<EdgeEnd>> rot;
  for (Vertex v : g.vertices()) rot[v] = {};
  for (const Edge& e : g.edges()) {
    rot[e.u].push_back({e.id, 0});
    rot[e.v].push_back({e.id, 1});
  }
  for (Vertex v : g.vertices())
    std::shuffle(rot[v].begin(), rot[v].end(), rng);
  std::map<int, int> sg;
  for (const Edge& e : g.edges())
    sg[e.id] = random_signs && uniform(rng, 0, 3) == 0 ? -1 : 1;
  return EmbeddedGraph(std::move(g), std::move(rot), std::move(sg));
}

}  // namespace gms::gen
