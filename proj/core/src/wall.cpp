#include "gms/wall.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gms {

ElementaryWall elementary_wall(int r) {
  if (r < 1) throw std::invalid_argument("wall size must be positive");
  ElementaryWall w;
  w.r = r;
  for (int v = 0; v < r * r; ++v) w.graph.add_vertex(v);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < r; ++j) w.graph.add_edge(w.at(i, j), w.at(i, j + 1));
  for (int i = 1; i < r; ++i)
    for (int j = 1; j <= r; ++j)
      if ((i + j) % 2 == 0) w.graph.add_edge(w.at(i, j), w.at(i + 1, j));
  return w;
}

namespace {

// rotations in counterclockwise drawing order for straight-line coords
EmbeddedGraph embed_by_coords(
    const MultiGraph& g, const std::map<Vertex, std::pair<double, double>>& xy) {
  std::map<Vertex, std::vector<EdgeEnd>> rot;
  for (Vertex v : g.vertices()) {
    std::vector<std::pair<double, EdgeEnd>> dirs;
    for (int id : g.incident_edges(v)) {
      const Edge& e = g.edge_by_id(id);
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

// iteratively strip degree <= 1 vertices
MultiGraph two_core(const MultiGraph& g) {
  MultiGraph h = g;
  for (;;) {
    Vertex strip = -1;
    for (Vertex v : h.vertices()) {
      int deg = 0;
      for (int id : h.incident_edges(v))
        deg += h.edge_by_id(id).is_loop() ? 2 : 1;
      if (deg <= 1) {
        strip = v;
        break;
      }
    }
    if (strip < 0) return h;
    h.remove_vertex(strip);
  }
}

}  // namespace

EmbeddedGraph wall_plane_embedding(const ElementaryWall& w) {
  std::map<Vertex, std::pair<double, double>> xy;
  for (Vertex v : w.graph.vertices()) {
    auto [i, j] = w.coords(v);
    xy[v] = {double(j), double(-i)};
  }
  return embed_by_coords(w.graph, xy);
}

WallFeatures wall_features(const ElementaryWall& w) {
  int r = w.r;
  WallFeatures f;
  for (int i = 1; i <= r; ++i) {
    std::vector<Vertex> row;
    for (int j = 1; j <= r; ++j) row.push_back(w.at(i, j));
    f.rows.push_back(std::move(row));
  }
  // zigzag columns: the induced path on each column pair (2c-1, 2c)
  for (int j = 1; j + 1 <= r; j += 2) {
    VertexSet pair;
    for (int i = 1; i <= r; ++i) {
      pair.push_back(w.at(i, j));
      pair.push_back(w.at(i, j + 1));
    }
    MultiGraph ind = w.graph.induced(normalized(pair));
    Vertex start = -1;
    for (Vertex v : ind.vertices())
      if (ind.neighbors(v).size() == 1 && (start < 0 || v < start)) start = v;
    std::vector<Vertex> col{start};
    Vertex prev = -1, cur = start;
    while (true) {
      Vertex next = -1;
      for (Vertex nb : ind.neighbors(cur))
        if (nb != prev) next = nb;
      if (next < 0) break;
      col.push_back(next);
      prev = cur;
      cur = next;
    }
    f.columns.push_back(std::move(col));
  }
  for (int i = 1; i < r; ++i) {
    int j0 = (i % 2 == 1) ? 1 : 2;
    for (int j = j0; j + 2 <= r; j += 2) {
      f.bricks.push_back({w.at(i, j), w.at(i, j + 1), w.at(i, j + 2),
                          w.at(i + 1, j + 2), w.at(i + 1, j + 1),
                          w.at(i + 1, j)});
    }
  }
  if (r >= 3) {
    MultiGraph core = two_core(w.graph);
    std::map<Vertex, std::pair<double, double>> xy;
    for (Vertex v : core.vertices()) {
      auto [i, j] = w.coords(v);
      xy[v] = {double(j), double(-i)};
    }
    EmbeddedGraph emb = embed_by_coords(core, xy);
    FaceTrace tr = trace_faces(emb);
    int best = -1;
    for (const Face& fc : tr.faces)
      if (best < 0 || fc.degree() > tr.faces[best].degree()) best = fc.id;
    f.boundary_cycle = tr.faces[best].walk;
  }
  return f;
}

VertexSet WallCertificate::image_vertices() const {
  std::vector<Vertex> out;
  for (const auto& [wv, hv] : branch_map) out.push_back(hv);
  for (const auto& [eid, path] : path_map)
    out.insert(out.end(), path.begin(), path.end());
  return normalized(std::move(out));
}

WallCertificate identity_certificate(const ElementaryWall& w) {
  WallCertificate c;
  c.r = w.r;
  for (Vertex v : w.graph.vertices()) c.branch_map[v] = v;
  for (const Edge& e : w.graph.edges()) c.path_map[e.id] = {e.u, e.v};
  return c;
}

bool verify_wall_certificate(const MultiGraph& host, int r,
                             const WallCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (cert.r != r) return fail("certificate size mismatch");
  ElementaryWall w = elementary_wall(r);
  std::set<Vertex> branch_images;
  for (Vertex v : w.graph.vertices()) {
    auto it = cert.branch_map.find(v);
    if (it == cert.branch_map.end()) return fail("missing branch vertex");
    if (!host.has_vertex(it->second)) return fail("branch image not in host");
    if (!branch_images.insert(it->second).second)
      return fail("branch images not distinct");
  }
  std::map<Vertex, int> internal_use;
  for (const Edge& e : w.graph.edges()) {
    auto it = cert.path_map.find(e.id);
    if (it == cert.path_map.end()) return fail("missing path for a wall edge");
    const auto& p = it->second;
    if (p.size() < 2) return fail("degenerate subdivision path");
    Vertex iu = cert.branch_map.at(e.u), iv = cert.branch_map.at(e.v);
    bool fwd = p.front() == iu && p.back() == iv;
    bool bwd = p.front() == iv && p.back() == iu;
    if (!fwd && !bwd) return fail("path endpoints disagree with branch map");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!host.adjacent(p[i], p[i + 1]))
        return fail("subdivision path not a host walk");
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (branch_images.count(p[i]))
        return fail("path passes through a branch vertex");
      if (++internal_use[p[i]] > 1) return fail("paths not internally disjoint");
    }
    VertexSet distinct = normalized(p);
    if (distinct.size() != p.size()) return fail("path repeats a vertex");
  }
  return true;
}

std::vector<Vertex> map_walk_through_certificate(
    const ElementaryWall& w, const WallCertificate& cert,
    const std::vector<Vertex>& wall_walk, bool closed) {
  std::vector<Vertex> out;
  int n = static_cast<int>(wall_walk.size());
  int segments = closed ? n : n - 1;
  for (int i = 0; i < segments; ++i) {
    Vertex a = wall_walk[i], b = wall_walk[(i + 1) % n];
    int eid = -1;
    for (const Edge& e : w.graph.edges())
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) eid = e.id;
    if (eid < 0) throw std::invalid_argument("walk not along wall edges");
    std::vector<Vertex> p = cert.path_map.at(eid);
    if (p.front() != cert.branch_map.at(a))
      std::reverse(p.begin(), p.end());
    for (std::size_t t = 0; t + 1 < p.size(); ++t) out.push_back(p[t]);
  }
  if (!closed) out.push_back(cert.branch_map.at(wall_walk.back()));
  return out;
}

WallFeatures wall_features_host(const ElementaryWall& w,
                                const WallCertificate& cert) {
  WallFeatures base = wall_features(w);
  WallFeatures out;
  for (const auto& row : base.rows)
    out.rows.push_back(map_walk_through_certificate(w, cert, row, false));
  for (const auto& col : base.columns)
    out.columns.push_back(map_walk_through_certificate(w, cert, col, false));
  for (const auto& brick : base.bricks)
    out.bricks.push_back(map_walk_through_certificate(w, cert, brick, true));
  if (!base.boundary_cycle.empty())
    out.boundary_cycle =
        map_walk_through_certificate(w, cert, base.boundary_cycle, true);
  return out;
}

bool is_flat(const EmbeddedGraph& e, const WallCertificate& cert) {
  std::string why;
  if (!verify_wall_certificate(e.graph(), cert.r, cert, &why))
    throw std::invalid_argument("is_flat: invalid certificate: " + why);
  ElementaryWall w = elementary_wall(cert.r);
  WallFeatures base = wall_features(w);
  if (base.boundary_cycle.empty()) return false;
  std::vector<Vertex> host_cycle =
      map_walk_through_certificate(w, cert, base.boundary_cycle, true);
  VertexSet bd = normalized(base.boundary_cycle);
  EmbeddedCycle c = EmbeddedCycle::from_vertices(e.graph(), host_cycle);
  for (Vertex b : w.graph.vertices()) {
    if (contains(bd, b)) continue;
    VertexSet nbrs = w.graph.neighbors(b);
    if (nbrs.size() != 3) continue;
    if (!set_intersection(nbrs, bd).empty()) continue;
    if (cycle_bounds_disc(e, c, {cert.branch_map.at(b)})) return true;
  }
  return false;
}

WallCertificate subwall_certificate(const ElementaryWall& w,
                                    const WallCertificate& cert, int k,
                                    int i0, int j0) {
  if ((i0 + j0) % 2 != 0)
    throw std::invalid_argument("subwall offsets must have equal parity");
  if (i0 < 1 || j0 < 1 || i0 + k - 1 > w.r || j0 + k - 1 > w.r)
    throw std::invalid_argument("subwall window out of range");
  ElementaryWall sub = elementary_wall(k);
  WallCertificate out;
  out.r = k;
  auto lift = [&](Vertex sv) {
    auto [i, j] = sub.coords(sv);
    return w.at(i + i0 - 1, j + j0 - 1);
  };
  for (Vertex sv : sub.graph.vertices())
    out.branch_map[sv] = cert.branch_map.at(lift(sv));
  for (const Edge& se : sub.graph.edges()) {
    Vertex a = lift(se.u), b = lift(se.v);
    int eid = -1;
    for (const Edge& we : w.graph.edges())
      if ((we.u == a && we.v == b) || (we.u == b && we.v == a)) eid = we.id;
    if (eid < 0) throw std::logic_error("subwall edge missing in wall");
    std::vector<Vertex> p = cert.path_map.at(eid);
    if (p.front() != cert.branch_map.at(a)) std::reverse(p.begin(), p.end());
    out.path_map[se.id] = p;
  }
  return out;
}

std::optional<WallCertificate> find_flat_subwall(const EmbeddedGraph& e,
                                                 const WallCertificate& cert,
                                                 int k) {
  if (k > cert.r || k < 1) return std::nullopt;
  ElementaryWall w = elementary_wall(cert.r);
  ElementaryWall sub = elementary_wall(k);
  WallFeatures sub_features = wall_features(sub);
  for (int i0 = 1; i0 + k - 1 <= cert.r; i0 += 2)
    for (int j0 = 1; j0 + k - 1 <= cert.r; j0 += 2) {
      WallCertificate cand = subwall_certificate(w, cert, k, i0, j0);
      bool ok = true;
      for (const auto& brick : sub_features.bricks) {
        std::vector<Vertex> host_brick =
            map_walk_through_certificate(sub, cand, brick, true);
        EmbeddedCycle c = EmbeddedCycle::from_vertices(e.graph(), host_brick);
        if (!cycle_bounds_disc(e, c, {})) {
          ok = false;
          break;
        }
      }
      if (ok && is_flat(e, cand)) return cand;
    }
  return std::nullopt;
}

SubwallWithRings subwall_with_enclosure(const EmbeddedGraph& e,
                                        const WallCertificate& cert, int k,
                                        int m) {
  // each nested ring costs one rung per side per row gap, i.e. about two
  // columns per layer, so 4m extra rows/columns are needed
  if (cert.r < k + 4 * m)
    throw std::invalid_argument("subwall_with_enclosure: wall of size >= " +
                                std::to_string(k + 4 * m) + " required");
  ElementaryWall w = elementary_wall(cert.r);
  int a = (cert.r - k) / 2 + 1;  // offsets (a, a) share parity
  SubwallWithRings out;
  out.subwall = subwall_certificate(w, cert, k, a, a);
  if (m == 0) return out;

  VertexSet sub_image = out.subwall.image_vertices();
  ConcentricSearch grow = concentric_cycles_around(e, sub_image, m);
  if (static_cast<int>(grow.family.size()) < m)
    throw std::invalid_argument(
        "subwall_with_enclosure: not enough disjoint rings in the host");
  out.rings = grow.family;
  std::string why;
  if (!verify_concentric_enclosure(e, out.rings, sub_image, &why))
    throw std::logic_error("subwall_with_enclosure: rings invalid: " + why);
  return out;
}

}  // namespace gms
