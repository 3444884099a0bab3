#include "gms/surface.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace gms {

EmbeddedGraph::EmbeddedGraph(MultiGraph g,
                             std::map<Vertex, std::vector<EdgeEnd>> rotation,
                             std::map<int, int> sign)
    : graph_(std::move(g)), rotation_(std::move(rotation)),
      sign_(std::move(sign)) {
  for (Vertex v : graph_.vertices())
    if (!rotation_.count(v)) rotation_[v] = {};
  for (const Edge& e : graph_.edges())
    if (!sign_.count(e.id)) sign_[e.id] = 1;
  validate();
}

const std::vector<EdgeEnd>& EmbeddedGraph::rotation(Vertex v) const {
  auto it = rotation_.find(v);
  if (it == rotation_.end())
    throw std::invalid_argument("rotation: unknown vertex");
  return it->second;
}

int EmbeddedGraph::sign(int edge_id) const {
  auto it = sign_.find(edge_id);
  if (it == sign_.end()) throw std::invalid_argument("sign: unknown edge");
  return it->second;
}

Vertex EmbeddedGraph::end_vertex(const EdgeEnd& h) const {
  const Edge& e = graph_.edge_by_id(h.edge);
  return h.end == 0 ? e.u : e.v;
}

EdgeEnd EmbeddedGraph::other_end(const EdgeEnd& h) const {
  return {h.edge, 1 - h.end};
}

int EmbeddedGraph::end_position(const EdgeEnd& h) const {
  const auto& rot = rotation(end_vertex(h));
  for (int i = 0; i < static_cast<int>(rot.size()); ++i)
    if (rot[i] == h) return i;
  throw std::logic_error("edge end missing from its rotation");
}

void EmbeddedGraph::validate() const {
  std::set<EdgeEnd> seen;
  for (const auto& [v, rot] : rotation_) {
    if (!graph_.has_vertex(v))
      throw std::invalid_argument("rotation lists unknown vertex");
    for (const EdgeEnd& h : rot) {
      if (h.end != 0 && h.end != 1)
        throw std::invalid_argument("malformed edge end");
      const Edge& e = graph_.edge_by_id(h.edge);
      if ((h.end == 0 ? e.u : e.v) != v)
        throw std::invalid_argument("edge end placed at the wrong vertex");
      if (!seen.insert(h).second)
        throw std::invalid_argument("edge end appears twice in rotations");
    }
  }
  for (const Edge& e : graph_.edges()) {
    if (!seen.count({e.id, 0}) || !seen.count({e.id, 1}))
      throw std::invalid_argument("edge end missing from rotations");
    if (!sign_.count(e.id) || std::abs(sign_.at(e.id)) != 1)
      throw std::invalid_argument("edge sign missing or not +-1");
  }
}

void EmbeddedGraph::flip_vertex(Vertex v) {
  auto& rot = rotation_.at(v);
  std::reverse(rot.begin(), rot.end());
  for (int id : graph_.incident_edges(v))
    if (!graph_.edge_by_id(id).is_loop()) sign_[id] = -sign_[id];
}

void EmbeddedGraph::normalize_signs() {
  std::set<Vertex> done;
  for (Vertex root : graph_.vertices()) {
    if (done.count(root)) continue;
    done.insert(root);
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (int id : graph_.incident_edges(u)) {
        const Edge& e = graph_.edge_by_id(id);
        if (e.is_loop()) continue;
        Vertex w = e.other(u);
        if (done.count(w)) continue;
        done.insert(w);
        if (sign_.at(id) < 0) flip_vertex(w);
        queue.push_back(w);
      }
    }
  }
}

void EmbeddedGraph::remove_edge(int edge_id) {
  const Edge e = graph_.edge_by_id(edge_id);
  for (Vertex v : {e.u, e.v}) {
    auto& rot = rotation_.at(v);
    rot.erase(std::remove_if(rot.begin(), rot.end(),
                             [edge_id](const EdgeEnd& h) {
                               return h.edge == edge_id;
                             }),
              rot.end());
  }
  graph_.remove_edge(edge_id);
  sign_.erase(edge_id);
}

void EmbeddedGraph::remove_vertex(Vertex v) {
  std::vector<int> ids = graph_.incident_edges(v);
  for (int id : ids) remove_edge(id);
  graph_.remove_vertex(v);
  rotation_.erase(v);
}

void EmbeddedGraph::contract_edge(int edge_id) {
  Edge e = graph_.edge_by_id(edge_id);
  if (e.is_loop()) throw std::invalid_argument("cannot contract a loop");
  if (sign_.at(edge_id) < 0) {
    flip_vertex(e.v);
    e = graph_.edge_by_id(edge_id);
  }
  Vertex u = e.u, v = e.v;
  EdgeEnd end_u{edge_id, 0}, end_v{edge_id, 1};

  const auto rot_v = rotation_.at(v);
  int pv = end_position(end_v);
  std::vector<EdgeEnd> spliced;  // v's other ends, starting after end_v
  for (std::size_t i = 1; i < rot_v.size(); ++i)
    spliced.push_back(rot_v[(pv + i) % rot_v.size()]);

  auto& rot_u = rotation_.at(u);
  int pu = end_position(end_u);
  std::vector<EdgeEnd> merged;
  for (int i = 0; i < static_cast<int>(rot_u.size()); ++i) {
    if (i == pu)
      merged.insert(merged.end(), spliced.begin(), spliced.end());
    else
      merged.push_back(rot_u[i]);
  }
  rot_u = merged;

  // re-point all of v's remaining edge ends to u
  for (const EdgeEnd& h : spliced) graph_.set_edge_endpoint(h.edge, h.end, u);
  graph_.remove_edge(edge_id);
  sign_.erase(edge_id);
  graph_.remove_vertex(v);
  rotation_.erase(v);
}

Vertex EmbeddedGraph::fresh_vertex_id() const {
  return graph_.vertices().empty() ? 0 : graph_.vertices().back() + 1;
}

void EmbeddedGraph::add_isolated_vertex(Vertex v) {
  graph_.add_vertex(v);
  rotation_[v];
}

int EmbeddedGraph::insert_edge_at(Vertex u, int gap_u, Vertex v, int gap_v) {
  int id = graph_.max_edge_id() + 1;
  graph_.add_edge_with_id(id, u, v);
  sign_[id] = 1;
  if (u == v) {
    auto& rot = rotation_.at(u);
    int g1 = gap_u, g2 = gap_v;
    EdgeEnd first{id, 0}, second{id, 1};
    if (g1 > g2) {
      std::swap(g1, g2);
      std::swap(first, second);
    }
    rot.insert(rot.begin() + (g2 + 1), second);
    rot.insert(rot.begin() + (g1 + 1), first);
  } else {
    auto& ru = rotation_.at(u);
    ru.insert(ru.begin() + (gap_u + 1), EdgeEnd{id, 0});
    auto& rv = rotation_.at(v);
    rv.insert(rv.begin() + (gap_v + 1), EdgeEnd{id, 1});
  }
  return id;
}

std::pair<Vertex, Vertex> EmbeddedGraph::split_vertex(Vertex v, int gap1,
                                                      int gap2, Vertex id_a,
                                                      Vertex id_b) {
  const auto rot = rotation_.at(v);
  int d = static_cast<int>(rot.size());
  std::vector<EdgeEnd> arc_a, arc_b;
  if (d > 0) {
    if (gap1 == gap2) {
      for (int i = 1; i <= d; ++i) arc_a.push_back(rot[(gap1 + i) % d]);
    } else {
      for (int i = (gap1 + 1) % d; ; i = (i + 1) % d) {
        arc_a.push_back(rot[i]);
        if (i == gap2) break;
      }
      for (int i = (gap2 + 1) % d; ; i = (i + 1) % d) {
        arc_b.push_back(rot[i]);
        if (i == gap1) break;
      }
    }
  }
  Vertex a = id_a >= 0 ? id_a : fresh_vertex_id();
  graph_.add_vertex(a);
  Vertex b = id_b >= 0 ? id_b : a + 1;
  graph_.add_vertex(b);
  for (const EdgeEnd& h : arc_a) graph_.set_edge_endpoint(h.edge, h.end, a);
  for (const EdgeEnd& h : arc_b) graph_.set_edge_endpoint(h.edge, h.end, b);
  rotation_[a] = arc_a;
  rotation_[b] = arc_b;
  graph_.remove_vertex(v);
  rotation_.erase(v);
  return {a, b};
}

EmbeddedGraph EmbeddedGraph::induced(const VertexSet& keep) const {
  MultiGraph g = graph_.induced(keep);
  std::map<Vertex, std::vector<EdgeEnd>> rot;
  std::map<int, int> sg;
  for (Vertex v : g.vertices()) {
    std::vector<EdgeEnd> r;
    for (const EdgeEnd& h : rotation_.at(v))
      if (g.has_edge_id(h.edge)) r.push_back(h);
    rot[v] = std::move(r);
  }
  for (const Edge& e : g.edges()) sg[e.id] = sign_.at(e.id);
  return EmbeddedGraph(std::move(g), std::move(rot), std::move(sg));
}

// ---------------------------------------------------------------------------
// Face tracing. A state is an edge end about to be traversed away from its
// vertex, together with a side in {+1,-1}. The successor map is
//   step(h, s) = (sigma^(s') (other(h)), s')   with s' = s * sign(edge(h)),
// where sigma^+ is the rotation successor and sigma^- the predecessor. The
// involution rho(h, s) = (sigma^(-s)(h), -s) conjugates step to its inverse;
// faces are the step-orbits merged along rho.

namespace {

struct Tracer {
  const EmbeddedGraph& e;
  std::vector<EdgeEnd> ends;          // all ends, sorted
  std::map<EdgeEnd, int> end_index;

  explicit Tracer(const EmbeddedGraph& emb) : e(emb) {
    for (const Edge& ed : e.graph().edges()) {
      ends.push_back({ed.id, 0});
      ends.push_back({ed.id, 1});
    }
    std::sort(ends.begin(), ends.end());
    for (int i = 0; i < static_cast<int>(ends.size()); ++i)
      end_index[ends[i]] = i;
  }

  int state_of(const EdgeEnd& h, int s) const {
    return end_index.at(h) * 2 + (s > 0 ? 0 : 1);
  }
  EdgeEnd state_end(int st) const { return ends[st / 2]; }
  int state_side(int st) const { return st % 2 == 0 ? 1 : -1; }

  EdgeEnd neighbor_in_rotation(const EdgeEnd& h, int dir) const {
    const auto& rot = e.rotation(e.end_vertex(h));
    int d = static_cast<int>(rot.size());
    int p = e.end_position(h);
    return rot[(p + (dir > 0 ? 1 : d - 1)) % d];
  }

  int step(int st) const {
    EdgeEnd h = state_end(st);
    int s = state_side(st);
    int s2 = s * e.sign(h.edge);
    EdgeEnd arrive = e.other_end(h);
    return state_of(neighbor_in_rotation(arrive, s2), s2);
  }

  int rho(int st) const {
    EdgeEnd h = state_end(st);
    int s = state_side(st);
    return state_of(neighbor_in_rotation(h, -s), -s);
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FaceTrace trace_faces(const EmbeddedGraph& e) {
  e.validate();
  Tracer tr(e);
  int n_states = static_cast<int>(tr.ends.size()) * 2;

  std::vector<int> orbit_of(n_states, -1);
  std::vector<std::vector<int>> orbits;
  for (int st = 0; st < n_states; ++st) {
    if (orbit_of[st] >= 0) continue;
    std::vector<int> orbit;
    int cur = st;
    while (orbit_of[cur] < 0) {
      orbit_of[cur] = static_cast<int>(orbits.size());
      orbit.push_back(cur);
      cur = tr.step(cur);
    }
    orbits.push_back(std::move(orbit));
  }

  UnionFind uf(static_cast<int>(orbits.size()));
  for (int st = 0; st < n_states; ++st)
    uf.unite(orbit_of[st], orbit_of[tr.rho(st)]);

  // face ids in order of each merged class's smallest state
  std::map<int, int> root_to_face;
  std::vector<int> canon_orbit;  // orbit whose walk represents the face
  FaceTrace out;
  for (int st = 0; st < n_states; ++st) {
    int root = uf.find(orbit_of[st]);
    if (root_to_face.count(root)) continue;
    int fid = static_cast<int>(out.faces.size());
    root_to_face[root] = fid;
    canon_orbit.push_back(orbit_of[st]);
    Face f;
    f.id = fid;
    for (int s : orbits[orbit_of[st]]) {
      EdgeEnd h = tr.state_end(s);
      f.walk.push_back(e.end_vertex(h));
      f.out_ends.push_back(h);
    }
    f.vertex_set = normalized(f.walk);
    out.faces.push_back(std::move(f));
  }

  auto face_of_state = [&](int st) {
    return root_to_face.at(uf.find(orbit_of[st]));
  };

  // corners: walking st -> step(st) arrives at a vertex through a corner
  for (int st = 0; st < n_states; ++st) {
    int fid = face_of_state(st);
    EdgeEnd h = tr.state_end(st);
    int s2 = tr.state_side(st) * e.sign(h.edge);
    EdgeEnd arrive = e.other_end(h);
    Vertex v = e.end_vertex(arrive);
    int d = static_cast<int>(e.rotation(v).size());
    int p = e.end_position(arrive);
    int gap = s2 > 0 ? p : (p + d - 1) % d;
    auto key = std::make_pair(v, gap);
    auto it = out.corner_face.find(key);
    if (it == out.corner_face.end())
      out.corner_face[key] = fid;
    else if (it->second != fid)
      throw std::logic_error("corner claimed by two distinct faces");
  }

  for (const Edge& ed : e.graph().edges()) {
    std::map<int, int> count;
    for (int endi = 0; endi < 2; ++endi)
      for (int s : {1, -1})
        count[face_of_state(tr.state_of({ed.id, endi}, s))] += 1;
    std::vector<int> sides;
    for (auto [fid, c] : count) {
      if (c % 2 != 0) throw std::logic_error("odd edge-face incidence");
      for (int i = 0; i < c / 2; ++i) sides.push_back(fid);
    }
    if (sides.size() != 2) throw std::logic_error("edge without two sides");
    out.edge_sides[ed.id] = {sides[0], sides[1]};
  }
  return out;
}

std::vector<int> FaceTrace::faces_at(Vertex v) const {
  std::vector<int> out;
  for (const auto& [key, fid] : corner_face)
    if (key.first == v) out.push_back(fid);
  return normalized(std::move(out));
}

int euler_genus(const EmbeddedGraph& e) {
  FaceTrace tr = trace_faces(e);
  int total = 0;
  for (const VertexSet& comp : e.graph().components()) {
    int v = static_cast<int>(comp.size());
    int edges = 0;
    for (const Edge& ed : e.graph().edges())
      if (contains(comp, ed.u)) ++edges;
    int faces = 0;
    for (const Face& f : tr.faces)
      if (contains(comp, f.vertex_set.front())) ++faces;
    if (edges == 0) faces = 1;  // a lone vertex sits on a sphere
    total += 2 - (v - edges + faces);
  }
  return total;
}

std::optional<int> sigma_distance(const EmbeddedGraph& e, Vertex x, Vertex y) {
  if (!e.graph().has_vertex(x) || !e.graph().has_vertex(y))
    throw std::invalid_argument("sigma_distance: unknown vertex");
  if (x == y) return 1;
  FaceTrace tr = trace_faces(e);
  // radial BFS: nodes are vertices and faces, alternating
  std::map<Vertex, std::vector<int>> faces_of_vertex;
  std::vector<std::vector<Vertex>> verts_of_face(tr.faces.size());
  for (const Face& f : tr.faces)
    verts_of_face[f.id] = f.vertex_set;
  for (const auto& [key, fid] : tr.corner_face)
    faces_of_vertex[key.first].push_back(fid);

  std::map<Vertex, int> vdist;
  std::vector<int> fdist(tr.faces.size(), -1);
  vdist[x] = 0;
  std::deque<std::pair<bool, int>> queue{{true, x}};  // (is_vertex, id)
  while (!queue.empty()) {
    auto [is_vertex, id] = queue.front();
    queue.pop_front();
    if (is_vertex) {
      int dv = vdist.at(id);
      if (id == y) return dv / 2 + 1;
      for (int fid : faces_of_vertex[id])
        if (fdist[fid] < 0) {
          fdist[fid] = dv + 1;
          queue.push_back({false, fid});
        }
    } else {
      for (Vertex w : verts_of_face[id])
        if (!vdist.count(w)) {
          vdist[w] = fdist[id] + 1;
          queue.push_back({true, w});
        }
    }
  }
  return std::nullopt;
}

EmbeddedGraph contract_face(const EmbeddedGraph& e, int face_id) {
  FaceTrace tr = trace_faces(e);
  if (face_id < 0 || face_id >= static_cast<int>(tr.faces.size()))
    throw std::invalid_argument("contract_face: unknown face");
  VertexSet s = tr.faces[face_id].vertex_set;

  EmbeddedGraph h = e;
  // collapse a spanning tree of the boundary set, lowest edge id first
  std::set<Vertex> live(s.begin(), s.end());
  for (;;) {
    int pick = -1;
    for (const Edge& ed : h.graph().edges()) {
      if (ed.is_loop()) continue;
      if (live.count(ed.u) && live.count(ed.v)) {
        pick = ed.id;
        break;
      }
    }
    if (pick < 0) break;
    Edge ed = h.graph().edge_by_id(pick);
    live.erase(ed.v);
    h.contract_edge(pick);
  }
  if (live.empty()) return h;
  Vertex w = *live.begin();
  // all surviving boundary-internal edges are loops at w now
  for (;;) {
    int loop_id = -1;
    for (int id : h.graph().incident_edges(w))
      if (h.graph().edge_by_id(id).is_loop()) {
        loop_id = id;
        break;
      }
    if (loop_id < 0) break;
    h.remove_edge(loop_id);
  }
  // the new vertex gets plain neighborhood N(S)\S: drop parallel copies
  {
    std::set<Vertex> seen_nbr;
    std::vector<int> drop;
    for (const EdgeEnd& end : h.rotation(w)) {
      Vertex nbr = h.graph().edge_by_id(end.edge).other(w);
      if (!seen_nbr.insert(nbr).second) drop.push_back(end.edge);
    }
    for (int id : normalized(drop)) h.remove_edge(id);
  }
  // give the merged vertex a fresh identity
  Vertex nv = h.fresh_vertex_id();
  auto rot = h.rotation(w);
  MultiGraph g2 = h.graph();
  g2.add_vertex(nv);
  for (const EdgeEnd& end : rot) g2.set_edge_endpoint(end.edge, end.end, nv);
  g2.remove_vertex(w);
  std::map<Vertex, std::vector<EdgeEnd>> rots = h.rotations();
  rots[nv] = rot;
  rots.erase(w);
  std::map<int, int> sg = h.signs();
  return EmbeddedGraph(std::move(g2), std::move(rots), std::move(sg));
}

// ---------------------------------------------------------------------------
// Nooses and surgery.

bool verify_noose(const EmbeddedGraph& e, const Noose& n) {
  FaceTrace tr = trace_faces(e);
  if (n.vertices.empty())
    return n.faces.size() == 1 && n.faces[0] >= 0 &&
           n.faces[0] < static_cast<int>(tr.faces.size());
  if (n.vertices.size() != n.faces.size()) return false;
  VertexSet hits = n.hit_set();
  if (hits.size() != n.vertices.size()) return false;  // vertices distinct
  int m = static_cast<int>(n.vertices.size());
  for (int i = 0; i < m; ++i) {
    int f = n.faces[i];
    if (f < 0 || f >= static_cast<int>(tr.faces.size())) return false;
    const VertexSet& fs = tr.faces[f].vertex_set;
    if (!contains(fs, n.vertices[i]) ||
        !contains(fs, n.vertices[(i + 1) % m]))
      return false;
  }
  if (!n.corners.empty()) {
    if (n.corners.size() != n.vertices.size()) return false;
    for (int i = 0; i < m; ++i) {
      Vertex v = n.vertices[i];
      auto [gin, gout] = n.corners[i];
      auto in_it = tr.corner_face.find({v, gin});
      auto out_it = tr.corner_face.find({v, gout});
      if (in_it == tr.corner_face.end() || out_it == tr.corner_face.end())
        return false;
      if (in_it->second != n.faces[(i + m - 1) % m]) return false;
      if (out_it->second != n.faces[i]) return false;
    }
  }
  return true;
}

bool check_noose_face_crossings(const EmbeddedGraph& e, const Noose& n) {
  if (!verify_noose(e, n))
    throw std::invalid_argument("malformed noose");
  std::set<int> seen;
  for (int f : n.faces)
    if (!seen.insert(f).second) return false;
  return true;
}

NooseCut cut_along_noose(const EmbeddedGraph& e, const Noose& n) {
  if (!verify_noose(e, n)) throw std::invalid_argument("malformed noose");
  int input_genus = euler_genus(e);
  FaceTrace tr = trace_faces(e);

  NooseCut out;
  EmbeddedGraph h = e;
  if (!n.vertices.empty()) {
    int m = static_cast<int>(n.vertices.size());
    // resolve corners: first matching gap when not pinned by the noose
    std::vector<std::pair<int, int>> corners = n.corners;
    if (corners.empty()) {
      for (int i = 0; i < m; ++i) {
        Vertex v = n.vertices[i];
        int f_in = n.faces[(i + m - 1) % m];
        int f_out = n.faces[i];
        int gin = -1, gout = -1;
        int d = static_cast<int>(e.rotation(v).size());
        for (int g = 0; g < d; ++g) {
          int fid = tr.corner_face.at({v, g});
          if (gin < 0 && fid == f_in) gin = g;
          if (gout < 0 && fid == f_out) gout = g;
        }
        if (gin < 0 || gout < 0)
          throw std::invalid_argument("noose face not at vertex corner");
        corners.push_back({gin, gout});
      }
    }
    for (int i = 0; i < m; ++i) {
      auto [a, b] = h.split_vertex(n.vertices[i], corners[i].first,
                                   corners[i].second);
      out.copies[n.vertices[i]] = {a, b};
    }
  }

  for (const VertexSet& comp : h.graph().components()) {
    EmbeddedGraph piece = h.induced(comp);
    out.piece_genus.push_back(euler_genus(piece));
    out.pieces.push_back(std::move(piece));
  }
  out.genus_reducing = !out.pieces.empty();
  for (int g : out.piece_genus)
    if (g >= input_genus) out.genus_reducing = false;
  return out;
}

// ---------------------------------------------------------------------------
// Cutting along cycles and disc tests.

EmbeddedCycle EmbeddedCycle::from_vertices(const MultiGraph& g,
                                           const std::vector<Vertex>& vs) {
  EmbeddedCycle c;
  c.verts = vs;
  int k = static_cast<int>(vs.size());
  for (int i = 0; i < k; ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % k];
    int best = -1;
    for (const Edge& e : g.edges())
      if (!e.is_loop() && ((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
        best = e.id;
        break;
      }
    if (best < 0)
      throw std::invalid_argument("cycle vertices not consecutive-adjacent");
    c.edges.push_back(best);
  }
  return c;
}

CycleCut cut_along_cycle(const EmbeddedGraph& e, const EmbeddedCycle& c) {
  int k = static_cast<int>(c.verts.size());
  if (k < 2 || static_cast<int>(c.edges.size()) != k)
    throw std::invalid_argument("cut_along_cycle: need a cycle of length >= 2");
  if (normalized(c.verts).size() != c.verts.size())
    throw std::invalid_argument("cut_along_cycle: repeated cycle vertex");
  if (!e.graph().connected())
    throw std::invalid_argument("cut_along_cycle: graph must be connected");

  EmbeddedGraph h = e;
  for (int i = 0; i + 1 < k; ++i)
    if (h.sign(c.edges[i]) < 0) h.flip_vertex(c.verts[i + 1]);
  CycleCut out;
  if (h.sign(c.edges[k - 1]) < 0) {
    out.two_sided = false;  // one-sided cycle
    return out;
  }
  out.two_sided = true;

  auto end_at = [&](int edge_id, Vertex v) -> EdgeEnd {
    const Edge& ed = h.graph().edge_by_id(edge_id);
    if (ed.u == v) return {edge_id, 0};
    if (ed.v == v) return {edge_id, 1};
    throw std::invalid_argument("cycle edge not incident to cycle vertex");
  };

  Vertex fresh = h.fresh_vertex_id();
  auto left_of = [&](int i) { return fresh + 2 * i; };
  auto right_of = [&](int i) { return fresh + 2 * i + 1; };

  // strict rotation arcs between the two cycle ends at each cycle vertex
  std::map<Vertex, Vertex> remap_left, remap_right;  // old -> copy
  std::vector<std::vector<EdgeEnd>> arc_left(k), arc_right(k);
  for (int i = 0; i < k; ++i) {
    Vertex v = c.verts[i];
    EdgeEnd b = end_at(c.edges[i], v);                       // toward next
    EdgeEnd a = end_at(c.edges[(i + k - 1) % k], v);         // toward prev
    const auto& rot = h.rotation(v);
    int d = static_cast<int>(rot.size());
    int pb = h.end_position(b), pa = h.end_position(a);
    if (pa == pb) throw std::invalid_argument("degenerate cycle corner");
    for (int p = (pb + 1) % d; p != pa; p = (p + 1) % d)
      arc_left[i].push_back(rot[p]);
    for (int p = (pa + 1) % d; p != pb; p = (p + 1) % d)
      arc_right[i].push_back(rot[p]);
  }

  // assemble the cut graph
  MultiGraph g2;
  std::map<Vertex, std::vector<EdgeEnd>> rot2;
  std::map<int, int> sg2;
  VertexSet cycle_set = normalized(c.verts);
  for (Vertex v : h.graph().vertices())
    if (!contains(cycle_set, v)) g2.add_vertex(v);
  for (int i = 0; i < k; ++i) {
    g2.add_vertex(left_of(i));
    g2.add_vertex(right_of(i));
  }
  std::set<int> cycle_edges(c.edges.begin(), c.edges.end());
  // where does each end of each surviving edge now live?
  std::map<EdgeEnd, Vertex> end_home;
  for (int i = 0; i < k; ++i) {
    for (const EdgeEnd& x : arc_left[i]) end_home[x] = left_of(i);
    for (const EdgeEnd& x : arc_right[i]) end_home[x] = right_of(i);
  }
  for (const Edge& ed : h.graph().edges()) {
    if (cycle_edges.count(ed.id)) continue;
    Vertex u2 = end_home.count({ed.id, 0}) ? end_home[{ed.id, 0}] : ed.u;
    Vertex v2 = end_home.count({ed.id, 1}) ? end_home[{ed.id, 1}] : ed.v;
    g2.add_edge_with_id(ed.id, u2, v2);
    sg2[ed.id] = h.sign(ed.id);
  }
  int next_id = h.graph().max_edge_id() + 1;
  std::vector<int> eL(k), eR(k);
  for (int i = 0; i < k; ++i) {
    eL[i] = next_id++;
    g2.add_edge_with_id(eL[i], left_of(i), left_of((i + 1) % k));
    sg2[eL[i]] = 1;
    eR[i] = next_id++;
    g2.add_edge_with_id(eR[i], right_of(i), right_of((i + 1) % k));
    sg2[eR[i]] = 1;
  }
  for (Vertex v : h.graph().vertices())
    if (!contains(cycle_set, v)) rot2[v] = h.rotation(v);
  for (int i = 0; i < k; ++i) {
    std::vector<EdgeEnd> rl;
    rl.push_back({eL[i], 0});  // toward next left copy
    rl.insert(rl.end(), arc_left[i].begin(), arc_left[i].end());
    rl.push_back({eL[(i + k - 1) % k], 1});  // from previous left copy
    rot2[left_of(i)] = rl;
    std::vector<EdgeEnd> rr;
    rr.push_back({eR[(i + k - 1) % k], 1});
    rr.insert(rr.end(), arc_right[i].begin(), arc_right[i].end());
    rr.push_back({eR[i], 0});
    rot2[right_of(i)] = rr;
  }
  EmbeddedGraph cutg(std::move(g2), std::move(rot2), std::move(sg2));

  VertexSet comp_left = cutg.graph().component_of(left_of(0));
  out.separates = !contains(comp_left, right_of(0));
  auto originals_in = [&](const VertexSet& comp) {
    VertexSet r;
    for (Vertex v : comp)
      if (v < fresh) r.push_back(v);
    return r;
  };
  if (!out.separates) {
    out.side_a = originals_in(cutg.graph().vertices());
    out.side_b = {};
    out.genus_a = euler_genus(cutg);
    out.genus_b = -1;
  } else {
    VertexSet comp_right = cutg.graph().component_of(right_of(0));
    out.side_a = originals_in(comp_left);
    out.side_b = originals_in(comp_right);
    out.genus_a = euler_genus(cutg.induced(comp_left));
    out.genus_b = euler_genus(cutg.induced(comp_right));
    if (comp_left.size() + comp_right.size() != cutg.graph().vertex_count())
      throw std::logic_error("cycle cut produced more than two pieces");
  }
  return out;
}

bool cycle_bounds_disc(const EmbeddedGraph& e, const EmbeddedCycle& c,
                       const VertexSet& inside) {
  if (!set_intersection(inside, normalized(c.verts)).empty()) return false;
  CycleCut cut = cut_along_cycle(e, c);
  if (!cut.two_sided || !cut.separates) return false;
  if (inside.empty()) return cut.genus_a == 0 || cut.genus_b == 0;
  if (is_subset(inside, cut.side_a)) return cut.genus_a == 0;
  if (is_subset(inside, cut.side_b)) return cut.genus_b == 0;
  return false;
}

VertexSet disc_interior(const EmbeddedGraph& e, const EmbeddedCycle& c,
                        const VertexSet& anchor) {
  VertexSet core = set_difference(anchor, normalized(c.verts));
  if (core.empty())
    throw std::invalid_argument("disc_interior: anchor lies on the cycle");
  CycleCut cut = cut_along_cycle(e, c);
  if (!cut.two_sided || !cut.separates)
    throw std::invalid_argument("disc_interior: cycle does not separate");
  if (is_subset(core, cut.side_a)) {
    if (cut.genus_a != 0)
      throw std::invalid_argument("disc_interior: anchor side is not a disc");
    return cut.side_a;
  }
  if (is_subset(core, cut.side_b)) {
    if (cut.genus_b != 0)
      throw std::invalid_argument("disc_interior: anchor side is not a disc");
    return cut.side_b;
  }
  throw std::invalid_argument("disc_interior: anchor split by the cycle");
}

// ---------------------------------------------------------------------------
// Representativity by exhaustive corner-resolved noose search.

namespace {

struct NooseSearch {
  const EmbeddedGraph& e;
  const FaceTrace& tr;
  int target_len;

  std::vector<Vertex> verts;
  std::vector<int> faces;
  std::vector<std::pair<int, int>> corners;  // (gap_in, gap_out); in fixed late
  std::set<int> used_faces;
  std::optional<Noose> found;

  NooseSearch(const EmbeddedGraph& emb, const FaceTrace& t, int len)
      : e(emb), tr(t), target_len(len) {}

  bool genus_reducing(const Noose& n) const {
    return cut_along_noose(e, n).genus_reducing;
  }

  void close_and_test() {
    // pick the start vertex's incoming corner on the last face
    Vertex v0 = verts[0];
    int last_face = faces.back();
    int d = static_cast<int>(e.rotation(v0).size());
    for (int g = 0; g < d && !found; ++g) {
      if (tr.corner_face.at({v0, g}) != last_face) continue;
      Noose n;
      n.vertices = verts;
      n.faces = faces;
      n.corners = corners;
      n.corners[0].first = g;
      if (genus_reducing(n)) found = n;
    }
  }

  void extend() {
    if (found) return;
    if (static_cast<int>(verts.size()) == target_len) {
      close_and_test();
      return;
    }
    int cur_face = faces.back();
    const Face& f = tr.face(cur_face);
    for (Vertex w : f.vertex_set) {
      if (found) return;
      if (w <= verts[0]) continue;  // canonical: start at the minimum
      if (std::find(verts.begin(), verts.end(), w) != verts.end()) continue;
      int dw = static_cast<int>(e.rotation(w).size());
      for (int gin = 0; gin < dw && !found; ++gin) {
        if (tr.corner_face.at({w, gin}) != cur_face) continue;
        for (int gout = 0; gout < dw && !found; ++gout) {
          int next_face = tr.corner_face.at({w, gout});
          if (used_faces.count(next_face)) continue;
          verts.push_back(w);
          faces.push_back(next_face);
          corners.push_back({gin, gout});
          used_faces.insert(next_face);
          extend();
          used_faces.erase(next_face);
          corners.pop_back();
          faces.pop_back();
          verts.pop_back();
        }
      }
    }
  }

  void run() {
    for (Vertex v0 : e.graph().vertices()) {
      if (found) return;
      int d = static_cast<int>(e.rotation(v0).size());
      for (int gout = 0; gout < d && !found; ++gout) {
        int f0 = tr.corner_face.at({v0, gout});
        verts = {v0};
        faces = {f0};
        corners = {{-1, gout}};
        used_faces = {f0};
        extend();
      }
    }
  }
};

}  // namespace

Representativity representativity(const EmbeddedGraph& e, int length_bound) {
  if (euler_genus(e) == 0)
    throw std::invalid_argument("representativity undefined on the sphere");
  FaceTrace tr = trace_faces(e);
  for (int k = 1; k <= length_bound; ++k) {
    NooseSearch search(e, tr, k);
    search.run();
    if (search.found) return {k, search.found};
  }
  return {std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Concentric cycles: growth, verification, tightening.

namespace {

// Boundary of a face set: edges with exactly one side inside. Returns the
// cycle in vertex order when that boundary is a single simple cycle.
std::optional<EmbeddedCycle> boundary_cycle(const EmbeddedGraph& e,
                                            const FaceTrace& tr,
                                            const std::set<int>& region) {
  std::vector<int> boundary;
  for (const auto& [eid, sides] : tr.edge_sides) {
    int cnt = (region.count(sides.first) ? 1 : 0) +
              (region.count(sides.second) ? 1 : 0);
    if (cnt == 1) boundary.push_back(eid);
  }
  if (boundary.empty()) return std::nullopt;
  std::map<Vertex, std::vector<int>> at;
  for (int eid : boundary) {
    const Edge& ed = e.graph().edge_by_id(eid);
    if (ed.is_loop()) return std::nullopt;
    at[ed.u].push_back(eid);
    at[ed.v].push_back(eid);
  }
  for (const auto& [v, ids] : at)
    if (ids.size() != 2) return std::nullopt;
  EmbeddedCycle c;
  Vertex start = at.begin()->first;
  Vertex cur = start;
  int via = at[cur][0];
  for (;;) {
    c.verts.push_back(cur);
    c.edges.push_back(via);
    Vertex nxt = e.graph().edge_by_id(via).other(cur);
    if (nxt == start) break;
    const auto& ids = at[nxt];
    via = ids[0] == via ? ids[1] : ids[0];
    cur = nxt;
  }
  if (c.verts.size() != at.size()) return std::nullopt;  // several cycles
  return c;
}

std::set<int> grow_region(const EmbeddedGraph& e, const FaceTrace& tr,
                          std::set<int> region,
                          const std::vector<int>& boundary_edges) {
  VertexSet frontier;
  for (const auto& [eid, sides] : tr.edge_sides) {
    int cnt = (region.count(sides.first) ? 1 : 0) +
              (region.count(sides.second) ? 1 : 0);
    if (cnt == 1) {
      const Edge& ed = e.graph().edge_by_id(eid);
      frontier.push_back(ed.u);
      frontier.push_back(ed.v);
    }
  }
  frontier = normalized(std::move(frontier));
  for (Vertex v : frontier)
    for (int fid : tr.faces_at(v)) region.insert(fid);
  (void)boundary_edges;
  return region;
}

bool cycle_encloses_vertices(const EmbeddedGraph& e, const EmbeddedCycle& c,
                             const VertexSet& omega) {
  if (!set_intersection(omega, normalized(c.verts)).empty()) return false;
  CycleCut cut = cut_along_cycle(e, c);
  if (!cut.two_sided || !cut.separates) return false;
  if (is_subset(omega, cut.side_a)) return cut.genus_a == 0;
  if (is_subset(omega, cut.side_b)) return cut.genus_b == 0;
  return false;
}

}  // namespace

namespace {

ConcentricSearch concentric_from_seed(const EmbeddedGraph& e,
                                      const FaceTrace& tr,
                                      const std::set<int>& seed,
                                      const VertexSet& core, int k) {
  ConcentricSearch out;
  if (k == 0) {
    out.success = true;
    return out;
  }
  std::set<int> grown = seed;
  std::vector<std::vector<Vertex>> inner_first;
  VertexSet used;
  while (static_cast<int>(inner_first.size()) < k) {
    auto cyc = boundary_cycle(e, tr, grown);
    bool ok = false;
    if (cyc && set_intersection(normalized(cyc->verts), used).empty()) {
      VertexSet inner = set_difference(core, normalized(cyc->verts));
      if (inner.empty() ? cycle_bounds_disc(e, *cyc, {})
                        : cycle_encloses_vertices(e, *cyc, inner))
        ok = true;
    }
    if (ok) {
      inner_first.push_back(cyc->verts);
      used = set_union(used, normalized(cyc->verts));
    }
    std::set<int> next = grow_region(e, tr, grown, {});
    if (next == grown) {
      out.blocking_layer = static_cast<int>(inner_first.size());
      out.family.cycles.assign(inner_first.rbegin(), inner_first.rend());
      return out;
    }
    grown = std::move(next);
  }
  out.success = true;
  out.family.cycles.assign(inner_first.rbegin(), inner_first.rend());
  return out;
}

}  // namespace

ConcentricSearch find_concentric_cycles(const EmbeddedGraph& e, int region,
                                        int k) {
  FaceTrace tr = trace_faces(e);
  if (region < 0 || region >= static_cast<int>(tr.faces.size()))
    throw std::invalid_argument("find_concentric_cycles: unknown face");
  return concentric_from_seed(e, tr, {region}, tr.faces[region].vertex_set, k);
}

ConcentricSearch concentric_cycles_around(const EmbeddedGraph& e,
                                          const VertexSet& core, int k) {
  FaceTrace tr = trace_faces(e);
  std::set<int> seed;
  for (Vertex v : core)
    for (int fid : tr.faces_at(v)) seed.insert(fid);
  if (seed.empty())
    throw std::invalid_argument("concentric_cycles_around: empty core");
  return concentric_from_seed(e, tr, seed, core, k);
}

bool verify_concentric_enclosure(const EmbeddedGraph& e,
                                 const ConcentricFamily& family,
                                 const VertexSet& omega, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int n = static_cast<int>(family.size());
  VertexSet all;
  for (const auto& cyc : family.cycles) {
    VertexSet vs = normalized(cyc);
    if (vs.size() != cyc.size()) return fail("cycle repeats a vertex");
    if (!set_intersection(all, vs).empty())
      return fail("cycles are not disjoint");
    all = set_union(all, vs);
  }
  if (!set_intersection(all, omega).empty())
    return fail("omega touches a cycle");
  std::vector<VertexSet> interior(n);
  for (int i = 0; i < n; ++i) {
    EmbeddedCycle c = EmbeddedCycle::from_vertices(e.graph(), family.cycles[i]);
    if (!cycle_encloses_vertices(e, c, omega))
      return fail("cycle " + std::to_string(i) +
                  " does not bound a disc around omega");
    interior[i] = disc_interior(e, c, omega);
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!is_subset(normalized(family.cycles[i + 1]), interior[i]))
      return fail("cycle nesting violated");
    if (!is_subset(interior[i + 1], interior[i]))
      return fail("disc nesting violated");
  }
  return true;
}

bool is_tightly_enclosing(const EmbeddedGraph& e,
                          const ConcentricFamily& family,
                          const VertexSet& omega) {
  std::string why;
  if (!verify_concentric_enclosure(e, family, omega, &why))
    throw std::invalid_argument("family does not enclose omega: " + why);
  int n = static_cast<int>(family.size());
  for (int k = 1; k <= n; ++k)
    for (Vertex v : family.cycles[k - 1]) {
      int best = -1;
      for (Vertex w : omega) {
        auto d = sigma_distance(e, v, w);
        if (d && (best < 0 || *d < best)) best = *d;
      }
      if (best < 0 || best > n - k + 2) return false;
    }
  return true;
}

namespace {

// Innermost enclosing cycle of omega within the sub-embedding on `keep`,
// found by growing face layers outward from omega.
std::optional<std::vector<Vertex>> enclosing_cycle_within(
    const EmbeddedGraph& e, const VertexSet& keep, const VertexSet& omega,
    const VertexSet& forbidden) {
  EmbeddedGraph sub = e.induced(keep);
  if (!is_subset(omega, sub.graph().vertices())) return std::nullopt;
  FaceTrace tr = trace_faces(sub);
  std::set<int> region;
  for (Vertex w : omega)
    for (int fid : tr.faces_at(w)) region.insert(fid);
  for (;;) {
    auto cyc = boundary_cycle(sub, tr, region);
    if (cyc) {
      VertexSet vs = normalized(cyc->verts);
      if (set_intersection(vs, forbidden).empty() &&
          set_intersection(vs, omega).empty()) {
        // check in the full embedding
        EmbeddedCycle full = EmbeddedCycle::from_vertices(e.graph(), cyc->verts);
        if (cycle_encloses_vertices(e, full, omega)) return cyc->verts;
      }
    }
    std::set<int> next = grow_region(sub, tr, region, {});
    if (next == region) return std::nullopt;
    region = std::move(next);
  }
}

}  // namespace

TightenResult tighten_cycles(const EmbeddedGraph& e,
                             const ConcentricFamily& family,
                             const VertexSet& omega) {
  std::string why;
  if (!verify_concentric_enclosure(e, family, omega, &why))
    throw std::invalid_argument("tighten_cycles: family invalid: " + why);

  TightenResult res;
  res.family = family;
  int n = static_cast<int>(family.size());

  auto closure_size = [&](int k) -> long {
    EmbeddedCycle c =
        EmbeddedCycle::from_vertices(e.graph(), res.family.cycles[k]);
    return static_cast<long>(disc_interior(e, c, omega).size()) +
           static_cast<long>(res.family.cycles[k].size());
  };
  auto total_potential = [&]() {
    long t = 0;
    for (int k = 0; k < n; ++k) t += closure_size(k);
    return t;
  };
  res.potential_trace.push_back(total_potential());

  bool improved = true;
  while (improved) {
    improved = false;
    for (int k = n - 1; k >= 0 && !improved; --k) {
      EmbeddedCycle ck =
          EmbeddedCycle::from_vertices(e.graph(), res.family.cycles[k]);
      VertexSet closure = set_union(disc_interior(e, ck, omega),
                                    normalized(res.family.cycles[k]));
      VertexSet inner_block;  // the next cycle inward plus its disc
      if (k + 1 < n) {
        EmbeddedCycle cn =
            EmbeddedCycle::from_vertices(e.graph(), res.family.cycles[k + 1]);
        inner_block = set_union(disc_interior(e, cn, omega),
                                normalized(res.family.cycles[k + 1]));
      }
      long cur = closure_size(k);
      for (Vertex v : res.family.cycles[k]) {
        VertexSet keep = set_difference(closure, {v});
        auto cand = enclosing_cycle_within(e, keep, omega, inner_block);
        if (!cand) continue;
        EmbeddedCycle cc = EmbeddedCycle::from_vertices(e.graph(), *cand);
        long cand_size =
            static_cast<long>(disc_interior(e, cc, omega).size()) +
            static_cast<long>(cand->size());
        if (cand_size >= cur) continue;
        res.family.cycles[k] = *cand;
        if (!verify_concentric_enclosure(e, res.family, omega, &why)) {
          res.family.cycles[k] = ck.verts;  // revert
          continue;
        }
        res.potential_trace.push_back(total_potential());
        improved = true;
        break;
      }
    }
  }
  if (!is_tightly_enclosing(e, res.family, omega))
    throw std::runtime_error(
        "tighten_cycles: fixed point is not tightly enclosing");
  return res;
}

}  // namespace gms
