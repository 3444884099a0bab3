#include "gms/vortex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace gms {

namespace {

void require_vortex(const Vortex& v) {
  VertexSet soc = normalized(v.society);
  if (soc.size() != v.society.size())
    throw std::invalid_argument("society vertices must be distinct");
  if (!is_subset(soc, v.graph.vertices()))
    throw std::invalid_argument("society vertex missing from vortex graph");
}

int society_index(const Vortex& v, Vertex w) {  // 1-based, 0 if absent
  for (std::size_t i = 0; i < v.society.size(); ++i)
    if (v.society[i] == w) return static_cast<int>(i) + 1;
  return 0;
}

VertexSet bag_union(const std::vector<VertexSet>& bags) {
  VertexSet all;
  for (const auto& b : bags) all = set_union(all, b);
  return all;
}

}  // namespace

VortexCheck verify_vortex_decomposition(const Vortex& v,
                                        const VortexDecomposition& in) {
  require_vortex(v);
  VortexDecomposition d = in;
  for (auto& bag : d.bags) bag = normalized(std::move(bag));
  auto fail = [](std::string why) {
    return VortexCheck{false, -1, -1, std::move(why)};
  };
  int n = v.length();
  if (static_cast<int>(d.bags.size()) != n)
    return fail("one bag per society vertex required");
  for (const auto& bag : d.bags)
    if (!is_subset(bag, v.graph.vertices()))
      return fail("bag contains a vertex outside the vortex");
  for (int i = 0; i < n; ++i)
    if (!contains(d.bags[i], v.society[i]))
      return fail("society vertex missing from its bag");
  if (bag_union(d.bags) != v.graph.vertices())
    return fail("vertex not covered by any bag");
  for (const Edge& e : v.graph.edges()) {
    bool cov = false;
    for (const auto& bag : d.bags)
      if (contains(bag, e.u) && contains(bag, e.v)) cov = true;
    if (!cov) return fail("edge " + std::to_string(e.id) + " uncovered");
  }
  if (d.kind == VortexDecomposition::Kind::kLinear) {
    for (Vertex x : v.graph.vertices()) {
      int first = -1, last = -1;
      for (int i = 0; i < n; ++i)
        if (contains(d.bags[i], x)) {
          if (first < 0) first = i;
          last = i;
        }
      for (int i = first; i <= last; ++i)
        if (!contains(d.bags[i], x))
          return fail("occurrence of vertex " + std::to_string(x) +
                      " not contiguous");
    }
  } else {
    // four-point crossing axiom over cyclically ordered indices
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            VertexSet ik = set_intersection(d.bags[i], d.bags[k]);
            if (!is_subset(ik, set_union(d.bags[j], d.bags[l])))
              return fail("four-point axiom violated");
            VertexSet jl = set_intersection(d.bags[j], d.bags[l]);
            if (!is_subset(jl, set_union(d.bags[i], d.bags[k])))
              return fail("four-point axiom violated");
          }
  }
  VortexCheck out;
  out.valid = true;
  out.depth = -1;
  for (const auto& bag : d.bags)
    out.depth = std::max(out.depth, static_cast<int>(bag.size()) - 1);
  out.adhesion = 0;
  for (int i = 1; i < n; ++i)
    out.adhesion = std::max(
        out.adhesion,
        static_cast<int>(set_intersection(d.bags[i - 1], d.bags[i]).size()));
  if (d.kind == VortexDecomposition::Kind::kCircular && n > 1)
    out.adhesion = std::max(
        out.adhesion,
        static_cast<int>(set_intersection(d.bags[n - 1], d.bags[0]).size()));
  return out;
}

int vortex_adhesion(const Vortex& v) {
  require_vortex(v);
  int n = v.length();
  if (n < 3)
    throw std::invalid_argument(
        "adhesion is only defined for vortices of length at least 3");
  if (v.graph.vertex_count() > 12)
    throw std::invalid_argument("vortex too large for exact adhesion");

  // order: society vertices first (pinned intervals), then the rest
  std::vector<Vertex> order = v.society;
  for (Vertex x : v.interior()) order.push_back(x);
  int m = static_cast<int>(order.size());
  std::vector<int> pin(m, -1);
  for (int i = 0; i < n; ++i) pin[i] = i;

  std::vector<std::pair<int, int>> interval(m);
  std::vector<int> cut_load(std::max(0, n - 1), 0);
  int best = static_cast<int>(v.graph.vertex_count()) + 1;

  std::vector<std::vector<int>> earlier_nbrs(m);
  std::map<Vertex, int> pos;
  for (int i = 0; i < m; ++i) pos[order[i]] = i;
  for (const Edge& e : v.graph.edges()) {
    if (e.is_loop()) continue;
    int a = pos[e.u], b = pos[e.v];
    earlier_nbrs[std::max(a, b)].push_back(std::min(a, b));
  }

  std::function<void(int, int)> go = [&](int idx, int cur_max) {
    if (cur_max >= best) return;
    if (idx == m) {
      best = cur_max;
      return;
    }
    int lo_min = 0, lo_max = n - 1;
    if (pin[idx] >= 0) lo_max = pin[idx];
    for (int a = lo_min; a <= lo_max; ++a) {
      int hi_min = pin[idx] >= 0 ? std::max(a, pin[idx]) : a;
      for (int b = hi_min; b <= n - 1; ++b) {
        bool ok = true;
        for (int nb : earlier_nbrs[idx]) {
          auto [na, nbb] = interval[nb];
          if (b < na || nbb < a) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        interval[idx] = {a, b};
        int new_max = cur_max;
        for (int c = a; c < b; ++c) new_max = std::max(new_max, ++cut_load[c]);
        if (new_max < best) go(idx + 1, new_max);
        for (int c = a; c < b; ++c) --cut_load[c];
      }
    }
  };
  go(0, 0);
  return best;
}

std::pair<Vortex, VortexDecomposition> vortex_delete_vertex(
    const Vortex& v, const VortexDecomposition& d, Vertex x) {
  if (v.length() < 3)
    throw std::invalid_argument("deletion requires society length at least 3");
  if (d.kind != VortexDecomposition::Kind::kLinear)
    throw std::invalid_argument("deletion requires a linear decomposition");
  VortexCheck c = verify_vortex_decomposition(v, d);
  if (!c.valid)
    throw std::invalid_argument("invalid decomposition: " + c.violation);
  if (!v.graph.has_vertex(x))
    throw std::invalid_argument("vertex not in the vortex");

  Vortex out;
  out.graph = v.graph.without_vertices({x});
  VortexDecomposition nd;
  nd.kind = VortexDecomposition::Kind::kLinear;
  int n = v.length();
  int k = society_index(v, x);
  if (k == 0) {
    out.society = v.society;
    for (const auto& bag : d.bags) nd.bags.push_back(set_difference(bag, {x}));
  } else {
    for (int i = 1; i <= n; ++i)
      if (i != k) out.society.push_back(v.society[i - 1]);
    if (k < n) {
      for (int i = 1; i <= k - 1; ++i) nd.bags.push_back(d.bags[i - 1]);
      nd.bags.push_back(
          set_difference(set_union(d.bags[k - 1], d.bags[k]), {x}));
      for (int i = k + 2; i <= n; ++i) nd.bags.push_back(d.bags[i - 1]);
    } else {
      for (int i = 1; i <= n - 2; ++i) nd.bags.push_back(d.bags[i - 1]);
      nd.bags.push_back(
          set_difference(set_union(d.bags[n - 2], d.bags[n - 1]), {x}));
    }
  }
  return {std::move(out), std::move(nd)};
}

bool is_properly_attached(const Vortex& v) {
  require_vortex(v);
  VertexSet omega = v.society_set();
  int n = v.length();
  // (a) every pair joined by a path with no inner society vertices
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vertex u = v.society[a], w = v.society[b];
      MultiGraph h =
          v.graph.without_vertices(set_difference(omega, normalized({u, w})));
      if (!contains(h.component_of(u), w)) return false;
    }
  // (b) internally disjoint u-mid and mid-w paths for every triple
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = a + 1; c < n; ++c) {
        if (b == a || b == c) continue;
        Vertex u = v.society[a], mid = v.society[b], w = v.society[c];
        MultiGraph h = v.graph.without_vertices(
            set_difference(omega, normalized({u, mid, w})));
        // split mid into two terminals sharing its neighborhood
        Vertex m1 = h.vertices().back() + 1, m2 = m1 + 1;
        MultiGraph g2 = h.without_vertices({mid});
        g2.add_vertex(m1);
        g2.add_vertex(m2);
        for (int id : h.incident_edges(mid)) {
          const Edge& e = h.edge_by_id(id);
          if (e.is_loop()) continue;
          Vertex other = e.other(mid);
          g2.add_edge(other, m1);
          g2.add_edge(other, m2);
        }
        auto r = disjoint_paths(g2, normalized({u, w}), {m1, m2});
        if (r.linkage.size() < 2) return false;
      }
  return true;
}

MergeResult merge_vortices(const Vortex& v, const Vortex& w,
                           const VortexDecomposition& dv,
                           const VortexDecomposition& dw,
                           const VertexSet& curve_hits, int k, int l) {
  if (v.length() < 4 || w.length() < 4)
    throw std::invalid_argument("merging requires length at least 4");
  VortexCheck cv = verify_vortex_decomposition(v, dv);
  VortexCheck cw = verify_vortex_decomposition(w, dw);
  if (!cv.valid || !cw.valid)
    throw std::invalid_argument("invalid decomposition for merge");
  if (dv.kind != VortexDecomposition::Kind::kLinear ||
      dw.kind != VortexDecomposition::Kind::kLinear)
    throw std::invalid_argument("merge requires linear decompositions");
  if (!set_intersection(v.graph.vertices(), w.graph.vertices()).empty())
    throw std::invalid_argument("vortices must be vertex-disjoint");
  int n = v.length(), m = w.length();
  if (k < 1 || k > n || l < 1 || l > m)
    throw std::invalid_argument("society index out of range");

  Vertex vk = v.society[k - 1], wl = w.society[l - 1];
  VertexSet x_cut =
      k < n ? set_union(set_intersection(dv.bags[k - 1], dv.bags[k]), {vk})
            : VertexSet{vk};
  VertexSet y_cut =
      l > 1 ? set_union(set_intersection(dw.bags[l - 2], dw.bags[l - 1]), {wl})
            : VertexSet{wl};
  VertexSet apex = set_union(set_union(x_cut, y_cut), curve_hits);
  VertexSet all_society =
      set_union(v.society_set(), w.society_set());
  if (set_intersection(apex, all_society) != normalized({vk, wl}))
    throw std::invalid_argument(
        "merge_vortices: curve or cut meets a society vertex other than the "
        "two entry points");

  // rotate the v side so its deleted index comes last, merging the two bags
  // around it; same for the w side with the preceding overlap removed
  std::vector<Vertex> society;
  std::vector<VertexSet> bags;
  for (int t = 1; t < n; ++t) {
    int i = (k - 1 + t) % n + 1;  // k+1, ..., k-1 cyclically (1-based)
    society.push_back(v.society[i - 1]);
    if (t == n - 1) {
      bags.push_back(set_difference(
          set_union(dv.bags[i - 1], dv.bags[k - 1]), x_cut));
    } else {
      bags.push_back(dv.bags[i - 1]);
    }
  }
  for (int t = 1; t < m; ++t) {
    int i = (l - 1 + t) % m + 1;  // l+1, ..., l-1 cyclically
    society.push_back(w.society[i - 1]);
    if (t == 1) {
      bags.push_back(set_difference(
          set_union(dw.bags[l - 1], dw.bags[i - 1]), y_cut));
    } else {
      bags.push_back(dw.bags[i - 1]);
    }
  }

  MergeResult out;
  out.apex_add = apex;
  MultiGraph merged = v.graph;
  for (Vertex x : w.graph.vertices()) merged.add_vertex(x);
  for (const Edge& e : w.graph.edges()) {
    if (merged.has_edge_id(e.id))
      throw std::invalid_argument("edge ids of the two vortices collide");
    merged.add_edge_with_id(e.id, e.u, e.v);
  }
  out.merged.graph = merged.without_vertices(apex);
  out.merged.society = society;
  out.decomposition.kind = VortexDecomposition::Kind::kLinear;
  for (const auto& bag : bags)
    out.decomposition.bags.push_back(set_difference(bag, apex));
  VortexCheck check =
      verify_vortex_decomposition(out.merged, out.decomposition);
  if (!check.valid)
    throw std::invalid_argument("merge produced invalid decomposition: " +
                                check.violation);
  return out;
}

// ---------------------------------------------------------------------------
// Linked certificates.

bool verify_linked(const Vortex& v, const LinkedCertificate& c,
                   std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  bool circular = c.decomposition.kind == VortexDecomposition::Kind::kCircular;
  VortexCheck check = verify_vortex_decomposition(v, c.decomposition);
  if (!check.valid) return fail("decomposition invalid: " + check.violation);
  int n = v.length();
  VertexSet omega = v.society_set();
  const auto& bags = c.decomposition.bags;

  auto w_at = [&](int i) {  // 1-based with the linked wrap convention
    if (i >= 1) return v.society[i - 1];
    return circular ? v.society[n - 1] : v.society[0];
  };
  for (int i = 1; i <= n; ++i) {
    VertexSet expect = normalized({w_at(i - 1), w_at(i)});
    if (set_intersection(bags[i - 1], omega) != expect)
      return fail("bag " + std::to_string(i) +
                  " does not meet the society in {w_{i-1}, w_i}");
  }

  int zn = circular ? n : n - 1;
  std::vector<VertexSet> zsets;
  for (int i = 1; i <= zn; ++i)
    zsets.push_back(set_difference(
        set_intersection(bags[i - 1], bags[i % n]), omega));
  for (std::size_t i = 1; i < zsets.size(); ++i)
    if (zsets[i].size() != zsets[0].size())
      return fail("adhesion sets differ in size");
  if (!c.adhesion_sets.empty() && c.adhesion_sets != zsets)
    return fail("stored adhesion sets disagree with the decomposition");
  std::size_t q = zsets.empty() ? 0 : zsets[0].size();

  // linkage checks
  if ((circular && n >= 1) || (!circular && n > 2)) {
    if (c.linkage.size() != q) return fail("linkage has the wrong size");
  } else if (!c.linkage.empty()) {
    return fail("linkage must be empty for short vortices");
  }
  std::set<Vertex> used;
  for (const auto& path : c.linkage) {
    if (path.empty()) return fail("empty linkage path");
    for (Vertex x : path) {
      if (!v.graph.has_vertex(x)) return fail("linkage leaves the vortex");
      if (contains(omega, x)) return fail("linkage touches the society");
      if (!used.insert(x).second) return fail("linkage paths intersect");
    }
    int steps = static_cast<int>(path.size()) - (circular ? 0 : 1);
    for (int t = 0; t < steps; ++t)
      if (!v.graph.adjacent(path[t], path[(t + 1) % path.size()]))
        return fail("linkage path is not a walk");
  }
  if (q > 0 && !c.linkage.empty()) {
    if (!circular) {
      for (const auto& path : c.linkage) {
        // one vertex per adhesion set, in order, spanning the whole path
        std::vector<int> hit_pos(zn, -1);
        for (int t = 0; t < static_cast<int>(path.size()); ++t)
          for (int i = 0; i < zn; ++i)
            if (contains(zsets[i], path[t])) {
              if (hit_pos[i] >= 0)
                return fail("linkage path meets an adhesion set twice");
              hit_pos[i] = t;
            }
        for (int i = 0; i < zn; ++i)
          if (hit_pos[i] < 0)
            return fail("linkage path misses an adhesion set");
        // equal positions are fine: consecutive adhesion sets may share a
        // vertex, giving a trivial connecting subpath
        for (int i = 1; i < zn; ++i)
          if (hit_pos[i] < hit_pos[i - 1])
            return fail("adhesion sets crossed out of order");
        if (hit_pos[0] != 0 ||
            hit_pos[zn - 1] != static_cast<int>(path.size()) - 1)
          return fail("linkage path has a dangling tail");
        // segments live in their bag minus the society
        for (int i = 1; i < zn; ++i)
          for (int t = hit_pos[i - 1]; t <= hit_pos[i]; ++t)
            if (!contains(bags[i], path[t]))
              return fail("linkage segment leaves its bag");
      }
    } else {
      for (const auto& cyc : c.linkage) {
        // hits traverse the adhesion sets in cyclic order, possibly winding;
        // a vertex shared by consecutive sets yields several hits in place
        std::vector<std::pair<int, int>> hits;  // (position, z-index)
        for (int t = 0; t < static_cast<int>(cyc.size()); ++t) {
          std::vector<int> here;
          for (int i = 0; i < zn; ++i)
            if (contains(zsets[i], cyc[t])) here.push_back(i);
          if (here.empty()) continue;
          // order a consecutive run mod n from its start
          int start = here[0];
          if (here.size() > 1) {
            std::set<int> grp(here.begin(), here.end());
            for (int i : here)
              if (!grp.count((i + n - 1) % n)) start = i;
          }
          for (std::size_t s = 0; s < here.size(); ++s)
            hits.push_back({t, (start + static_cast<int>(s)) % n});
        }
        if (hits.empty()) return fail("linkage cycle misses the adhesion sets");
        for (std::size_t h = 0; h < hits.size(); ++h) {
          int cur = hits[h].second;
          int nxt = hits[(h + 1) % hits.size()].second;
          if (nxt != (cur + 1) % n)
            return fail("linkage cycle skips an adhesion set");
          // segment between the two hits stays in the bag they share
          int from = hits[h].first;
          int to = hits[(h + 1) % hits.size()].first;
          int len = static_cast<int>(cyc.size());
          for (int t = from; ; t = (t + 1) % len) {
            if (!contains(bags[nxt], cyc[t]))
              return fail("linkage segment leaves its bag");
            if (t == to) break;
          }
        }
      }
      // every adhesion vertex is visited exactly once overall
      VertexSet all_z;
      for (const auto& z : zsets) all_z = set_union(all_z, z);
      VertexSet all_link;
      for (const auto& cyc : c.linkage)
        all_link = set_union(all_link, normalized(cyc));
      if (!is_subset(all_z, all_link))
        return fail("adhesion vertex missed by the linkage");
    }
  }

  // society path / cycle
  if (c.society_path.empty()) return fail("missing society path");
  for (Vertex x : c.society_path)
    if (!v.graph.has_vertex(x)) return fail("society path leaves the vortex");
  int steps = static_cast<int>(c.society_path.size()) - (circular ? 0 : 1);
  for (int t = 0; t < steps; ++t)
    if (!v.graph.adjacent(c.society_path[t],
                          c.society_path[(t + 1) % c.society_path.size()]))
      return fail("society path is not a walk");
  for (Vertex x : c.society_path)
    if (used.count(x)) return fail("society path meets the linkage");
  // traverses w_1..w_n in order (circular walks may start anywhere)
  std::vector<Vertex> walk = c.society_path;
  if (circular) {
    auto it = std::find(walk.begin(), walk.end(), v.society.front());
    if (it == walk.end()) return fail("society cycle misses w_1");
    std::rotate(walk.begin(), it, walk.end());
  }
  std::size_t next = 0;
  for (Vertex x : walk)
    if (next < v.society.size() && x == v.society[next]) ++next;
  if (next != v.society.size())
    return fail("society path does not traverse the society in order");
  return true;
}

// ---------------------------------------------------------------------------
// The linking algorithm (Lemma-style, linear and circular).

namespace {

struct CurveToSociety {
  std::vector<Vertex> verts;  // hits: start on the outer cycle, ..., society
  std::vector<int> faces;     // faces[i] is crossed after verts[i]
};

// minimum-vertex curve from `start` to the society, by BFS over the radial
// structure (faces are free, vertices cost one)
CurveToSociety min_curve_to_society(const EmbeddedGraph& host,
                                    const FaceTrace& tr, Vertex start,
                                    const VertexSet& omega) {
  std::map<Vertex, std::vector<int>> faces_of_vertex;
  for (const auto& [key, fid] : tr.corner_face)
    faces_of_vertex[key.first].push_back(fid);
  for (auto& [v, fs] : faces_of_vertex) fs = normalized(std::move(fs));

  std::map<Vertex, std::pair<int, int>> vparent;  // vertex -> (face, vertex)
  std::map<int, Vertex> fparent;                  // face -> vertex
  std::deque<std::pair<bool, int>> queue{{true, start}};
  vparent[start] = {-1, -1};
  Vertex goal = -1;
  while (!queue.empty() && goal < 0) {
    auto [is_vertex, id] = queue.front();
    queue.pop_front();
    if (is_vertex) {
      for (int f : faces_of_vertex[id])
        if (!fparent.count(f)) {
          fparent[f] = id;
          queue.push_back({false, f});
        }
    } else {
      for (Vertex wv : tr.faces[id].vertex_set)
        if (!vparent.count(wv)) {
          vparent[wv] = {id, fparent[id]};
          if (contains(omega, wv)) {
            goal = wv;
            break;
          }
          queue.push_back({true, wv});
        }
    }
  }
  if (goal < 0 && contains(omega, start)) goal = start;
  if (goal < 0)
    throw std::invalid_argument("no curve from the cycle to the society");

  CurveToSociety out;
  Vertex cur = goal;
  std::vector<Vertex> rverts;
  std::vector<int> rfaces;
  while (cur != start) {
    auto [f, prev] = vparent.at(cur);
    rverts.push_back(cur);
    rfaces.push_back(f);
    cur = prev;
  }
  rverts.push_back(start);
  out.verts.assign(rverts.rbegin(), rverts.rend());
  out.faces.assign(rfaces.rbegin(), rfaces.rend());
  return out;
}

MultiGraph union_graphs(const MultiGraph& a, const MultiGraph& b) {
  MultiGraph g = a;
  for (Vertex v : b.vertices()) g.add_vertex(v);
  for (const Edge& e : b.edges()) {
    if (g.has_edge_id(e.id))
      throw std::invalid_argument("edge id collision between host and vortex");
    g.add_edge_with_id(e.id, e.u, e.v);
  }
  return g;
}

struct ArcSplit {
  std::vector<EdgeEnd> arc_a;  // strictly after gap_in, through gap_out
  std::vector<EdgeEnd> arc_b;
};

ArcSplit rotation_arcs(const EmbeddedGraph& host, Vertex v, int gap_in,
                       int gap_out) {
  const auto& rot = host.rotation(v);
  int d = static_cast<int>(rot.size());
  ArcSplit s;
  if (gap_in == gap_out) {
    for (int i = 1; i <= d; ++i) s.arc_a.push_back(rot[(gap_in + i) % d]);
    return s;
  }
  for (int i = (gap_in + 1) % d;; i = (i + 1) % d) {
    s.arc_a.push_back(rot[i]);
    if (i == gap_out) break;
  }
  for (int i = (gap_out + 1) % d;; i = (i + 1) % d) {
    s.arc_b.push_back(rot[i]);
    if (i == gap_in) break;
  }
  return s;
}

struct CurveCrossing {
  Vertex vertex;
  int gap_in;
  int gap_out;
  Vertex neighbor_a;  // cycle neighbor on the arc-a side (x side)
  Vertex neighbor_b;  // cycle neighbor on the arc-b side (y side)
  EdgeEnd end_a;      // the cycle-edge end lying in arc a
  EdgeEnd end_b;
};

// Resolve the crossing of the curve through cycle vertex s: pick corners
// from the allowed arrival gaps and the out-face's gaps so that the two
// cycle-edge ends fall on opposite sides.
CurveCrossing resolve_crossing(const EmbeddedGraph& host, const FaceTrace& tr,
                               Vertex s, const std::vector<int>& gins,
                               int face_out,
                               const std::vector<Vertex>& cycle) {
  int pos = -1;
  int len = static_cast<int>(cycle.size());
  for (int i = 0; i < len; ++i)
    if (cycle[i] == s) pos = i;
  if (pos < 0) throw std::logic_error("crossing vertex not on its cycle");
  EmbeddedCycle ec = EmbeddedCycle::from_vertices(host.graph(), cycle);
  auto end_at = [&](int edge_id) -> EdgeEnd {
    const Edge& ed = host.graph().edge_by_id(edge_id);
    return {edge_id, ed.u == s ? 0 : 1};
  };
  EdgeEnd toward_next = end_at(ec.edges[pos]);
  EdgeEnd toward_prev = end_at(ec.edges[(pos + len - 1) % len]);

  const auto& rot = host.rotation(s);
  int d = static_cast<int>(rot.size());
  for (int gin : gins) {
    for (int gout = 0; gout < d; ++gout) {
      if (tr.corner_face.at({s, gout}) != face_out) continue;
      ArcSplit arcs = rotation_arcs(host, s, gin, gout);
      bool next_in_a = std::find(arcs.arc_a.begin(), arcs.arc_a.end(),
                                 toward_next) != arcs.arc_a.end();
      bool prev_in_a = std::find(arcs.arc_a.begin(), arcs.arc_a.end(),
                                 toward_prev) != arcs.arc_a.end();
      if (next_in_a == prev_in_a) continue;  // not transversal
      CurveCrossing c;
      c.vertex = s;
      c.gap_in = gin;
      c.gap_out = gout;
      Vertex next_v = cycle[(pos + 1) % len];
      Vertex prev_v = cycle[(pos + len - 1) % len];
      if (next_in_a) {
        c.neighbor_a = next_v;
        c.neighbor_b = prev_v;
        c.end_a = toward_next;
        c.end_b = toward_prev;
      } else {
        c.neighbor_a = prev_v;
        c.neighbor_b = next_v;
        c.end_a = toward_prev;
        c.end_b = toward_next;
      }
      return c;
    }
  }
  throw std::invalid_argument(
      "curve does not cross its enclosing cycle transversally");
}

// faces of the host lying inside the disc of the outermost cycle
std::set<int> faces_inside_cycle(const EmbeddedGraph& host,
                                 const FaceTrace& tr,
                                 const EmbeddedCycle& outer,
                                 const VertexSet& interior) {
  // dual BFS from a face seen only from the interior, not crossing the
  // cycle's edges
  std::set<int> blocked(outer.edges.begin(), outer.edges.end());
  int seed = -1;
  for (const Face& f : tr.faces)
    if (!set_intersection(f.vertex_set, interior).empty()) {
      seed = f.id;
      break;
    }
  if (seed < 0) return {};
  std::set<int> seen{seed};
  std::deque<int> queue{seed};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (const auto& [eid, sides] : tr.edge_sides) {
      if (blocked.count(eid)) continue;
      if (sides.first != f && sides.second != f) continue;
      for (int g : {sides.first, sides.second})
        if (!seen.count(g)) {
          seen.insert(g);
          queue.push_back(g);
        }
    }
  }
  return seen;
}

struct LinkSetup {
  VertexSet s_hits;          // vertices hit by the curve (incl. society end)
  VertexSet z_delete;        // the adhesion set Z (plus w_j when interior)
  std::vector<CurveCrossing> crossings;  // one per enclosing cycle
  Vertex society_hit;
  VertexSet region_inside;   // strictly inside the outermost cycle
};

LinkSetup prepare_link(const EmbeddedGraph& host, const Vortex& v,
                       const VortexDecomposition& d,
                       const ConcentricFamily& enclosure) {
  require_vortex(v);
  VortexCheck check = verify_vortex_decomposition(v, d);
  if (!check.valid)
    throw std::invalid_argument("link_vortex: invalid decomposition: " +
                                check.violation);
  if (d.kind != VortexDecomposition::Kind::kLinear)
    throw std::invalid_argument("link_vortex: linear decomposition required");
  int alpha2 = static_cast<int>(enclosure.size()) - 1;
  if (alpha2 < 0)
    throw std::invalid_argument("link_vortex: empty enclosure");
  if (check.adhesion > alpha2)
    throw std::invalid_argument(
        "link_vortex: adhesion exceeds the enclosure bound");
  VertexSet omega = v.society_set();
  if (!is_subset(omega, host.graph().vertices()))
    throw std::invalid_argument("link_vortex: society not embedded in host");
  VertexSet interior = v.interior();
  if (!set_intersection(interior, host.graph().vertices()).empty())
    throw std::invalid_argument(
        "link_vortex: vortex interior collides with host vertex ids");
  if (!is_tightly_enclosing(host, enclosure, omega))
    throw std::invalid_argument(
        "link_vortex: enclosure is not tightly enclosing");

  FaceTrace tr = trace_faces(host);
  Vertex start = normalized(enclosure.cycles[0]).front();
  CurveToSociety curve = min_curve_to_society(host, tr, start, omega);

  LinkSetup setup;
  setup.s_hits = normalized(curve.verts);
  int n_cycles = static_cast<int>(enclosure.size());
  if (static_cast<int>(curve.verts.size()) != n_cycles + 1)
    throw std::invalid_argument(
        "link_vortex: minimal curve does not cross each cycle exactly once");
  for (int i = 0; i < n_cycles; ++i) {
    Vertex s = curve.verts[i];
    if (!contains(normalized(enclosure.cycles[i]), s))
      throw std::invalid_argument(
          "link_vortex: curve hit lies on the wrong cycle");
    int f_out = curve.faces[i];
    int d_rot = static_cast<int>(host.rotation(s).size());
    std::vector<int> gins;
    if (i == 0) {
      // orient the start split against the corners outside the disc
      EmbeddedCycle outer =
          EmbeddedCycle::from_vertices(host.graph(), enclosure.cycles[0]);
      VertexSet inside = disc_interior(host, outer, omega);
      setup.region_inside = inside;
      std::set<int> in_faces = faces_inside_cycle(host, tr, outer, inside);
      for (int g = 0; g < d_rot; ++g)
        if (!in_faces.count(tr.corner_face.at({s, g}))) gins.push_back(g);
      if (gins.empty())
        throw std::invalid_argument(
            "link_vortex: outer cycle vertex has no exterior corner");
    } else {
      int f_in = curve.faces[i - 1];
      for (int g = 0; g < d_rot; ++g)
        if (tr.corner_face.at({s, g}) == f_in) gins.push_back(g);
    }
    setup.crossings.push_back(
        resolve_crossing(host, tr, s, gins, f_out, enclosure.cycles[i]));
  }
  setup.society_hit = curve.verts.back();
  int j = society_index(v, setup.society_hit);
  if (j == 0) throw std::logic_error("curve endpoint is not a society vertex");
  int n = v.length();
  if (j != 1 && j != n) {
    VertexSet zj = set_difference(
        set_intersection(d.bags[j - 1], d.bags[j]), omega);
    setup.z_delete = set_union(zj, {setup.society_hit});
  }
  return setup;
}

std::vector<Vertex> path_containing(const std::vector<std::vector<Vertex>>& ps,
                                    Vertex x) {
  for (const auto& p : ps)
    if (std::find(p.begin(), p.end(), x) != p.end()) return p;
  throw std::logic_error("no path contains the requested endpoint");
}

}  // namespace

LinkResult link_vortex(const EmbeddedGraph& host, const Vortex& v,
                       const VortexDecomposition& d,
                       const ConcentricFamily& enclosure) {
  LinkSetup setup = prepare_link(host, v, d, enclosure);
  int alpha2 = static_cast<int>(enclosure.size()) - 1;
  VertexSet omega = v.society_set();
  VertexSet deleted = set_union(setup.s_hits, setup.z_delete);

  VertexSet x_set, y_set;
  for (const auto& c : setup.crossings) {
    x_set.push_back(c.neighbor_a);
    y_set.push_back(c.neighbor_b);
  }
  Vertex x0 = setup.crossings[0].neighbor_a;
  Vertex y0 = setup.crossings[0].neighbor_b;
  Vertex start = setup.crossings[0].vertex;
  x_set = normalized(std::move(x_set));
  y_set = normalized(std::move(y_set));
  if (static_cast<int>(x_set.size()) != alpha2 + 1 ||
      static_cast<int>(y_set.size()) != alpha2 + 1 ||
      !set_intersection(x_set, y_set).empty())
    throw std::invalid_argument("link_vortex: degenerate cycle neighborhoods");

  VertexSet region_verts = set_union(setup.region_inside,
                                     normalized(enclosure.cycles[0]));
  auto build_region = [&](const VertexSet& keep_host) {
    MultiGraph r = union_graphs(host.graph().induced(keep_host), v.graph);
    return r.without_vertices(deleted);
  };
  MultiGraph region = build_region(region_verts);

  auto flow = [&](const MultiGraph& g) { return disjoint_paths(g, x_set, y_set); };
  DisjointPathsResult cur = flow(region);
  if (static_cast<int>(cur.linkage.size()) < alpha2 + 1)
    throw std::invalid_argument(
        "link_vortex: fewer than adhesion+1 disjoint X-Y paths");

  VertexSet vortex_interior = v.interior();
  auto p0_of = [&](const DisjointPathsResult& r) {
    std::vector<Vertex> p0 = path_containing(r.linkage.paths, x0);
    if (p0.front() != x0) std::reverse(p0.begin(), p0.end());
    if (p0.back() != y0)
      throw std::logic_error(
          "link_vortex: outermost path does not join the outer stubs");
    if (!set_intersection(normalized(p0), vortex_interior).empty())
      throw std::logic_error(
          "link_vortex: outermost path enters the vortex interior");
    return p0;
  };
  std::vector<Vertex> p0 = p0_of(cur);

  auto region_of_p0 = [&](const std::vector<Vertex>& path) {
    std::vector<Vertex> cyc{start};
    cyc.insert(cyc.end(), path.begin(), path.end());
    EmbeddedCycle ec = EmbeddedCycle::from_vertices(host.graph(), cyc);
    VertexSet anchor = set_difference(omega, normalized(cyc));
    if (anchor.empty())
      throw std::invalid_argument(
          "link_vortex: society degenerately meets the boundary path");
    VertexSet inside = disc_interior(host, ec, anchor);
    return set_union(inside, normalized(cyc));
  };

  VertexSet cur_region_verts = region_of_p0(p0);
  region = build_region(cur_region_verts);
  cur = flow(region);
  p0 = p0_of(cur);

  // push the path system as deep as possible: while some single interior
  // vertex of the outermost path can be avoided, reroute
  for (;;) {
    bool improved = false;
    for (std::size_t t = 1; t + 1 < p0.size() && !improved; ++t) {
      MultiGraph smaller = region.without_vertices({p0[t]});
      DisjointPathsResult probe = flow(smaller);
      if (static_cast<int>(probe.linkage.size()) >= alpha2 + 1) {
        std::vector<Vertex> new_p0 = p0_of(probe);
        VertexSet new_region_verts = region_of_p0(new_p0);
        if (new_region_verts.size() >= cur_region_verts.size())
          throw std::logic_error("link_vortex: region failed to shrink");
        cur_region_verts = std::move(new_region_verts);
        region = build_region(cur_region_verts);
        cur = flow(region);
        p0 = p0_of(cur);
        improved = true;
      }
    }
    if (!improved) break;
  }

  // read the linked decomposition off leftmost minimal separators, one at
  // each vertex of the outermost path except the last
  int r = static_cast<int>(p0.size()) - 1;  // p_0 .. p_r
  std::vector<Separation> seps;
  for (int i = 0; i < r; ++i) {
    Separation s = leftmost_min_separator(region, x_set, y_set, p0[i]);
    if (s.order() != alpha2 + 1)
      throw std::logic_error("link_vortex: separator order mismatch");
    seps.push_back(std::move(s));
  }
  for (int i = 1; i < r; ++i) {
    if (!is_subset(seps[i].side_b, seps[i - 1].side_b) ||
        seps[i].side_b == seps[i - 1].side_b)
      throw std::logic_error(
          "link_vortex: separations are not strictly decreasing");
  }

  LinkResult out;
  out.deleted = deleted;
  out.vortex.graph = region;
  out.vortex.society = p0;
  out.certificate.decomposition.kind = VortexDecomposition::Kind::kLinear;
  auto& bags = out.certificate.decomposition.bags;
  bags.push_back(seps[0].side_a);
  for (int i = 2; i <= r; ++i)
    bags.push_back(
        set_intersection(seps[i - 1].side_a, seps[i - 2].side_b));
  bags.push_back(seps[r - 1].side_b);

  VertexSet new_omega = normalized(p0);
  for (int i = 1; i <= r; ++i)
    out.certificate.adhesion_sets.push_back(set_difference(
        set_intersection(bags[i - 1], bags[i]), new_omega));

  // the linkage: the other paths, trimmed at their first and last
  // adhesion-set vertices
  for (const auto& path : cur.linkage.paths) {
    if (std::find(path.begin(), path.end(), x0) != path.end()) continue;
    std::vector<Vertex> p = path;
    if (!contains(x_set, p.front())) std::reverse(p.begin(), p.end());
    if (r >= 2) {
      int first = -1, last = -1;
      for (int t = 0; t < static_cast<int>(p.size()); ++t) {
        bool in_z0 = contains(out.certificate.adhesion_sets.front(), p[t]);
        bool in_zr = contains(out.certificate.adhesion_sets.back(), p[t]);
        if (in_z0 && first < 0) first = t;
        if (in_zr) last = t;
      }
      if (first < 0 || last < 0 || last < first)
        throw std::logic_error("link_vortex: path misses its adhesion layer");
      out.certificate.linkage.push_back(
          std::vector<Vertex>(p.begin() + first, p.begin() + last + 1));
    }
  }
  out.certificate.society_path = p0;

  std::string why;
  if (!verify_linked(out.vortex, out.certificate, &why)) {
#ifdef GMS_LINK_DEBUG
    fprintf(stderr, "p0:");
    for (Vertex w : p0) fprintf(stderr, " %d", w);
    fprintf(stderr, "\nbags:\n");
    for (const auto& b : bags) {
      for (Vertex w : b) fprintf(stderr, " %d", w);
      fprintf(stderr, "\n");
    }
    fprintf(stderr, "linkage:\n");
    for (const auto& p : out.certificate.linkage) {
      for (Vertex w : p) fprintf(stderr, " %d", w);
      fprintf(stderr, "\n");
    }
    fprintf(stderr, "zsets:\n");
    for (const auto& z : out.certificate.adhesion_sets) {
      for (Vertex w : z) fprintf(stderr, " %d", w);
      fprintf(stderr, "\n");
    }
    fprintf(stderr, "full flow paths:\n");
    for (const auto& p : cur.linkage.paths) {
      for (Vertex w : p) fprintf(stderr, " %d", w);
      fprintf(stderr, "\n");
    }
#endif
    throw std::logic_error("link_vortex: certificate rejected: " + why);
  }
  return out;
}

LinkResult link_vortex_circular(const EmbeddedGraph& host, const Vortex& v,
                                const VortexDecomposition& d,
                                const ConcentricFamily& enclosure) {
  LinkSetup setup = prepare_link(host, v, d, enclosure);
  int alpha2 = static_cast<int>(enclosure.size()) - 1;
  VertexSet omega = v.society_set();

  // split every curve hit on a cycle into two copies along the curve; the
  // copies take ids beyond both the host's and the vortex's
  EmbeddedGraph split_host = host;
  Vertex next_id = std::max(split_host.fresh_vertex_id(),
                            v.graph.vertices().back() + 1);
  std::map<Vertex, std::pair<Vertex, Vertex>> copies;  // s -> (x side, y side)
  for (const auto& c : setup.crossings) {
    // identify the arcs by their edge-end content after previous splits
    auto [a, b] = split_host.split_vertex(c.vertex, c.gap_in, c.gap_out,
                                          next_id, next_id + 1);
    next_id += 2;
    // split_vertex's first arc runs strictly after gap_in through gap_out,
    // which is the arc containing end_a exactly when resolve_crossing said so
    const auto& rot_a = split_host.rotation(a);
    bool a_has_end_a =
        std::find(rot_a.begin(), rot_a.end(), c.end_a) != rot_a.end();
    copies[c.vertex] = a_has_end_a ? std::make_pair(a, b)
                                   : std::make_pair(b, a);
  }

  VertexSet x_set, y_set;
  std::map<Vertex, Vertex> back;  // copy -> original
  for (const auto& c : setup.crossings) {
    auto [xa, yb] = copies.at(c.vertex);
    x_set.push_back(xa);
    y_set.push_back(yb);
    back[xa] = c.vertex;
    back[yb] = c.vertex;
  }
  Vertex x0 = copies.at(setup.crossings[0].vertex).first;
  Vertex y0 = copies.at(setup.crossings[0].vertex).second;
  x_set = normalized(std::move(x_set));
  y_set = normalized(std::move(y_set));

  // the curve's society endpoint goes too: it is the cut's foot, and host
  // edges around it would otherwise slip under the slit
  VertexSet deleted = set_union(setup.z_delete, {setup.society_hit});
  auto map_to_split = [&](const VertexSet& host_verts) {
    VertexSet out;
    for (Vertex w : host_verts) {
      if (copies.count(w)) {
        out.push_back(copies[w].first);
        out.push_back(copies[w].second);
      } else {
        out.push_back(w);
      }
    }
    return normalized(std::move(out));
  };

  VertexSet region_host = set_union(setup.region_inside,
                                    normalized(enclosure.cycles[0]));
  auto build_region = [&](const VertexSet& keep_host) {
    MultiGraph r = union_graphs(
        split_host.graph().induced(map_to_split(keep_host)), v.graph);
    return r.without_vertices(deleted);
  };
  MultiGraph region = build_region(region_host);
  auto flow = [&](const MultiGraph& g) { return disjoint_paths(g, x_set, y_set); };
  DisjointPathsResult cur = flow(region);
  if (static_cast<int>(cur.linkage.size()) < alpha2 + 1)
    throw std::invalid_argument(
        "link_vortex_circular: fewer than adhesion+1 disjoint X-Y paths");

  VertexSet vortex_interior = v.interior();
  auto p0_of = [&](const DisjointPathsResult& r) {
    std::vector<Vertex> p0 = path_containing(r.linkage.paths, x0);
    if (p0.front() != x0) std::reverse(p0.begin(), p0.end());
    if (p0.back() != y0 ||
        !set_intersection(normalized(p0), vortex_interior).empty()) {
#ifdef GMS_LINK_DEBUG
      fprintf(stderr, "x0=%d y0=%d deleted:", x0, y0);
      for (Vertex w : deleted) fprintf(stderr, " %d", w);
      fprintf(stderr, "\nsplit copies:");
      for (auto& [s, cp] : copies)
        fprintf(stderr, " %d->(%d,%d)", s, cp.first, cp.second);
      fprintf(stderr, "\npaths:\n");
      for (const auto& p : r.linkage.paths) {
        for (Vertex w : p) fprintf(stderr, " %d", w);
        fprintf(stderr, "\n");
      }
#endif
      throw std::logic_error(
          p0.back() != y0
              ? "link_vortex_circular: outer path does not close up"
              : "link_vortex_circular: outer path enters the vortex interior");
    }
    return p0;
  };
  std::vector<Vertex> p0 = p0_of(cur);

  auto region_of_p0 = [&](const std::vector<Vertex>& path) {
    // map back to the unsplit host, closing the cycle through the hit
    std::vector<Vertex> cyc;
    for (Vertex w : path) {
      Vertex orig = back.count(w) ? back[w] : w;
      if (cyc.empty() || cyc.back() != orig) cyc.push_back(orig);
    }
    if (cyc.size() >= 2 && cyc.front() == cyc.back()) cyc.pop_back();
    EmbeddedCycle ec = EmbeddedCycle::from_vertices(host.graph(), cyc);
    VertexSet anchor = set_difference(omega, normalized(cyc));
    if (anchor.empty())
      throw std::invalid_argument(
          "link_vortex_circular: society meets the boundary cycle");
    VertexSet inside = disc_interior(host, ec, anchor);
    return set_union(inside, normalized(cyc));
  };

  VertexSet cur_region_host = region_of_p0(p0);
  region = build_region(cur_region_host);
  cur = flow(region);
  p0 = p0_of(cur);

  for (;;) {
    bool improved = false;
    for (std::size_t t = 1; t + 1 < p0.size() && !improved; ++t) {
      MultiGraph smaller = region.without_vertices({p0[t]});
      DisjointPathsResult probe = flow(smaller);
      if (static_cast<int>(probe.linkage.size()) >= alpha2 + 1) {
        std::vector<Vertex> new_p0 = p0_of(probe);
        VertexSet new_region = region_of_p0(new_p0);
        if (new_region.size() >= cur_region_host.size())
          throw std::logic_error(
              "link_vortex_circular: region failed to shrink");
        cur_region_host = std::move(new_region);
        region = build_region(cur_region_host);
        cur = flow(region);
        p0 = p0_of(cur);
        improved = true;
      }
    }
    if (!improved) break;
  }

  int r = static_cast<int>(p0.size()) - 1;
  std::vector<Separation> seps;
  for (int i = 0; i < r; ++i) {
    Separation s = leftmost_min_separator(region, x_set, y_set, p0[i]);
    if (s.order() != alpha2 + 1)
      throw std::logic_error("link_vortex_circular: separator order mismatch");
    seps.push_back(std::move(s));
  }

  // bags over the split region, then identify the copies
  std::vector<VertexSet> bags;
  bags.push_back(seps[0].side_a);
  for (int i = 2; i <= r; ++i)
    bags.push_back(set_intersection(seps[i - 1].side_a, seps[i - 2].side_b));
  bags.push_back(seps[r - 1].side_b);

  auto identify_set = [&](const VertexSet& s) {
    VertexSet out;
    for (Vertex w : s) out.push_back(back.count(w) ? back[w] : w);
    return normalized(std::move(out));
  };
  auto identify_path = [&](const std::vector<Vertex>& p, bool close) {
    std::vector<Vertex> out;
    for (Vertex w : p) out.push_back(back.count(w) ? back[w] : w);
    if (close && out.size() >= 2 && out.front() == out.back()) out.pop_back();
    return out;
  };

  LinkResult out;
  out.deleted = deleted;
  // vortex graph: the split region with copies merged back
  {
    MultiGraph merged;
    for (Vertex w : region.vertices())
      merged.add_vertex(back.count(w) ? back[w] : w);
    for (const Edge& e : region.edges()) {
      Vertex u2 = back.count(e.u) ? back[e.u] : e.u;
      Vertex v2 = back.count(e.v) ? back[e.v] : e.v;
      merged.add_edge_with_id(e.id, u2, v2);
    }
    out.vortex.graph = std::move(merged);
  }
  out.vortex.society = identify_path(p0, true);

  out.certificate.decomposition.kind = VortexDecomposition::Kind::kCircular;
  auto& cbags = out.certificate.decomposition.bags;
  cbags.push_back(identify_set(set_union(bags.front(), bags.back())));
  for (int i = 1; i < r; ++i) cbags.push_back(identify_set(bags[i]));

  int n2 = static_cast<int>(out.vortex.society.size());
  VertexSet new_omega = normalized(out.vortex.society);
  for (int i = 0; i < n2; ++i)
    out.certificate.adhesion_sets.push_back(set_difference(
        set_intersection(cbags[i], cbags[(i + 1) % n2]), new_omega));

  for (const auto& path : cur.linkage.paths) {
    if (std::find(path.begin(), path.end(), x0) != path.end()) continue;
    std::vector<Vertex> p = path;
    if (!contains(x_set, p.front())) std::reverse(p.begin(), p.end());
    out.certificate.linkage.push_back(identify_path(p, true));
  }
  out.certificate.society_path = out.vortex.society;

  std::string why;
  if (!verify_linked(out.vortex, out.certificate, &why))
    throw std::logic_error("link_vortex_circular: certificate rejected: " +
                           why);
  return out;
}

CircularToLinear circular_to_linear(const Vortex& v,
                                    const VortexDecomposition& d,
                                    int cut_index) {
  if (d.kind != VortexDecomposition::Kind::kCircular)
    throw std::invalid_argument("circular decomposition required");
  VortexCheck check = verify_vortex_decomposition(v, d);
  if (!check.valid)
    throw std::invalid_argument("invalid circular decomposition: " +
                                check.violation);
  int n = v.length();
  if (cut_index < 1 || cut_index > n)
    throw std::invalid_argument("cut index out of range");
  VertexSet cut = set_intersection(d.bags[(cut_index + n - 2) % n],
                                   d.bags[cut_index - 1]);

  // rotate so the cut seam is the wrap, then delete the overlap; society
  // deletions merge away from the seam so it stays clean
  Vortex cv = v;
  std::vector<VertexSet> bags;
  for (int i = 0; i < n; ++i)
    bags.push_back(d.bags[(cut_index - 1 + i) % n]);
  {
    std::vector<Vertex> soc;
    for (int i = 0; i < n; ++i)
      soc.push_back(v.society[(cut_index - 1 + i) % n]);
    cv.society = std::move(soc);
  }
  for (Vertex x : cut) {
    int m = cv.length();
    int k = society_index(cv, x);
    if (k == 0) {
      for (auto& bag : bags) bag = set_difference(bag, {x});
    } else {
      if (m <= 1)
        throw std::invalid_argument("cut would delete the whole society");
      int into = k == m ? k - 1 : k + 1;  // merge away from the wrap seam
      bags[into - 1] = set_union(bags[into - 1], bags[k - 1]);
      bags.erase(bags.begin() + (k - 1));
      cv.society.erase(cv.society.begin() + (k - 1));
      for (auto& bag : bags) bag = set_difference(bag, {x});
    }
    cv.graph = cv.graph.without_vertices({x});
  }

  int m = cv.length();
  if (m == 0)
    throw std::invalid_argument("cut would delete the whole society");
  CircularToLinear out;
  out.deleted = cut;
  out.vortex.graph = cv.graph;
  out.vortex.society = cv.society;
  out.decomposition.bags = bags;
  out.decomposition.kind = VortexDecomposition::Kind::kLinear;
  VortexCheck lin = verify_vortex_decomposition(out.vortex, out.decomposition);
  if (!lin.valid)
    throw std::logic_error("circular_to_linear: result invalid: " +
                           lin.violation);
  return out;
}

}  // namespace gms
