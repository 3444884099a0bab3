#include "gms/tangle.hpp"

#include <algorithm>
#include <set>

namespace gms {

std::vector<Separation> enumerate_separations(const MultiGraph& g,
                                              int below_order) {
  const VertexSet& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  if (n > 20)
    throw std::invalid_argument("separation enumeration limited to 20 vertices");
  std::vector<Separation> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet sep;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sep.push_back(vs[i]);
    if (static_cast<int>(sep.size()) >= below_order) continue;
    std::vector<VertexSet> comps = g.without_vertices(sep).components();
    int k = static_cast<int>(comps.size());
    for (unsigned am = 0; am < (1u << k); ++am) {
      VertexSet a = sep, b = sep;
      for (int i = 0; i < k; ++i) {
        if (am & (1u << i))
          a = set_union(a, comps[i]);
        else
          b = set_union(b, comps[i]);
      }
      if (a.empty() || b.empty()) continue;
      out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TangleCheck verify_tangle(const MultiGraph& g, const Tangle& t) {
  if (g.vertex_count() > 12)
    throw std::invalid_argument("verify_tangle limited to 12 vertices");
  auto fail = [](std::string why) {
    TangleCheck c;
    c.violation = std::move(why);
    return c;
  };
  std::set<Separation> members(t.oriented.begin(), t.oriented.end());
  for (const Separation& s : t.oriented) {
    if (!verify_separation(g, s)) return fail("member is not a separation");
    if (s.order() >= t.order) return fail("member order too large");
    if (members.count(s.flipped()))
      return fail("both orientations of a separation present");
  }
  for (const Separation& s : enumerate_separations(g, t.order))
    if (!members.count(s) && !members.count(s.flipped()))
      return fail("separation of small order left unoriented");
  // axiom (2): no three small sides cover the graph (with repetition)
  int m = static_cast<int>(t.oriented.size());
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k) {
        const VertexSet& a1 = t.oriented[i].side_a;
        const VertexSet& a2 = t.oriented[j].side_a;
        const VertexSet& a3 = t.oriented[k].side_a;
        if (set_union(set_union(a1, a2), a3) != g.vertices()) continue;
        bool edges_covered = true;
        for (const Edge& e : g.edges()) {
          bool in1 = contains(a1, e.u) && contains(a1, e.v);
          bool in2 = contains(a2, e.u) && contains(a2, e.v);
          bool in3 = contains(a3, e.u) && contains(a3, e.v);
          if (!in1 && !in2 && !in3) {
            edges_covered = false;
            break;
          }
        }
        if (edges_covered) {
          TangleCheck c;
          c.violation = "three small sides cover the graph";
          c.violating_triple = {t.oriented[i], t.oriented[j], t.oriented[k]};
          return c;
        }
      }
  TangleCheck c;
  c.valid = true;
  return c;
}

std::variant<Tangle, Separation> majority_tangle(const MultiGraph& g,
                                                 const VertexSet& z,
                                                 int theta) {
  if (static_cast<int>(z.size()) != 3 * theta - 2)
    throw std::invalid_argument("majority_tangle requires |z| = 3*theta - 2");
  if (!is_subset(z, g.vertices()))
    throw std::invalid_argument("z must be a vertex subset");
  // balanced low-order separation: the witness the induction recurses on
  for (const Separation& s : enumerate_separations(g, theta + 1)) {
    int cut = s.order();
    int za = static_cast<int>(set_difference(z, s.side_a).size());
    int zb = static_cast<int>(set_difference(z, s.side_b).size());
    if (za >= cut && zb >= cut) return s;
  }
  Tangle t;
  t.order = theta;
  for (const Separation& s : enumerate_separations(g, theta)) {
    int ina = static_cast<int>(set_intersection(z, s.side_a).size());
    int inb = static_cast<int>(set_intersection(z, s.side_b).size());
    if (inb > ina) t.oriented.push_back(s);
  }
  // every small side holds a minority of z
  for (const Separation& s : t.oriented) {
    int strict = static_cast<int>(
        set_intersection(set_difference(s.side_a, s.side_b), z).size());
    if (strict >= s.order())
      throw std::logic_error("majority tangle member violates the z bound");
  }
  return t;
}

Tangle restrict_tangle(const MultiGraph& g, const Tangle& t,
                       const VertexSet& z) {
  if (static_cast<int>(z.size()) >= t.order)
    throw std::invalid_argument("restrict_tangle requires |z| < order");
  Tangle out;
  out.order = t.order - static_cast<int>(z.size());
  std::set<Separation> seen;
  for (const Separation& s : t.oriented) {
    if (!is_subset(z, s.separator())) continue;
    Separation r{set_difference(s.side_a, z), set_difference(s.side_b, z)};
    if (r.side_a.empty() || r.side_b.empty()) continue;
    if (r.order() >= out.order) continue;
    if (seen.insert(r).second) out.oriented.push_back(r);
  }
  MultiGraph h = g.without_vertices(z);
  TangleCheck c = verify_tangle(h, out);
  if (!c.valid)
    throw std::logic_error("restricted tangle fails verification: " +
                           c.violation);
  return out;
}

bool captures(const MultiGraph& g, const Tangle& t, const VertexSet& apex,
              const std::vector<VertexSet>& vortex_vertex_sets) {
  if (static_cast<int>(apex.size()) >= t.order)
    throw std::invalid_argument("captures requires |apex| < order");
  Tangle restricted = restrict_tangle(g, t, apex);
  for (const Separation& s : restricted.oriented)
    for (const VertexSet& vortex : vortex_vertex_sets)
      if (is_subset(s.side_b, vortex)) return false;
  return true;
}

}  // namespace gms
