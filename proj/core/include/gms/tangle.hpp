#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gms/graph.hpp"

namespace gms {

/// Orientation of all separations of order < `order`, stored small side
/// first, such that no three small sides cover the graph.
struct Tangle {
  int order = 0;
  std::vector<Separation> oriented;
};

/// All ordered separations of g with order below the bound: a separator
/// subset plus an assignment of the remaining components to the two sides.
std::vector<Separation> enumerate_separations(const MultiGraph& g,
                                              int below_order);

struct TangleCheck {
  bool valid = false;
  std::string violation;
  std::vector<Separation> violating_triple;  // small sides covering g
};

/// Exhaustive check of both tangle axioms; restricted to at most 12
/// vertices.
TangleCheck verify_tangle(const MultiGraph& g, const Tangle& t);

/// Either the majority tangle ({(A,B) : |Z∩B| > |Z∩A|}) or a separation of
/// order at most theta whose removal splits z evenly (the balanced witness
/// the induction would recurse on). Requires |z| = 3*theta - 2.
std::variant<Tangle, Separation> majority_tangle(const MultiGraph& g,
                                                 const VertexSet& z,
                                                 int theta);

/// The tangle T - z of G - z: projections of members whose separator
/// contains z. The result is re-verified. Requires |z| < t.order.
Tangle restrict_tangle(const MultiGraph& g, const Tangle& t,
                       const VertexSet& z);

/// True iff no big side of (T - apex) is contained in a single vortex
/// vertex set. Requires |apex| < t.order.
bool captures(const MultiGraph& g, const Tangle& t, const VertexSet& apex,
              const std::vector<VertexSet>& vortex_vertex_sets);

}  // namespace gms
