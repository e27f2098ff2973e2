#pragma once

#include "hhs/graph.hpp"
#include "hhs/hyperplanes.hpp"

namespace hhs {

// Gate of x in y: the closest vertex of y, accepted only if every z in y
// satisfies d(x, z) = d(x, gate) + d(gate, z).  PreconditionError ("not
// gated") otherwise.
int gate(const DistanceMatrix& d, const VertexSet& y, int x);

struct GatedCheck {
  bool gated = true;
  int witness = -1;  // first host vertex without a gate
};

// PreconditionError when s is empty or induces a disconnected subgraph.
GatedCheck is_gated(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

// Closes s under geodesic intervals and triangles until stable, then checks
// the result is gated (InvariantViolation if not).
VertexSet gated_hull(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

// Gated hull of the gates in y2 of the vertices of y1.
VertexSet gate_projection(const Graph& g, const DistanceMatrix& d, const VertexSet& y1, const VertexSet& y2);

// Same, additionally asserting that the hyperplanes meeting the result are
// exactly those meeting both y1 and y2.
VertexSet gate_projection(const HyperplaneSystem& hs, const VertexSet& y1, const VertexSet& y2);

}  // namespace hhs
