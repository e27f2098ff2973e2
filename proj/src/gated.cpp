#include "hhs/gated.hpp"

#include <algorithm>
#include <iterator>

#include "hhs/errors.hpp"
#include "hhs/quasi_median.hpp"

namespace hhs {

namespace {

// Gate of x, or -1 together with the offending vertex of y.
int try_gate(const DistanceMatrix& d, const VertexSet& y, int x, int* bad) {
  int best = -1;
  y.for_each([&](int v) {
    if (!d.reachable(x, v)) return;
    if (best < 0 || d(x, v) < d(x, best)) best = v;
  });
  if (best < 0) {
    if (bad) *bad = y.first();
    return -1;
  }
  int fail = -1;
  y.for_each([&](int z) {
    if (fail < 0 && !d.on_geodesic(x, best, z)) fail = z;
  });
  if (fail >= 0) {
    if (bad) *bad = fail;
    return -1;
  }
  return best;
}

}  // namespace

int gate(const DistanceMatrix& d, const VertexSet& y, int x) {
  if (y.empty()) throw PreconditionError("gate onto an empty subgraph");
  int bad = -1;
  int g = try_gate(d, y, x, &bad);
  if (g < 0)
    throw PreconditionError("not gated: vertex " + std::to_string(x) + " has no gate (witness " + std::to_string(bad) +
                            ")");
  return g;
}

GatedCheck is_gated(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("is_gated: empty subgraph");
  if (!is_connected(g, s)) throw PreconditionError("is_gated: subgraph is not connected");
  GatedCheck out;
  for (int x = 0; x < g.order(); ++x) {
    if (try_gate(d, s, x, nullptr) < 0) {
      out.gated = false;
      out.witness = x;
      return out;
    }
  }
  return out;
}

VertexSet gated_hull(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("gated hull of an empty set");
  VertexSet cur = s;
  for (;;) {
    VertexSet next = interval_closure(g, d, cur);
    for (const auto& e : g.edges())
      if (next.contains(e.u) && next.contains(e.v)) next |= g.neighbor_set(e.u) & g.neighbor_set(e.v);
    if (next == cur) break;
    cur = std::move(next);
  }
  auto check = is_gated(g, d, cur);
  if (!check.gated)
    throw InvariantViolation("gated hull closure is not gated (vertex " + std::to_string(check.witness) +
                             " has no gate); input is not quasi-median");
  return cur;
}

VertexSet gate_projection(const Graph& g, const DistanceMatrix& d, const VertexSet& y1, const VertexSet& y2) {
  VertexSet gates(g.order());
  y1.for_each([&](int v) { gates.insert(gate(d, y2, v)); });
  return gated_hull(g, d, gates);
}

VertexSet gate_projection(const HyperplaneSystem& hs, const VertexSet& y1, const VertexSet& y2) {
  auto out = gate_projection(hs.graph(), hs.distances(), y1, y2);
  auto m1 = hs.meeting(y1), m2 = hs.meeting(y2), mo = hs.meeting(out);
  std::vector<int> both;
  std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(both));
  if (both != mo) throw InvariantViolation("gated projection does not meet exactly the common hyperplanes");
  return out;
}

}  // namespace hhs
