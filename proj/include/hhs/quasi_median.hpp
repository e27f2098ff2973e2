#pragma once

#include <array>
#include <string>
#include <vector>

#include "hhs/graph.hpp"

namespace hhs {

// All k-quasi-medians of (x1, x2, x3) for the smallest feasible k.  A triple
// (y1, y2, y3) qualifies when d(xi, xj) = d(xi, yi) + d(yi, yj) + d(yj, xj)
// for every i != j and the three pairwise distances among the yi equal k.
struct QuasiMedians {
  int k = -1;
  std::vector<std::array<int, 3>> triples;
};

QuasiMedians quasi_median_of_triple(const Graph& g, const DistanceMatrix& d, int x1, int x2, int x3);
QuasiMedians quasi_median_of_triple(const Graph& g, int x1, int x2, int x3);

enum class QmFailure { none, disconnected, k4_minus, c6_hull, triple };
std::string to_string(QmFailure f);

struct QuasiMedianReport {
  bool is_quasi_median = false;
  QmFailure failure = QmFailure::none;
  // disconnected: two vertices in different components.
  // k4_minus: the four vertices, the missing edge being witness[2]-witness[3].
  // c6_hull: the six cycle vertices in cyclic order.
  // triple: x1, x2, x3 followed by two distinct quasi-medians (9 ids).
  std::vector<int> witness;
};

// Checks, in order: connectivity, induced K4 minus an edge, isometric
// 6-cycles whose interval hull is not a 3-cube, and uniqueness of the
// quasi-median of every triple of distinct vertices.
QuasiMedianReport is_quasi_median(const Graph& g);

// Re-derives the failure from the witness alone.
bool witness_holds(const Graph& g, const QuasiMedianReport& report);

// Smallest superset closed under taking geodesic intervals.
VertexSet interval_closure(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

}  // namespace hhs
