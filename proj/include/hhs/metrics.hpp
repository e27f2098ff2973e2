#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hhs/graph.hpp"

namespace hhs {

// Non-negative rational kept in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d = 1);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

// Four-point hyperbolicity: delta = twice_delta / 2, the largest gap between
// the two largest pair sums over all quadruples.
struct HyperbolicityReport {
  int twice_delta = 0;
  std::array<int, 4> witness{-1, -1, -1, -1};
  Ratio delta() const { return Ratio(twice_delta, 2); }
};
int four_point_gap(const DistanceMatrix& d, int w, int x, int y, int z);
HyperbolicityReport gromov_delta(const DistanceMatrix& d);
// PreconditionError when g is disconnected.
HyperbolicityReport gromov_delta(const Graph& g);

// Distortion of the induced subgraph on `sub` against the ambient metric over
// all pairs of distinct members: multiplicative = max d_sub / d_amb,
// additive = max d_sub - d_amb.  A pair connected in the ambient graph but
// not in the subgraph makes the report infinite.
struct EmbeddingReport {
  bool infinite = false;
  Ratio multiplicative{1};
  int additive = 0;
  std::pair<int, int> multiplicative_witness{-1, -1};
  std::pair<int, int> additive_witness{-1, -1};
};
EmbeddingReport qi_distortion(const Graph& ambient, const VertexSet& sub);
EmbeddingReport qi_distortion(const Graph& ambient, const DistanceMatrix& ambient_d, const VertexSet& sub);

// p(x) = {y in target : d(x, y) <= d(x, target) + 1}, distances taken in the
// induced subgraph on `allowed`.  `unreachable` is set, and the result empty,
// when no target vertex is reachable.
VertexSet nearest_point_projection(const Graph& g, const VertexSet& allowed, const VertexSet& target, int x,
                                   bool* unreachable = nullptr);

// Bottleneck constant: for each pair (x, y) and each geodesic
// midpoint m (d(x, m) in {floor(d/2), ceil(d/2)}), the least r such that every
// x-y path meets the closed r-ball about m; per pair the best midpoint,
// overall the worst pair.  Adjacent and equal pairs count as 0.
struct BottleneckReport {
  int delta = 0;
  int x = -1, y = -1, midpoint = -1;
};
// PreconditionError when g is disconnected.
BottleneckReport bottleneck_delta(const Graph& g);

// True when every x-y geodesic meets `blocked` (decided on the geodesic
// interval, without enumerating geodesics).
bool every_geodesic_meets(const Graph& g, const DistanceMatrix& d, int x, int y, const VertexSet& blocked);
// An x-y geodesic avoiding `blocked`, or empty when none exists.
std::vector<int> geodesic_avoiding(const Graph& g, const DistanceMatrix& d, int x, int y, const VertexSet& blocked);
// Among all x-y geodesics, one maximizing the least weight of its vertices;
// returns that least weight and the geodesic.
std::pair<int, std::vector<int>> widest_geodesic(const Graph& g, const DistanceMatrix& d, int x, int y,
                                                 const std::vector<int>& weight);

// Hierarchy path through a graph `chat` whose vertices carry neighbourhoods
// in a second graph with metric `dx`, adjacent chat vertices having meeting
// neighbourhoods.  Chooses a chat geodesic A_0..A_m from a to b and points
// p_0 = p, p_i in N(A_{i-1}) ∩ N(A_i), p_{m+1} = q minimizing the total
// length sum, by exact dynamic programming over all chat geodesics.
struct HierarchyPath {
  std::vector<int> nodes;
  std::vector<int> points;
  int length_sum = 0;
  int target = 0;  // d(p, q)
};
// PreconditionError when b is unreachable or p, q lie outside N(a), N(b);
// InvariantViolation when adjacent neighbourhoods are disjoint or the optimum
// exceeds d(p, q).
HierarchyPath hierarchy_path(const Graph& chat, const std::vector<VertexSet>& neighbourhoods, const DistanceMatrix& dx,
                             int a, int b, int p, int q);
// Re-checks the waypoint conditions and the additivity of a returned path.
bool hierarchy_path_holds(const Graph& chat, const std::vector<VertexSet>& neighbourhoods, const DistanceMatrix& dx,
                          const HierarchyPath& path);

}  // namespace hhs
