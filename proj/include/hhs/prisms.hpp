#pragma once

#include <vector>

#include "hhs/hyperplanes.hpp"

namespace hhs {

struct Prism {
  std::vector<int> hyperplanes;    // a maximal clique of the crossing graph
  std::vector<VertexSet> factors;  // one maximal clique per hyperplane, through a common corner
  VertexSet vertices;
};

// Maximal clique of the host containing v whose edges at v are dual to h.
VertexSet clique_at(const HyperplaneSystem& hs, int h, int v);

// One prism per maximal clique of the crossing graph, in the order of
// maximal_cliques(crossing_graph()).  Each prism is the gated hull of the
// factor cliques at a vertex lying in every carrier; it must meet exactly
// its hyperplanes and have the size of the product of its factors
// (InvariantViolation otherwise).
std::vector<Prism> maximal_prisms(const HyperplaneSystem& hs);

}  // namespace hhs
