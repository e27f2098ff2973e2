#pragma once

#include <string>
#include <vector>

#include "hhs/augmented.hpp"
#include "hhs/factor_system.hpp"
#include "hhs/hyperplanes.hpp"
#include "hhs/prisms.hpp"

namespace hhs {

// Crossing graph of the quasi-median graph induced on `s`, with each local
// hyperplane identified with the ambient hyperplane containing its dual
// edges.  Vertices are in ascending ambient id, labelled "H<id>", so the
// result is directly comparable with induced(crossing_graph(), ids).
// InvariantViolation if two local hyperplanes extend to the same ambient one.
struct LocalCrossing {
  std::vector<int> hyperplanes;  // ambient ids, ascending
  Graph graph;
};
LocalCrossing crossing_graph_of(const HyperplaneSystem& hs, const VertexSet& s);

// W over the crossing graph: one vertex per maximal prism (same order as the
// maximal cliques of the crossing graph), adjacent when the prisms meet.
XGraph x_graph_from_prisms(const HyperplaneSystem& hs, const std::vector<Prism>& prisms);

// The quasi-median pipeline: the minimal factor system on the crossing graph,
// the gated subgraph G(D) of the input realizing each domain D (the host is
// the whole graph, a vertex link lk(H) is a fibre of H, an intersection is the
// gate projection of the two subgraphs it came from), and the prism X-graph.
// Every domain is checked to be the crossing graph of its gated subgraph.
struct QmSystem {
  HyperplaneSystem hs;
  Graph delta;
  FactorSystem fs;
  std::vector<VertexSet> gated;
  std::vector<Prism> prisms;
  XGraph w;
};
QmSystem build_qm_system(const Graph& g, int cap = FactorSystem::kDefaultCap);

// Augmented graph of the pipeline (the factored contact graph), after
// checking that its restriction to the hyperplane vertices is the contact
// graph.
AugmentedGraph qm_augmented(const QmSystem& q);

// Neighbourhood in the input graph of each vertex of the factored contact
// graph: the carrier for a hyperplane, G(F) for b_F.
std::vector<VertexSet> qm_neighbourhoods(const QmSystem& q, const AugmentedGraph& chat);

// W^F for domain f: maximal prisms of G(F), indexed by the maximal cliques of
// the induced graph on F, adjacent when they meet.
XGraph qm_w_family(const QmSystem& q, int f);

}  // namespace hhs
