#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hhs/metrics.hpp"
#include "hhs/proto.hpp"

namespace hhs {

enum class Status { pass, fail, degenerate, skipped };
std::string to_string(Status s);

// Where a realized constant is attained.  `domains`, `points` and `path`
// are interpreted per check (see replay_witness).
struct Witness {
  std::vector<int> domains;
  std::vector<int> points;
  std::vector<int> path;
  std::string clause;
};

struct AxiomReport {
  std::string name;
  Ratio constant{0};
  bool infinite = false;
  Witness witness;
  Status status = Status::pass;
  std::string detail;
  int skipped = 0;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  // Choice vectors per orthogonal family before switching to sampling.
  int cap_choices = 4096;
  // Geodesic-interval vertex budget per pair; larger intervals are skipped.
  int cap_dag = 100000;
};

// Largest diam pi_F(w).
AxiomReport check_projection_diameter(const ProtoHierarchy& ph);
// Largest diam(pi_F(w) ∪ pi_F(w')) over W-adjacent w, w'.
AxiomReport check_projection_lipschitz(const ProtoHierarchy& ph);
// Least E with CF inside the E-neighbourhood of the union of projections.
AxiomReport check_projection_coverage(const ProtoHierarchy& ph);
// Largest diam rho(F, G).
AxiomReport check_rho_diameter(const ProtoHierarchy& ph);
// Longest strict containment chain.
AxiomReport check_complexity(const ProtoHierarchy& ph);
// Transverse, nested and relative-projection clauses.
AxiomReport check_consistency(const ProtoHierarchy& ph);
// Least E such that whenever d_V(w1, w2) >= E every CU-geodesic between the
// U-projections meets the E-neighbourhood of rho(V, U).
AxiomReport check_bgi(const ProtoHierarchy& ph, const CheckOptions& opt = {});
// Least C such that for x, y in Y_F with d_CF(p_F x, p_F y) >= C every
// CX-geodesic from x to y meets PF.
AxiomReport check_combinatorial_bgi(const ProtoHierarchy& ph);
AxiomReport check_large_links(const ProtoHierarchy& ph);
AxiomReport check_partial_realization(const ProtoHierarchy& ph, const CheckOptions& opt = {});
AxiomReport check_containers(const ProtoHierarchy& ph);
// Largest four-point delta over the CF graphs (constant is delta, in halves).
AxiomReport check_hyperbolicity(const ProtoHierarchy& ph);
// Largest multiplicative / additive distortion of CF inside Y_F.
AxiomReport check_qi_multiplicative(const ProtoHierarchy& ph);
AxiomReport check_qi_additive(const ProtoHierarchy& ph);

// Recomputes the quantity a report's witness certifies; equal to the
// reported constant when the witness is sound.  Reports without a witness
// replay to 0.
Ratio replay_witness(const ProtoHierarchy& ph, const AxiomReport& r);

// Uniqueness: for each kappa, the largest W-distance among pairs whose
// projections are all within kappa.
struct UniquenessTable {
  std::vector<int> theta;  // indexed by kappa
  int cross_component_pairs = 0;
};
UniquenessTable check_uniqueness(const ProtoHierarchy& ph);

// Coordinate tuples, one vertex set per domain.
using Tuple = std::vector<VertexSet>;
Tuple coordinates(const ProtoHierarchy& ph, int w);
// Smallest kappa at which the tuple is consistent, with the pair that needs it.
struct TupleConsistency {
  int kappa = 0;
  int u = -1, v = -1;
  std::string clause;
};
TupleConsistency tuple_consistency(const ProtoHierarchy& ph, const Tuple& t);
// Exhaustive search for the W-vertex whose coordinates are closest to the
// tuple in Hausdorff distance, worst domain.  PreconditionError naming the
// violated pair when the tuple is not kappa-consistent.
struct Realization {
  int w = -1;
  int deviation = 0;
};
Realization realize_tuple(const ProtoHierarchy& ph, const Tuple& t, int kappa);

// Hierarchy condition.  `w_family(f)` supplies W^F over the induced graph of
// domain f.  Checks, for every domain F: the induced family is a factor
// system; its augmented graphs agree with the ambient CF' for F' ⊑ F; and for
// every F' ⊑ F and maximal clique x of lk(F') ∩ F (the empty clique when that
// is empty) the map w -> first maximal clique of F containing x ∪ w sends
// W^{F'}-edges to W^F-edges or loops.  With `separation`, non-adjacent
// distinct vertices must also map to non-adjacent distinct vertices.
using WFamily = std::function<XGraph(int)>;
struct HierarchyConditionReport {
  bool induced_systems = true;
  bool augmented_graphs = true;
  bool maps = true;
  bool separation = true;
  int maps_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return induced_systems && augmented_graphs && maps && separation; }
};
HierarchyConditionReport check_hierarchy_condition(const AugmentedGraph& aug, const WFamily& w_family,
                                                   bool separation);
// Generic W^F: maximal cliques c, c' of F adjacent when some W-adjacent
// w ⊇ c, w' ⊇ c' exist.
XGraph restriction_w_family(const AugmentedGraph& aug, int f);

}  // namespace hhs
