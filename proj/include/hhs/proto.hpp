#pragma once

#include <string>
#include <vector>

#include "hhs/augmented.hpp"

namespace hhs {

// Distances and diameters report this value when points are disconnected.
inline constexpr int kInfinite = 1 << 28;
std::string distance_string(int d);

// Projections and relative projections on top of an augmented graph.  All
// vertex sets use augmented-graph ids.
//   pi(X, w)  = w
//   pi(F, w)  = p_F(w ∩ Y_F), p_F the coarse closest-point projection in Y_F
//               onto CF; p_X is the identity
//   rho(F, G) = p_G(PF ∩ Y_G) for F ⊊ G or F ⋔ G
//   rho_down(G, F, s) = p_F(s ∩ Y_F) for F ⊊ G
// Distances between sets are diameters of unions inside the relevant CF.
class ProtoHierarchy {
 public:
  explicit ProtoHierarchy(AugmentedGraph aug);

  const AugmentedGraph& augmented() const { return aug_; }
  const FactorSystem& system() const { return aug_.system(); }
  const XGraph& x_graph() const { return aug_.x_graph(); }
  int domain_count() const { return system().size(); }
  int w_count() const { return static_cast<int>(x_graph().cliques.size()); }

  const VertexSet& cf(int f) const { return dom_[f].cf; }
  const VertexSet& yf(int f) const { return dom_[f].yf; }
  const VertexSet& pf(int f) const { return dom_[f].pf; }
  const InducedGraph& cf_graph(int f) const { return dom_[f].cf_graph; }
  const InducedGraph& yf_graph(int f) const { return dom_[f].yf_graph; }
  const DistanceMatrix& cf_distances(int f) const { return dom_[f].cf_dist; }
  const DistanceMatrix& yf_distances(int f) const { return dom_[f].yf_dist; }
  // Distance inside CF / Y_F, kInfinite when disconnected or outside.
  int dist_cf(int f, int a, int b) const;
  int dist_yf(int f, int a, int b) const;
  // Diameter of s inside CF; 0 for empty s.
  int diam(int f, const VertexSet& s) const;
  // diam(a ∪ b) inside CF.
  int dist(int f, const VertexSet& a, const VertexSet& b) const { return diam(f, a | b); }
  int hausdorff(int f, const VertexSet& a, const VertexSet& b) const;
  // Least distance in CF from a point to a set.
  int point_to_set(int f, int a, const VertexSet& s) const;

  VertexSet project(int f, int x) const;
  VertexSet project(int f, const VertexSet& s) const;
  const VertexSet& pi(int f, int w) const { return pi_[f][w]; }
  bool rho_defined(int f, int g) const;
  // PreconditionError when undefined.
  const VertexSet& rho(int f, int g) const;
  VertexSet rho_down(int g, int f, const VertexSet& s) const;
  // Clique w as augmented-graph vertices.
  VertexSet clique(int w) const { return aug_.lift(x_graph().cliques[w]); }

  // Domains whose Y_F leaves some clique without a projection.
  const std::vector<std::string>& degeneracies() const { return degenerate_; }

 private:
  struct DomainData {
    VertexSet cf, yf, pf;
    InducedGraph cf_graph, yf_graph;
    DistanceMatrix cf_dist, yf_dist;
  };
  AugmentedGraph aug_;
  std::vector<DomainData> dom_;
  std::vector<std::vector<VertexSet>> pi_;
  std::vector<std::vector<VertexSet>> rho_;
  std::vector<std::string> degenerate_;
};

}  // namespace hhs
