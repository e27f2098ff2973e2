#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hhs/factor_system.hpp"
#include "hhs/graph_io.hpp"

namespace hhs {

// A graph on the maximal cliques of `base`.  W-vertex i is cliques[i], which
// follows maximal_cliques(base); W labels are "w<i>".
struct XGraph {
  Graph base;
  std::vector<VertexSet> cliques;
  Graph w;
  // Index of a maximal clique, or -1.
  int clique_index(const VertexSet& c) const;
};

// PreconditionError on out-of-range or reflexive pairs.
XGraph make_x_graph(const Graph& base, const std::vector<std::pair<int, int>>& adjacency);
// Maximal cliques adjacent when they share a vertex.
XGraph x_graph_sharing_vertex(const Graph& base);
// JSON list of clique-index pairs, e.g. [[0,1],[1,2]].
std::vector<std::pair<int, int>> parse_w_adjacency(const std::string& json_text);

enum class EdgeKind { base, w, cone };
std::string to_string(EdgeKind k);

// The augmented graph CX of a factor system with an X-graph.  Vertices
// [0, host order) are the host vertices; each non-host domain F gets one
// projection vertex b_F, numbered after the host in domain order and labelled
// "b{...}" with the sorted host labels of F.  Edges: host edges (base), pairs
// of distinct vertices lying in W-adjacent maximal cliques (w), and v - b_F
// for v in F (cone).
class AugmentedGraph {
 public:
  AugmentedGraph(FactorSystem fs, XGraph w);

  const FactorSystem& system() const { return fs_; }
  const XGraph& x_graph() const { return w_; }
  const Graph& graph() const { return cx_; }
  int host_order() const { return fs_.host().order(); }
  EdgeKind kind(int edge_id) const { return kinds_[edge_id]; }
  EdgeKind kind(int u, int v) const { return kinds_[cx_.edge_id(u, v)]; }
  // CX vertex of b_F, -1 for the host domain.
  int projection_vertex(int domain) const { return domain == 0 ? -1 : host_order() + domain - 1; }
  // Domain of a projection vertex, -1 for host vertices.
  int domain_of(int v) const { return v < host_order() ? -1 : v - host_order() + 1; }
  // Host vertices of domain i as CX vertices.
  VertexSet lift(const VertexSet& host_set) const;

  // B_F: projection vertices of domains properly nested in F.
  VertexSet projection_vertices_below(int f) const;
  // V(F) together with B_F; CF is the induced subgraph on it.
  VertexSet domain_vertices(int f) const;
  InducedGraph domain_graph(int f) const { return induced(cx_, domain_vertices(f)); }
  // PF = lk(F), the projection vertices of domains inside lk(F), and the
  // projection vertices of non-host domains containing F.  Empty for the host.
  VertexSet projection_part(int f) const;
  // Y_F: everything outside PF.
  VertexSet complement(int f) const;
  // Y^k_F: removes lk(F), projection vertices of domains inside lk(F), and
  // b_F' for F inside F' with cl(F') <= k.
  VertexSet leveled_complement(int f, int k) const;
  // Z^k_F: Y^k_F plus an edge b_H - b_H' for every present pair with H a
  // proper subdomain of H'.
  InducedGraph z_modification(int f, int k) const;
  // Y^{F'}_F = Y_F ∩ CF'.
  VertexSet relative_complement(int f, int f_prime) const { return complement(f) & domain_vertices(f_prime); }

  DotStyle dot_style() const;
  std::string to_dot(const std::string& name = "CX") const;
  std::string to_json() const;

 private:
  FactorSystem fs_;
  XGraph w_;
  Graph cx_;
  std::vector<EdgeKind> kinds_;
};

}  // namespace hhs
