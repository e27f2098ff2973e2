#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hhs/vertex_set.hpp"

namespace hhs {

// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simplicial graph on vertex ids [0, order()).  Immutable after
// construction: no loops, no multi-edges, adjacency symmetric.  Each vertex
// carries a display label used by file formats and reports.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order, std::vector<std::string> labels = {});
  // Duplicate edges are merged; a self-loop is a PreconditionError.
  Graph(int order, std::span<const Edge> edges, std::vector<std::string> labels = {});
  Graph(int order, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const { return adj_bits_[u].contains(v); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  const VertexSet& neighbor_set(int v) const { return adj_bits_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Edges sorted lexicographically; the position is the edge id.
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge id of {u, v}, or -1 if absent.
  int edge_id(int u, int v) const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Vertex id carrying the label, or -1.
  int find_label(const std::string& label) const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> adj_edge_;  // parallel to adj_
  std::vector<VertexSet> adj_bits_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// A graph induced on a vertex subset of a parent, with id translation.
struct InducedGraph {
  Graph graph;
  std::vector<int> to_parent;    // local id -> parent id
  std::vector<int> from_parent;  // parent id -> local id, -1 when absent

  int local(int parent_id) const { return from_parent[parent_id]; }
  VertexSet lift(const VertexSet& local_set) const;
  VertexSet restrict(const VertexSet& parent_set) const;
};

// Induced subgraph on `vertices`; labels are inherited from the parent.
InducedGraph induced(const Graph& g, const VertexSet& vertices);

// Handle to the induced subgraph of `parent` on `vertices`.  The parent must
// outlive the handle.
struct Subgraph {
  const Graph* parent = nullptr;
  VertexSet vertices;

  Subgraph() = default;
  Subgraph(const Graph& g, VertexSet vs) : parent(&g), vertices(std::move(vs)) {}

  bool empty() const { return vertices.empty(); }
  int order() const { return vertices.count(); }
  InducedGraph materialize() const { return induced(*parent, vertices); }
  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.parent == b.parent && a.vertices == b.vertices;
  }
};

// All-pairs hop counts.  Disconnected pairs hold kUnreachable, never a large
// finite number.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }
  bool connected() const;
  // Largest finite distance.
  int diameter() const;
  // Whether v lies on some u-w geodesic.
  bool on_geodesic(int u, int v, int w) const {
    return reachable(u, v) && reachable(v, w) && reachable(u, w) &&
           (*this)(u, v) + (*this)(v, w) == (*this)(u, w);
  }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

// Hop distances from `source`; vertices outside `allowed` (when given) are
// treated as deleted.
std::vector<int> bfs_distances(const Graph& g, int source, const VertexSet* allowed = nullptr);

// Multi-source variant: distance to the nearest member of `sources`.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const VertexSet* allowed = nullptr);

DistanceMatrix distance_matrix(const Graph& g);

// Connected-component id per vertex (ids assigned in order of smallest
// member); vertices outside `keep` get -1.
std::vector<int> component_labels(const Graph& g, const VertexSet* keep = nullptr);

// Components after deleting the edges flagged in `removed_edge` (indexed by
// edge id).
std::vector<int> component_labels_without_edges(const Graph& g, const std::vector<bool>& removed_edge);

// Groups per-vertex labels into vertex sets ordered by label.
std::vector<VertexSet> group_components(const std::vector<int>& labels, int universe);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& vertices);

// Induced subgraph on the vertices adjacent to every member of `s`.
// PreconditionError when `s` is empty.
VertexSet link(const Graph& g, const VertexSet& s);
Subgraph link(const Subgraph& s);

bool is_clique(const Graph& g, const VertexSet& s);

// Inclusion-maximal cliques (pivoting Bron-Kerbosch), sorted
// lexicographically by their sorted vertex ids.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// PreconditionError when the parents differ.  The result may be empty.
Subgraph intersect(const Subgraph& a, const Subgraph& b);

// Same order, same labels per id, same edge set.
bool same_labelled_graph(const Graph& a, const Graph& b);

}  // namespace hhs
