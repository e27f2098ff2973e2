#pragma once

#include <array>
#include <string>
#include <vector>

#include "hhs/graph.hpp"

namespace hhs {

// Chordless 4-cycles a-b-c-d-a, each listed once with a the smallest vertex
// and b < d.
std::vector<std::array<int, 4>> induced_squares(const Graph& g);

// Edge classes of the parallelism relation generated by "two edges of a
// common triangle" and "opposite sides of an induced square", together with
// the derived crossing/contact structure.  Hyperplanes are numbered by their
// smallest edge id.  Works on any graph; the geometric statements about
// carriers and sectors only hold for quasi-median inputs.
class HyperplaneSystem {
 public:
  explicit HyperplaneSystem(Graph g);

  const Graph& graph() const { return g_; }
  const DistanceMatrix& distances() const { return dist_; }

  int count() const { return static_cast<int>(classes_.size()); }
  // Edge ids, ascending.
  const std::vector<int>& dual_edges(int h) const { return classes_[h]; }
  int hyperplane_of(int edge) const { return edge_class_[edge]; }
  int hyperplane_of(int u, int v) const;

  // Both throw PreconditionError when h1 == h2.
  bool crosses(int h1, int h2) const;
  bool osculates(int h1, int h2) const;

  const VertexSet& carrier(int h) const { return carriers_[h]; }
  // Components of the carrier once the dual edges are removed.
  const std::vector<VertexSet>& fibres(int h) const { return fibres_[h]; }
  // Components of the whole graph once the dual edges are removed, ordered by
  // smallest vertex.
  const std::vector<VertexSet>& sectors(int h) const { return sectors_[h]; }
  int sector_of(int h, int v) const { return sector_label_[h][v]; }

  // Hyperplanes putting x and y in different sectors, ascending.
  std::vector<int> separating(int x, int y) const;
  // Hyperplanes with a dual edge whose endpoints both lie in s.
  std::vector<int> meeting(const VertexSet& s) const;

  // Vertex i is hyperplane i; labels are "H<i>".
  Graph crossing_graph() const;
  Graph contact_graph() const;
  static std::string label(int h) { return "H" + std::to_string(h); }

 private:
  Graph g_;
  DistanceMatrix dist_;
  std::vector<int> edge_class_;
  std::vector<std::vector<int>> classes_;
  std::vector<VertexSet> cross_;
  std::vector<VertexSet> carriers_;
  std::vector<std::vector<VertexSet>> fibres_;
  std::vector<std::vector<VertexSet>> sectors_;
  std::vector<std::vector<int>> sector_label_;
};

}  // namespace hhs
