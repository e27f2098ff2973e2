#include "hhs/hyperplanes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hhs/errors.hpp"

namespace hhs {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::array<int, 4>> induced_squares(const Graph& g) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < g.order(); ++a) {
    for (int c = a + 1; c < g.order(); ++c) {
      if (g.adjacent(a, c)) continue;
      auto common = (g.neighbor_set(a) & g.neighbor_set(c)).to_vector();
      for (std::size_t i = 0; i < common.size(); ++i) {
        int b = common[i];
        if (b < a) continue;
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          int d = common[j];
          if (d < a || g.adjacent(b, d)) continue;
          out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

HyperplaneSystem::HyperplaneSystem(Graph g) : g_(std::move(g)), dist_(distance_matrix(g_)) {
  const int m = g_.size();
  const int n = g_.order();
  UnionFind uf(m);
  // Triangle relation: all edges of a triangle are parallel.
  for (int id = 0; id < m; ++id) {
    auto [u, v] = g_.edges()[id];
    (g_.neighbor_set(u) & g_.neighbor_set(v)).for_each([&](int w) {
      uf.unite(id, g_.edge_id(u, w));
      uf.unite(id, g_.edge_id(v, w));
    });
  }
  auto squares = induced_squares(g_);
  for (const auto& [a, b, c, d] : squares) {
    uf.unite(g_.edge_id(a, b), g_.edge_id(c, d));
    uf.unite(g_.edge_id(b, c), g_.edge_id(d, a));
  }

  std::map<int, int> root_to_class;
  edge_class_.assign(m, -1);
  for (int id = 0; id < m; ++id) {
    int r = uf.find(id);
    auto [it, fresh] = root_to_class.emplace(r, static_cast<int>(classes_.size()));
    if (fresh) classes_.emplace_back();
    edge_class_[id] = it->second;
    classes_[it->second].push_back(id);
  }

  const int h_count = count();
  cross_.assign(h_count, VertexSet(h_count));
  for (const auto& [a, b, c, d] : squares) {
    int h1 = edge_class_[g_.edge_id(a, b)];
    int h2 = edge_class_[g_.edge_id(b, c)];
    if (h1 == h2) continue;
    cross_[h1].insert(h2);
    cross_[h2].insert(h1);
  }

  carriers_.assign(h_count, VertexSet(n));
  fibres_.resize(h_count);
  sectors_.resize(h_count);
  sector_label_.resize(h_count);
  for (int h = 0; h < h_count; ++h) {
    std::vector<bool> removed(m, false);
    for (int id : classes_[h]) {
      removed[id] = true;
      carriers_[h].insert(g_.edges()[id].u);
      carriers_[h].insert(g_.edges()[id].v);
    }
    sector_label_[h] = component_labels_without_edges(g_, removed);
    sectors_[h] = group_components(sector_label_[h], n);

    auto local = induced(g_, carriers_[h]);
    std::vector<bool> local_removed(local.graph.size(), false);
    for (int id = 0; id < local.graph.size(); ++id) {
      auto e = local.graph.edges()[id];
      local_removed[id] = removed[g_.edge_id(local.to_parent[e.u], local.to_parent[e.v])];
    }
    auto parts = group_components(component_labels_without_edges(local.graph, local_removed), local.graph.order());
    for (const auto& p : parts) fibres_[h].push_back(local.lift(p));
  }
}

int HyperplaneSystem::hyperplane_of(int u, int v) const {
  int id = g_.edge_id(u, v);
  if (id < 0) throw PreconditionError("no edge between the given vertices");
  return edge_class_[id];
}

bool HyperplaneSystem::crosses(int h1, int h2) const {
  if (h1 == h2) throw PreconditionError("crossing is a relation between distinct hyperplanes");
  return cross_[h1].contains(h2);
}

bool HyperplaneSystem::osculates(int h1, int h2) const {
  if (h1 == h2) throw PreconditionError("osculation is a relation between distinct hyperplanes");
  return !cross_[h1].contains(h2) && carriers_[h1].intersects(carriers_[h2]);
}

std::vector<int> HyperplaneSystem::separating(int x, int y) const {
  std::vector<int> out;
  for (int h = 0; h < count(); ++h)
    if (sector_label_[h][x] != sector_label_[h][y]) out.push_back(h);
  return out;
}

std::vector<int> HyperplaneSystem::meeting(const VertexSet& s) const {
  std::vector<int> out;
  for (int h = 0; h < count(); ++h) {
    for (int id : classes_[h]) {
      const auto& e = g_.edges()[id];
      if (s.contains(e.u) && s.contains(e.v)) {
        out.push_back(h);
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<std::string> hyperplane_labels(int n) {
  std::vector<std::string> labels;
  for (int h = 0; h < n; ++h) labels.push_back(HyperplaneSystem::label(h));
  return labels;
}

}  // namespace

Graph HyperplaneSystem::crossing_graph() const {
  std::vector<Edge> edges;
  for (int a = 0; a < count(); ++a)
    cross_[a].for_each([&](int b) {
      if (a < b) edges.push_back({a, b});
    });
  return Graph(count(), edges, hyperplane_labels(count()));
}

Graph HyperplaneSystem::contact_graph() const {
  std::vector<Edge> edges;
  for (int a = 0; a < count(); ++a)
    for (int b = a + 1; b < count(); ++b)
      if (carriers_[a].intersects(carriers_[b])) edges.push_back({a, b});
  return Graph(count(), edges, hyperplane_labels(count()));
}

}  // namespace hhs
