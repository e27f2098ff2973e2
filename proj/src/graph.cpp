#include "hhs/graph.hpp"

#include <algorithm>
#include <deque>

#include "hhs/errors.hpp"

namespace hhs {

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) throw PreconditionError("label count does not match vertex count");
  return labels;
}

}  // namespace

Graph::Graph(int order, std::vector<std::string> labels)
    : adj_(order), adj_edge_(order), labels_(default_labels(order, std::move(labels))) {
  adj_bits_.assign(order, VertexSet(order));
}

Graph::Graph(int order, std::span<const Edge> edges, std::vector<std::string> labels) : Graph(order, std::move(labels)) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto e : edges) {
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) throw PreconditionError("edge endpoint out of range");
    norm.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  edges_ = std::move(norm);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    auto [u, v] = edges_[id];
    adj_[u].push_back(v);
    adj_edge_[u].push_back(id);
    adj_[v].push_back(u);
    adj_edge_[v].push_back(id);
    adj_bits_[u].insert(v);
    adj_bits_[v].insert(u);
  }
  for (int v = 0; v < order; ++v) {
    std::vector<int> idx(adj_[v].size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
    std::vector<int> nb, ne;
    for (int i : idx) {
      nb.push_back(adj_[v][i]);
      ne.push_back(adj_edge_[v][i]);
    }
    adj_[v] = std::move(nb);
    adj_edge_[v] = std::move(ne);
  }
}

Graph::Graph(int order, std::initializer_list<std::pair<int, int>> edges)
    : Graph(order, [&] {
        std::vector<Edge> es;
        for (auto [u, v] : edges) es.push_back({u, v});
        return es;
      }()) {}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return -1;
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return adj_edge_[u][it - nb.begin()];
}

int Graph::find_label(const std::string& label) const {
  for (int v = 0; v < order(); ++v)
    if (labels_[v] == label) return v;
  return -1;
}

VertexSet InducedGraph::lift(const VertexSet& local_set) const {
  VertexSet out(static_cast<int>(from_parent.size()));
  local_set.for_each([&](int v) { out.insert(to_parent[v]); });
  return out;
}

VertexSet InducedGraph::restrict(const VertexSet& parent_set) const {
  VertexSet out(graph.order());
  parent_set.for_each([&](int v) {
    if (from_parent[v] >= 0) out.insert(from_parent[v]);
  });
  return out;
}

InducedGraph induced(const Graph& g, const VertexSet& vertices) {
  InducedGraph out;
  out.from_parent.assign(g.order(), -1);
  std::vector<std::string> labels;
  vertices.for_each([&](int v) {
    out.from_parent[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
    labels.push_back(g.label(v));
  });
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (vertices.contains(e.u) && vertices.contains(e.v)) edges.push_back({out.from_parent[e.u], out.from_parent[e.v]});
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges, std::move(labels));
  return out;
}

bool DistanceMatrix::connected() const {
  for (int d : d_)
    if (d == kUnreachable) return false;
  return true;
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : d_) best = std::max(best, d);
  return best;
}

std::vector<int> bfs_distances(const Graph& g, int source, const VertexSet* allowed) {
  VertexSet s(g.order());
  s.insert(source);
  return bfs_distances(g, s, allowed);
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const VertexSet* allowed) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  std::deque<int> queue;
  sources.for_each([&](int s) {
    if (allowed && !allowed->contains(s)) return;
    dist[s] = 0;
    queue.push_back(s);
  });
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] != DistanceMatrix::kUnreachable) continue;
      if (allowed && !allowed->contains(w)) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (int s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (int t = 0; t < g.order(); ++t) dm.at(s, t) = row[t];
  }
  return dm;
}

std::vector<int> component_labels(const Graph& g, const VertexSet* keep) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] >= 0 || (keep && !keep->contains(s))) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] >= 0 || (keep && !keep->contains(w))) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

std::vector<int> component_labels_without_edges(const Graph& g, const std::vector<bool>& removed_edge) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] >= 0 || removed_edge[g.edge_id(u, w)]) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

std::vector<VertexSet> group_components(const std::vector<int>& labels, int universe) {
  int count = 0;
  for (int l : labels) count = std::max(count, l + 1);
  std::vector<VertexSet> out(count, VertexSet(universe));
  for (int v = 0; v < static_cast<int>(labels.size()); ++v)
    if (labels[v] >= 0) out[labels[v]].insert(v);
  return out;
}

bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

bool is_connected(const Graph& g, const VertexSet& vertices) {
  int s = vertices.first();
  if (s < 0) return true;
  auto dist = bfs_distances(g, s, &vertices);
  bool ok = true;
  vertices.for_each([&](int v) { ok = ok && dist[v] != DistanceMatrix::kUnreachable; });
  return ok;
}

VertexSet link(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("link of an empty vertex set is undefined");
  VertexSet out = g.all_vertices();
  s.for_each([&](int v) { out &= g.neighbor_set(v); });
  return out;
}

Subgraph link(const Subgraph& s) { return Subgraph(*s.parent, link(*s.parent, s.vertices)); }

bool is_clique(const Graph& g, const VertexSet& s) {
  auto vs = s.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    int c = (p & g.neighbor_set(u)).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexSet candidates = p - g.neighbor_set(pivot);
  candidates.for_each([&](int v) {
    r.insert(v);
    bron_kerbosch(g, r, p & g.neighbor_set(v), x & g.neighbor_set(v), out);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  VertexSet r(g.order());
  bron_kerbosch(g, r, g.all_vertices(), VertexSet(g.order()), out);
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph intersect(const Subgraph& a, const Subgraph& b) {
  if (a.parent != b.parent) throw PreconditionError("intersect: subgraphs have different parents");
  return Subgraph(*a.parent, a.vertices & b.vertices);
}

bool same_labelled_graph(const Graph& a, const Graph& b) { return a.labels() == b.labels() && a == b; }

}  // namespace hhs
