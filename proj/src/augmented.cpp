#include "hhs/augmented.hpp"

#include <algorithm>

#include <json.hpp>

#include "hhs/errors.hpp"

namespace hhs {

int XGraph::clique_index(const VertexSet& c) const {
  for (std::size_t i = 0; i < cliques.size(); ++i)
    if (cliques[i] == c) return static_cast<int>(i);
  return -1;
}

XGraph make_x_graph(const Graph& base, const std::vector<std::pair<int, int>>& adjacency) {
  XGraph x{base, maximal_cliques(base), {}};
  const int m = static_cast<int>(x.cliques.size());
  std::vector<Edge> edges;
  for (auto [a, b] : adjacency) {
    if (a < 0 || b < 0 || a >= m || b >= m) throw PreconditionError("W-adjacency refers to a missing clique index");
    if (a == b) throw PreconditionError("W-adjacency pair joins a clique to itself");
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("w" + std::to_string(i));
  x.w = Graph(m, edges, labels);
  return x;
}

XGraph x_graph_sharing_vertex(const Graph& base) {
  auto cliques = maximal_cliques(base);
  std::vector<std::pair<int, int>> adj;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j)
      if (cliques[i].intersects(cliques[j])) adj.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return make_x_graph(base, adj);
}

std::vector<std::pair<int, int>> parse_w_adjacency(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("W-adjacency: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("W-adjacency must be a JSON list of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& p : doc) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw ParseError("W-adjacency entries must be [i, j] integer pairs");
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::base: return "base";
    case EdgeKind::w: return "w";
    case EdgeKind::cone: return "cone";
  }
  return "?";
}

namespace {

std::string projection_label(const Graph& host, const VertexSet& d) {
  std::string s = "b{";
  bool first = true;
  d.for_each([&](int v) {
    if (!first) s += ",";
    s += host.label(v);
    first = false;
  });
  return s + "}";
}

}  // namespace

AugmentedGraph::AugmentedGraph(FactorSystem fs, XGraph w) : fs_(std::move(fs)), w_(std::move(w)) {
  const Graph& host = fs_.host();
  if (!same_labelled_graph(host, w_.base)) throw PreconditionError("X-graph is over a different base graph");
  const int n = host.order();
  const int total = n + fs_.size() - 1;
  std::vector<std::string> labels(host.labels());
  for (int i = 1; i < fs_.size(); ++i) labels.push_back(projection_label(host, fs_.domain(i)));

  std::vector<Edge> edges(host.edges());
  for (const auto& e : w_.w.edges()) {
    const auto& a = w_.cliques[e.u];
    const auto& b = w_.cliques[e.v];
    a.for_each([&](int x) {
      b.for_each([&](int y) {
        if (x != y) edges.push_back({std::min(x, y), std::max(x, y)});
      });
    });
  }
  for (int i = 1; i < fs_.size(); ++i) {
    int b = projection_vertex(i);
    fs_.domain(i).for_each([&](int v) { edges.push_back({v, b}); });
  }
  cx_ = Graph(total, edges, labels);
  kinds_.resize(cx_.size());
  for (int id = 0; id < cx_.size(); ++id) {
    const auto& e = cx_.edges()[id];
    if (e.v >= n)
      kinds_[id] = EdgeKind::cone;
    else if (host.adjacent(e.u, e.v))
      kinds_[id] = EdgeKind::base;
    else
      kinds_[id] = EdgeKind::w;
  }
}

VertexSet AugmentedGraph::lift(const VertexSet& host_set) const {
  VertexSet out(cx_.order());
  host_set.for_each([&](int v) { out.insert(v); });
  return out;
}

VertexSet AugmentedGraph::projection_vertices_below(int f) const {
  VertexSet out(cx_.order());
  for (int j = 1; j < fs_.size(); ++j)
    if (fs_.proper_nested(j, f)) out.insert(projection_vertex(j));
  return out;
}

VertexSet AugmentedGraph::domain_vertices(int f) const {
  return lift(fs_.domain(f)) | projection_vertices_below(f);
}

VertexSet AugmentedGraph::projection_part(int f) const {
  VertexSet out(cx_.order());
  if (f == 0) return out;
  int p = fs_.perp(f);
  if (p >= 0) {
    out |= lift(fs_.domain(p));
    for (int j = 1; j < fs_.size(); ++j)
      if (fs_.nested(j, p)) out.insert(projection_vertex(j));
  }
  for (int j = 1; j < fs_.size(); ++j)
    if (fs_.nested(f, j)) out.insert(projection_vertex(j));
  return out;
}

VertexSet AugmentedGraph::complement(int f) const {
  return cx_.all_vertices() - projection_part(f);
}

VertexSet AugmentedGraph::leveled_complement(int f, int k) const {
  VertexSet out = cx_.all_vertices();
  if (f == 0) return out;
  int p = fs_.perp(f);
  if (p >= 0) {
    out -= lift(fs_.domain(p));
    for (int j = 1; j < fs_.size(); ++j)
      if (fs_.nested(j, p)) out.erase(projection_vertex(j));
  }
  for (int j = 1; j < fs_.size(); ++j)
    if (fs_.nested(f, j) && fs_.co_level(j) <= k) out.erase(projection_vertex(j));
  return out;
}

InducedGraph AugmentedGraph::z_modification(int f, int k) const {
  InducedGraph y = induced(cx_, leveled_complement(f, k));
  std::vector<Edge> edges(y.graph.edges());
  const int m = y.graph.order();
  for (int a = 0; a < m; ++a) {
    int da = domain_of(y.to_parent[a]);
    if (da < 0) continue;
    for (int b = a + 1; b < m; ++b) {
      int db = domain_of(y.to_parent[b]);
      if (db < 0) continue;
      if (fs_.proper_nested(da, db) || fs_.proper_nested(db, da)) edges.push_back({a, b});
    }
  }
  y.graph = Graph(m, edges, y.graph.labels());
  return y;
}

DotStyle AugmentedGraph::dot_style() const {
  DotStyle s;
  for (int v = 0; v < cx_.order(); ++v)
    s.node_attrs.push_back(v < host_order() ? "kind=\"host\"" : "kind=\"projection\", shape=box");
  for (int id = 0; id < cx_.size(); ++id) {
    std::string k = to_string(kinds_[id]);
    std::string attr = "kind=\"" + k + "\"";
    if (kinds_[id] == EdgeKind::w) attr += ", style=dashed";
    if (kinds_[id] == EdgeKind::cone) attr += ", style=dotted";
    s.edge_attrs.push_back(attr);
  }
  return s;
}

std::string AugmentedGraph::to_dot(const std::string& name) const {
  DotStyle s = dot_style();
  return hhs::to_dot(cx_, name, &s);
}

std::string AugmentedGraph::to_json() const {
  nlohmann::ordered_json doc;
  auto& vs = doc["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < cx_.order(); ++v) {
    nlohmann::ordered_json row;
    row["id"] = v;
    row["label"] = cx_.label(v);
    row["kind"] = v < host_order() ? "host" : "projection";
    if (v >= host_order()) {
      auto& dom = row["domain"] = nlohmann::ordered_json::array();
      fs_.domain(domain_of(v)).for_each([&](int x) { dom.push_back(fs_.host().label(x)); });
    }
    vs.push_back(row);
  }
  auto& es = doc["edges"] = nlohmann::ordered_json::array();
  for (int id = 0; id < cx_.size(); ++id) {
    const auto& e = cx_.edges()[id];
    es.push_back({{"u", cx_.label(e.u)}, {"v", cx_.label(e.v)}, {"kind", to_string(kinds_[id])}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace hhs
