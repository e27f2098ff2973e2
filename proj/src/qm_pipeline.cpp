#include "hhs/qm_pipeline.hpp"

#include <algorithm>

#include "hhs/errors.hpp"
#include "hhs/gated.hpp"

namespace hhs {

namespace {

// Ambient hyperplane of each hyperplane of the induced subgraph.
std::vector<int> extend_hyperplanes(const HyperplaneSystem& ambient, const InducedGraph& sub,
                                    const HyperplaneSystem& local) {
  std::vector<int> out(local.count());
  std::vector<bool> used(ambient.count(), false);
  for (int h = 0; h < local.count(); ++h) {
    const auto& e = sub.graph.edges()[local.dual_edges(h).front()];
    out[h] = ambient.hyperplane_of(sub.to_parent[e.u], sub.to_parent[e.v]);
    if (used[out[h]]) throw InvariantViolation("two hyperplanes of a subgraph extend to the same hyperplane");
    used[out[h]] = true;
  }
  return out;
}

}  // namespace

LocalCrossing crossing_graph_of(const HyperplaneSystem& hs, const VertexSet& s) {
  InducedGraph sub = induced(hs.graph(), s);
  HyperplaneSystem local(sub.graph);
  std::vector<int> global = extend_hyperplanes(hs, sub, local);
  std::vector<int> order(local.count());
  for (int h = 0; h < local.count(); ++h) order[h] = h;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return global[a] < global[b]; });
  LocalCrossing out;
  std::vector<std::string> labels;
  for (int h : order) {
    out.hyperplanes.push_back(global[h]);
    labels.push_back(HyperplaneSystem::label(global[h]));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < local.count(); ++i)
    for (int j = i + 1; j < local.count(); ++j)
      if (local.crosses(order[i], order[j])) edges.push_back({i, j});
  out.graph = Graph(local.count(), edges, labels);
  return out;
}

XGraph x_graph_from_prisms(const HyperplaneSystem& hs, const std::vector<Prism>& prisms) {
  std::vector<std::pair<int, int>> adj;
  for (std::size_t i = 0; i < prisms.size(); ++i)
    for (std::size_t j = i + 1; j < prisms.size(); ++j)
      if (prisms[i].vertices.intersects(prisms[j].vertices))
        adj.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return make_x_graph(hs.crossing_graph(), adj);
}

QmSystem build_qm_system(const Graph& g, int cap) {
  if (g.size() == 0) throw PreconditionError("quasi-median pipeline needs at least one edge");
  if (!is_connected(g)) throw PreconditionError("quasi-median pipeline needs a connected graph");
  HyperplaneSystem hs(g);
  Graph delta = hs.crossing_graph();
  FactorSystem fs = minimal_factor_system(delta, cap);
  std::vector<VertexSet> gated(fs.size());
  for (int i = 0; i < fs.size(); ++i) {
    const auto& o = fs.origin(i);
    if (i == 0) {
      gated[i] = g.all_vertices();
    } else if (o.a < 0) {
      int h = -1;
      for (int v = 0; v < delta.order() && h < 0; ++v)
        if (link(delta, VertexSet(delta.order(), {v})) == fs.domain(i)) h = v;
      if (h < 0) throw InvariantViolation("seed domain is not a hyperplane link");
      gated[i] = hs.fibres(h).front();
    } else {
      gated[i] = gate_projection(hs, gated[o.a], gated[o.b]);
    }
    LocalCrossing lc = crossing_graph_of(hs, gated[i]);
    InducedGraph expect = induced(delta, fs.domain(i));
    if (lc.hyperplanes != fs.domain(i).to_vector() || !same_labelled_graph(lc.graph, expect.graph))
      throw InvariantViolation("domain differs from the crossing graph of its gated subgraph");
  }
  std::vector<Prism> prisms = maximal_prisms(hs);
  XGraph w = x_graph_from_prisms(hs, prisms);
  return QmSystem{std::move(hs), std::move(delta), std::move(fs), std::move(gated), std::move(prisms), std::move(w)};
}

AugmentedGraph qm_augmented(const QmSystem& q) {
  AugmentedGraph chat(q.fs, q.w);
  InducedGraph onto = induced(chat.graph(), chat.lift(q.delta.all_vertices()));
  if (!same_labelled_graph(onto.graph, q.hs.contact_graph()))
    throw InvariantViolation("augmented graph on the hyperplanes is not the contact graph");
  return chat;
}

std::vector<VertexSet> qm_neighbourhoods(const QmSystem& q, const AugmentedGraph& chat) {
  std::vector<VertexSet> out;
  for (int v = 0; v < chat.graph().order(); ++v) {
    int d = chat.domain_of(v);
    out.push_back(d < 0 ? q.hs.carrier(v) : q.gated[d]);
  }
  return out;
}

XGraph qm_w_family(const QmSystem& q, int f) {
  InducedGraph sub = induced(q.hs.graph(), q.gated[f]);
  HyperplaneSystem local(sub.graph);
  std::vector<int> global = extend_hyperplanes(q.hs, sub, local);
  InducedGraph dom = induced(q.delta, q.fs.domain(f));
  auto cliques = maximal_cliques(dom.graph);
  auto prisms = maximal_prisms(local);
  std::vector<int> clique_of(prisms.size(), -1);
  std::vector<bool> hit(cliques.size(), false);
  for (std::size_t i = 0; i < prisms.size(); ++i) {
    VertexSet c(dom.graph.order());
    for (int h : prisms[i].hyperplanes) {
      int l = dom.local(global[h]);
      if (l < 0) throw InvariantViolation("prism hyperplane outside its domain");
      c.insert(l);
    }
    for (std::size_t j = 0; j < cliques.size(); ++j)
      if (cliques[j] == c) clique_of[i] = static_cast<int>(j);
    if (clique_of[i] < 0 || hit[clique_of[i]]) throw InvariantViolation("prisms of a domain do not match its maximal cliques");
    hit[clique_of[i]] = true;
  }
  if (prisms.size() != cliques.size()) throw InvariantViolation("prisms of a domain do not match its maximal cliques");
  std::vector<std::pair<int, int>> adj;
  for (std::size_t i = 0; i < prisms.size(); ++i)
    for (std::size_t j = i + 1; j < prisms.size(); ++j)
      if (prisms[i].vertices.intersects(prisms[j].vertices)) adj.emplace_back(clique_of[i], clique_of[j]);
  return make_x_graph(dom.graph, adj);
}

}  // namespace hhs
