#include <doctest.h>

#include <random>

#include "hhs/augmented.hpp"
#include "hhs/errors.hpp"
#include "hhs/factor_system.hpp"
#include "hhs/generators.hpp"
#include "hhs/qm_pipeline.hpp"
#include "oracles.hpp"

using namespace hhs;

namespace {
int find_domain(const FactorSystem& fs, std::initializer_list<int> vs) {
  return fs.find(VertexSet(fs.host().order(), vs));
}

std::vector<Graph> corpus() {
  return {gen::hypercube(3), gen::hamming(3, 2), gen::random_tree(15, 9), gen::glued_squares(3),
          gen::cartesian_product(gen::path(3), gen::path(4)), gen::hypercube(4)};
}
}  // namespace

TEST_CASE("closure of small hosts") {
  auto discrete = minimal_factor_system(Graph(4));
  CHECK(discrete.size() == 1);
  CHECK(discrete.complexity() == 1);
  auto k3 = minimal_factor_system(gen::complete(3));
  CHECK(k3.size() == 7);
  CHECK(k3.complexity() == 3);
  auto k2 = minimal_factor_system(gen::complete(2));
  CHECK(k2.size() == 3);
  auto k4 = minimal_factor_system(gen::complete(4));
  CHECK(k4.size() == 15);
}

TEST_CASE("closure respects the cap and the seed requirements") {
  CHECK_THROWS_AS(minimal_factor_system(gen::complete(5), 10), CapExceeded);
  Graph p3 = gen::path(3);
  CHECK_THROWS_AS(close_factor_system(p3, {p3.all_vertices()}), PreconditionError);
}

TEST_CASE("domain order and co-levels") {
  auto fs = minimal_factor_system(gen::complete(3));
  CHECK(fs.domain(0) == VertexSet::full(3));
  for (int i = 1; i < fs.size(); ++i) CHECK(fs.domain(i - 1).count() >= fs.domain(i).count());
  CHECK(fs.co_level(0) == 0);
  CHECK(fs.co_level(find_domain(fs, {0, 1})) == 1);
  CHECK(fs.co_level(find_domain(fs, {2})) == 2);
}

TEST_CASE("relations") {
  auto fs = minimal_factor_system(gen::complete(3));
  int a = find_domain(fs, {0}), b = find_domain(fs, {1}), e = find_domain(fs, {0, 1});
  CHECK(fs.relation(a, b) == Relation::orthogonal);
  CHECK(fs.relation(b, a) == Relation::orthogonal);
  CHECK(fs.relation(a, e) == Relation::nested);
  CHECK(fs.relation(e, a) == Relation::contains);
  CHECK(fs.relation(a, a) == Relation::equal);
  auto c5 = minimal_factor_system(gen::cycle(5));
  int l0 = find_domain(c5, {1, 4}), l3 = find_domain(c5, {2, 4});
  REQUIRE(l0 >= 0);
  REQUIRE(l3 >= 0);
  CHECK(c5.relation(l0, l3) == Relation::transverse);
}

TEST_CASE("closed family passes the factor-system check") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 25; ++t) {
    Graph g = oracle::random_connected(rng, std::uniform_int_distribution<int>(2, 9)(rng), 6);
    auto fs = minimal_factor_system(g);
    CHECK(factor_system_violation(g, fs.domains()).empty());
    for (int i = 0; i < fs.size(); ++i) {
      auto is = induced_system(fs, i);
      CHECK(factor_system_violation(is.graph.graph, is.family).empty());
      CHECK(fs.complexity() - fs.co_level(i) >= 1);
    }
  }
  Graph p3 = gen::path(3);
  CHECK_FALSE(factor_system_violation(p3, {p3.all_vertices()}).empty());
}

TEST_CASE("quasi-median pipeline domains") {
  auto q = build_qm_system(gen::hypercube(3));
  CHECK(q.fs.size() == 7);
  auto rook = build_qm_system(gen::hamming(3, 2));
  CHECK(rook.fs.size() == 3);
  auto tree = build_qm_system(gen::random_tree(12, 1));
  CHECK(tree.fs.size() == 1);
  CHECK(tree.delta.size() == 0);
}

TEST_CASE("link of a hyperplane is the crossing graph of its fibre") {
  for (const Graph& g : corpus()) {
    auto q = build_qm_system(g);
    Graph delta = q.hs.crossing_graph();
    for (int h = 0; h < q.hs.count(); ++h) {
      VertexSet lk = link(delta, VertexSet(delta.order(), {h}));
      for (const auto& fibre : q.hs.fibres(h)) {
        auto local = crossing_graph_of(q.hs, fibre);
        VertexSet ids(delta.order(), std::span<const int>(local.hyperplanes));
        CHECK(ids == lk);
        CHECK(same_labelled_graph(local.graph, induced(delta, lk).graph));
      }
    }
  }
}

TEST_CASE("X-graphs from prisms") {
  Graph t = gen::random_tree(9, 6);
  HyperplaneSystem ht(t);
  auto wt = x_graph_from_prisms(ht, maximal_prisms(ht));
  REQUIRE(wt.w.order() == t.size());
  for (int i = 0; i < wt.w.order(); ++i)
    for (int j = i + 1; j < wt.w.order(); ++j) {
      auto ei = t.edges()[ht.dual_edges(wt.cliques[i].first())[0]];
      auto ej = t.edges()[ht.dual_edges(wt.cliques[j].first())[0]];
      bool share = ei.u == ej.u || ei.u == ej.v || ei.v == ej.u || ei.v == ej.v;
      CHECK(wt.w.adjacent(i, j) == share);
    }
  HyperplaneSystem hq(gen::hypercube(3));
  auto wq = x_graph_from_prisms(hq, maximal_prisms(hq));
  CHECK(wq.w.order() == 1);
  CHECK(wq.w.size() == 0);
  HyperplaneSystem hg(gen::glued_squares(2));
  auto wg = x_graph_from_prisms(hg, maximal_prisms(hg));
  CHECK(wg.w.order() == 2);
  CHECK(wg.w.size() == 1);
}

TEST_CASE("augmented graph of the cube") {
  auto q = build_qm_system(gen::hypercube(3));
  auto aug = qm_augmented(q);
  const Graph& cx = aug.graph();
  CHECK(cx.order() == 9);
  CHECK(cx.size() == 12);
  int cone = 0, base = 0;
  for (int e = 0; e < cx.size(); ++e) {
    cone += aug.kind(e) == EdgeKind::cone;
    base += aug.kind(e) == EdgeKind::base;
  }
  CHECK(cone == 9);
  CHECK(base == 3);
  std::string dot = aug.to_dot();
  CHECK(dot.find("b{H") != std::string::npos);
}

TEST_CASE("augmented graph with only the host") {
  Graph p = gen::path(4);
  auto fs = close_factor_system(Graph(4), {VertexSet::full(4)});
  AugmentedGraph aug(fs, x_graph_sharing_vertex(Graph(4)));
  CHECK(aug.graph().order() == 4);
  CHECK(aug.graph().size() == 0);
  auto tree = build_qm_system(gen::random_tree(14, 2));
  auto at = qm_augmented(tree);
  CHECK(same_labelled_graph(at.graph(), tree.hs.contact_graph()));
}

TEST_CASE("projection parts in the cube") {
  auto q = build_qm_system(gen::hypercube(3));
  auto aug = qm_augmented(q);
  int h0 = find_domain(q.fs, {0});
  VertexSet pf = aug.projection_part(h0);
  CHECK(pf.count() == 8);
  CHECK_FALSE(pf.contains(0));
  CHECK(pf.contains(1));
  CHECK(pf.contains(aug.projection_vertex(h0)));
  CHECK(aug.complement(h0) == VertexSet(9, {0}));
  CHECK(aug.projection_part(0).empty());
}

TEST_CASE("projection part of a domain without link") {
  Graph c5 = gen::cycle(5);
  auto fs = minimal_factor_system(c5);
  AugmentedGraph aug(fs, x_graph_sharing_vertex(c5));
  for (int f = 1; f < fs.size(); ++f) {
    if (!fs.link_of(f).empty()) continue;
    bool only_host_above = true;
    for (int g = 1; g < fs.size(); ++g)
      if (g != f && fs.nested(f, g)) only_host_above = false;
    if (only_host_above) CHECK(aug.projection_part(f) == VertexSet(aug.graph().order(), {aug.projection_vertex(f)}));
  }
}

TEST_CASE("complement identities") {
  for (const Graph& g : corpus()) {
    auto q = build_qm_system(g);
    auto aug = qm_augmented(q);
    const auto& fs = aug.system();
    for (int f = 1; f < fs.size(); ++f) {
      CHECK(aug.leveled_complement(f, fs.co_level(f)) == aug.complement(f));
      CHECK(aug.complement(f).is_subset_of(aug.leveled_complement(f, 0)));
      CHECK((aug.complement(f) | aug.projection_part(f)) == aug.graph().all_vertices());
      for (int g2 = 1; g2 < fs.size(); ++g2)
        if (fs.proper_nested(g2, f)) CHECK(aug.projection_part(f).is_subset_of(aug.projection_part(g2)));
    }
  }
}

TEST_CASE("co-levels of the clique system") {
  auto fs = minimal_factor_system(gen::complete(4));
  for (int i = 0; i < fs.size(); ++i) {
    // the host sits above everything, so the min-variant collapses to 1
    CHECK(fs.co_level_min(i) == (i == 0 ? 0 : 1));
    CHECK(fs.co_level(i) == 4 - fs.domain(i).count());
  }
}

TEST_CASE("parsing W adjacency") {
  auto adj = parse_w_adjacency("[[0,1],[1,2]]");
  CHECK(adj.size() == 2);
  CHECK_THROWS_AS(parse_w_adjacency("[[0]]"), ParseError);
  CHECK_THROWS_AS(make_x_graph(gen::path(3), {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(make_x_graph(gen::path(3), {{0, 5}}), PreconditionError);
}
