#include <doctest.h>

#include <random>

#include "hhs/errors.hpp"
#include "hhs/gated.hpp"
#include "hhs/generators.hpp"
#include "hhs/hyperplanes.hpp"
#include "hhs/prisms.hpp"
#include "hhs/quasi_median.hpp"
#include "oracles.hpp"

using namespace hhs;

namespace {
Graph k4_minus() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// K3 x K3 with a pendant vertex 9 on corner 0.
Graph rook_with_pendant() {
  Graph r = gen::hamming(3, 2);
  std::vector<Edge> es = r.edges();
  es.push_back({0, 9});
  return Graph(10, es);
}
}  // namespace

TEST_CASE("quasi-medians of triples") {
  Graph t = gen::random_tree(15, 3);
  auto same = quasi_median_of_triple(t, 4, 4, 4);
  CHECK(same.k == 0);
  REQUIRE(same.triples.size() == 1);
  CHECK(same.triples[0] == std::array<int, 3>{4, 4, 4});
  auto tri = quasi_median_of_triple(t, 2, 9, 14);
  CHECK(tri.k == 0);
  CHECK(tri.triples.size() == 1);
  auto k3 = quasi_median_of_triple(gen::complete(3), 0, 1, 2);
  CHECK(k3.k == 1);
  REQUIRE(k3.triples.size() == 1);
  CHECK(k3.triples[0] == std::array<int, 3>{0, 1, 2});
  CHECK_THROWS_AS(quasi_median_of_triple(Graph(3, {{0, 1}}), 0, 1, 2), PreconditionError);
}

TEST_CASE("quasi-median recognition") {
  for (const Graph& g : {gen::hypercube(3), gen::hamming(3, 2), gen::random_tree(20, 5), gen::glued_squares(3)}) {
    auto r = is_quasi_median(g);
    CHECK(r.is_quasi_median);
    CHECK(r.failure == QmFailure::none);
  }
  auto k = is_quasi_median(k4_minus());
  CHECK(k.failure == QmFailure::k4_minus);
  CHECK(witness_holds(k4_minus(), k));
  auto c5 = is_quasi_median(gen::cycle(5));
  CHECK(c5.failure == QmFailure::triple);
  CHECK(witness_holds(gen::cycle(5), c5));
  auto c6 = is_quasi_median(gen::cycle(6));
  CHECK(c6.failure == QmFailure::c6_hull);
  CHECK(witness_holds(gen::cycle(6), c6));
  auto dis = is_quasi_median(Graph(2));
  CHECK(dis.failure == QmFailure::disconnected);
}

TEST_CASE("a witness for the wrong graph does not hold") {
  auto k = is_quasi_median(k4_minus());
  CHECK_FALSE(witness_holds(gen::complete(4), k));
}

TEST_CASE("hyperplanes of small graphs") {
  Graph t = gen::random_tree(12, 8);
  HyperplaneSystem ht(t);
  CHECK(ht.count() == t.size());
  HyperplaneSystem k3(gen::complete(3));
  CHECK(k3.count() == 1);
  CHECK(k3.dual_edges(0).size() == 3);
  HyperplaneSystem q3(gen::hypercube(3));
  CHECK(q3.count() == 3);
  for (int h = 0; h < 3; ++h) CHECK(q3.dual_edges(h).size() == 4);
}

TEST_CASE("hyperplane count matches Theta classes on median graphs") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_quasi_median(rng);
    if (g.order() > 30) continue;
    HyperplaneSystem hs(g);
    CHECK(hs.count() == oracle::theta_classes(g));
  }
}

TEST_CASE("carriers, fibres and sectors") {
  Graph p2 = gen::path(2);
  HyperplaneSystem e(p2);
  CHECK(e.carrier(0) == VertexSet(2, {0, 1}));
  CHECK(e.fibres(0).size() == 2);
  CHECK(e.sectors(0).size() == 2);
  HyperplaneSystem k3(gen::complete(3));
  CHECK(k3.carrier(0).count() == 3);
  CHECK(k3.fibres(0).size() == 3);
  CHECK(k3.sectors(0).size() == 3);
  HyperplaneSystem q3(gen::hypercube(3));
  for (int h = 0; h < 3; ++h) {
    CHECK(q3.carrier(h).count() == 8);
    REQUIRE(q3.fibres(h).size() == 2);
    for (const auto& f : q3.fibres(h)) {
      CHECK(f.count() == 4);
      CHECK(oracle::gated(q3.graph(), f.to_vector()));
    }
    CHECK(q3.sectors(h).size() == 2);
  }
}

TEST_CASE("crossing and osculation") {
  HyperplaneSystem q2(gen::hypercube(2));
  CHECK(q2.crosses(0, 1));
  CHECK_FALSE(q2.osculates(0, 1));
  HyperplaneSystem p3(gen::path(3));
  CHECK(p3.osculates(0, 1));
  CHECK_FALSE(p3.crosses(0, 1));
  HyperplaneSystem rook(gen::hamming(3, 2));
  REQUIRE(rook.count() == 2);
  CHECK(rook.crosses(0, 1));
  CHECK_THROWS_AS(rook.crosses(1, 1), PreconditionError);
  CHECK_THROWS_AS(rook.osculates(0, 0), PreconditionError);
}

TEST_CASE("gates") {
  Graph q3 = gen::hypercube(3);
  auto d = distance_matrix(q3);
  VertexSet face(8, {0, 1, 2, 3});
  CHECK(gate(d, face, 2) == 2);
  CHECK(gate(d, face, 7) == 3);
  Graph t = gen::path(6);
  auto dt = distance_matrix(t);
  CHECK(gate(dt, VertexSet(6, {3, 4, 5}), 0) == 3);
  CHECK_THROWS_AS(gate(d, VertexSet(8, {0, 1, 3}), 2), PreconditionError);
}

TEST_CASE("gatedness") {
  Graph rook = gen::hamming(3, 2);
  auto dr = distance_matrix(rook);
  for (const auto& c : maximal_cliques(rook)) CHECK(is_gated(rook, dr, c).gated);
  Graph q2 = gen::hypercube(2);
  CHECK_THROWS_AS(is_gated(q2, distance_matrix(q2), VertexSet(4, {0, 3})), PreconditionError);
  CHECK_THROWS_AS(is_gated(q2, distance_matrix(q2), VertexSet(4)), PreconditionError);
  Graph q3 = gen::hypercube(3);
  auto path = is_gated(q3, distance_matrix(q3), VertexSet(8, {0, 1, 3}));
  CHECK_FALSE(path.gated);
  CHECK(path.witness == 2);
}

TEST_CASE("is_gated agrees with the definition") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_quasi_median(rng);
    if (g.order() > 24) continue;
    auto d = distance_matrix(g);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    VertexSet s(g.order(), {pick(rng)});
    for (int k = 0; k < 3; ++k) {
      int v = pick(rng);
      if (g.neighbor_set(v).intersects(s)) s.insert(v);
    }
    CHECK(is_gated(g, d, s).gated == oracle::gated(g, s.to_vector()));
    auto hull = gated_hull(g, d, s);
    CHECK(s.is_subset_of(hull));
    CHECK(oracle::gated(g, hull.to_vector()));
  }
}

TEST_CASE("gated hulls") {
  Graph q3 = gen::hypercube(3);
  auto d = distance_matrix(q3);
  CHECK(gated_hull(q3, d, VertexSet(8, {5})) == VertexSet(8, {5}));
  CHECK(gated_hull(q3, d, VertexSet(8, {0, 7})) == VertexSet::full(8));
  Graph k3 = gen::complete(3);
  CHECK(gated_hull(k3, distance_matrix(k3), VertexSet(3, {0, 1})) == VertexSet::full(3));
}

TEST_CASE("gate projections") {
  Graph q3 = gen::hypercube(3);
  HyperplaneSystem hs(q3);
  VertexSet bottom(8, {0, 1, 2, 3}), top(8, {4, 5, 6, 7});
  CHECK(gate_projection(hs, bottom, top) == top);
  VertexSet edge(8, {0, 1});
  CHECK(gate_projection(hs, edge, bottom) == edge);
  Graph t = gen::path(7);
  HyperplaneSystem ht(t);
  CHECK(gate_projection(ht, VertexSet(7, {0, 1}), VertexSet(7, {4, 5, 6})) == VertexSet(7, {4}));
}

TEST_CASE("maximal prisms") {
  Graph t = gen::random_tree(10, 2);
  auto pt = maximal_prisms(HyperplaneSystem(t));
  CHECK(pt.size() == 9);
  for (const auto& p : pt) CHECK(p.vertices.count() == 2);
  auto pq = maximal_prisms(HyperplaneSystem(gen::hypercube(3)));
  REQUIRE(pq.size() == 1);
  CHECK(pq[0].vertices.count() == 8);
  auto pr = maximal_prisms(HyperplaneSystem(rook_with_pendant()));
  REQUIRE(pr.size() == 2);
  std::set<int> sizes{pr[0].vertices.count(), pr[1].vertices.count()};
  CHECK(sizes == std::set<int>{2, 9});
}

TEST_CASE("separating hyperplanes") {
  Graph q3 = gen::hypercube(3);
  HyperplaneSystem hs(q3);
  CHECK(hs.separating(3, 3).empty());
  CHECK(hs.separating(0, 7).size() == 3);
  Graph t = gen::path(5);
  HyperplaneSystem ht(t);
  CHECK(ht.separating(1, 4) == std::vector<int>{1, 2, 3});
}

TEST_CASE("distance equals the number of separating hyperplanes") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 25; ++t) {
    Graph g = oracle::random_quasi_median(rng);
    HyperplaneSystem hs(g);
    const auto& d = hs.distances();
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y) REQUIRE(static_cast<int>(hs.separating(x, y).size()) == d(x, y));
  }
}

TEST_CASE("products of quasi-median graphs are quasi-median") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 12; ++t) {
    Graph a = gen::random_tree(std::uniform_int_distribution<int>(2, 5)(rng), rng());
    Graph b = std::uniform_int_distribution<int>(0, 1)(rng) ? gen::complete(3) : gen::path(3);
    Graph p = gen::cartesian_product(a, b);
    CHECK(is_quasi_median(p).is_quasi_median);
    CHECK(HyperplaneSystem(p).count() == HyperplaneSystem(a).count() + HyperplaneSystem(b).count());
  }
}
