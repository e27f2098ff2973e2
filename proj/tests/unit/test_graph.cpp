#include <doctest.h>

#include <random>

#include "hhs/errors.hpp"
#include "hhs/generators.hpp"
#include "hhs/graph.hpp"
#include "oracles.hpp"

using namespace hhs;

namespace {
std::set<std::vector<int>> as_set(const std::vector<VertexSet>& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.to_vector());
  return out;
}
}  // namespace

TEST_CASE("link of a vertex") {
  Graph k4 = gen::complete(4);
  CHECK(link(k4, VertexSet(4, {0})) == VertexSet(4, {1, 2, 3}));
  Graph c5 = gen::cycle(5);
  CHECK(link(c5, VertexSet(5, {0})) == VertexSet(5, {1, 4}));
  Graph p3 = gen::path(3);
  CHECK(link(p3, VertexSet(3, {0, 2})) == VertexSet(3, {1}));
}

TEST_CASE("link of the empty set is rejected") {
  CHECK_THROWS_AS(link(gen::path(3), VertexSet(3)), PreconditionError);
}

TEST_CASE("subgraph link stays inside the subgraph") {
  Graph k4 = gen::complete(4);
  Subgraph s(k4, VertexSet(4, {0}));
  CHECK(link(s).vertices == VertexSet(4, {1, 2, 3}));
}

TEST_CASE("maximal cliques of small graphs") {
  CHECK(maximal_cliques(gen::complete(3)).size() == 1);
  auto c5 = maximal_cliques(gen::cycle(5));
  CHECK(c5.size() == 5);
  for (const auto& c : c5) CHECK(c.count() == 2);
  auto rook = maximal_cliques(gen::hamming(3, 2));
  CHECK(rook.size() == 6);
  for (const auto& c : rook) CHECK(c.count() == 3);
}

TEST_CASE("maximal cliques match subset enumeration on random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Graph g = oracle::random_connected(rng, n, std::uniform_int_distribution<int>(0, 2 * n)(rng));
    auto got = maximal_cliques(g);
    CHECK(as_set(got) == oracle::cliques(g));
    CHECK(std::is_sorted(got.begin(), got.end()));
    for (const auto& c : got) CHECK(is_clique(g, c));
  }
}

TEST_CASE("distance matrix conventions") {
  auto e = distance_matrix(gen::path(2));
  CHECK(e(0, 1) == 1);
  CHECK(e(0, 0) == 0);
  auto two = distance_matrix(Graph(2));
  CHECK(two(0, 1) == DistanceMatrix::kUnreachable);
  CHECK_FALSE(two.connected());
  CHECK(distance_matrix(gen::cycle(6))(0, 3) == 3);
}

TEST_CASE("distance matrix agrees with Floyd-Warshall") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    int n = std::uniform_int_distribution<int>(1, 30)(rng);
    Graph g = oracle::random_connected(rng, n, std::uniform_int_distribution<int>(0, n)(rng));
    auto d = distance_matrix(g);
    auto f = oracle::floyd(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(d(i, j) == f[i][j]);
  }
}

TEST_CASE("intersect of subgraphs") {
  Graph c4 = gen::cycle(4);
  Subgraph a(c4, VertexSet(4, {0, 1, 2})), b(c4, VertexSet(4, {1, 2, 3}));
  CHECK(intersect(a, a) == a);
  auto ab = intersect(a, b);
  CHECK(ab.vertices == VertexSet(4, {1, 2}));
  CHECK(ab.materialize().graph.size() == 1);
  CHECK(intersect(Subgraph(c4, VertexSet(4, {0})), Subgraph(c4, VertexSet(4, {2}))).empty());
  Graph other = gen::cycle(4);
  CHECK_THROWS_AS(intersect(a, Subgraph(other, VertexSet(4, {0}))), PreconditionError);
}

TEST_CASE("link is antitone") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    int n = std::uniform_int_distribution<int>(2, 14)(rng);
    Graph g = oracle::random_connected(rng, n, n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    VertexSet s(n, {pick(rng)});
    VertexSet bigger = s;
    bigger.insert(pick(rng));
    CHECK(link(g, bigger).is_subset_of(link(g, s)));
    link(g, s).for_each([&](int v) { CHECK(g.adjacent(v, s.first())); });
  }
}

TEST_CASE("graph construction rejects loops and merges duplicates") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), PreconditionError);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.edge_id(1, 0) == 0);
  CHECK(g.edge_id(0, 2) == -1);
}

TEST_CASE("generator sizes") {
  CHECK(gen::hypercube(3).order() == 8);
  CHECK(gen::hypercube(3).size() == 12);
  CHECK(gen::hamming(3, 2).order() == 9);
  CHECK(gen::hamming(3, 2).size() == 18);
  CHECK(gen::cycle(6).size() == 6);
  CHECK(gen::random_tree(30, 4).size() == 29);
  CHECK(is_connected(gen::random_tree(30, 4)));
  CHECK(gen::glued_squares(2).order() == 6);
}
