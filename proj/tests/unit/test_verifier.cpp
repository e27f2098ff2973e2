#include <doctest.h>

#include <map>
#include <random>

#include "hhs/axioms.hpp"
#include "hhs/errors.hpp"
#include "hhs/generators.hpp"
#include "hhs/report.hpp"

using namespace hhs;

namespace {
ProtoHierarchy qm_proto(const Graph& g) { return ProtoHierarchy(qm_augmented(build_qm_system(g))); }

std::map<std::string, std::string> constants(const FullReport& r) {
  std::map<std::string, std::string> out;
  for (const auto& a : r.axioms) out[a.name] = a.infinite ? "inf" : a.constant.str();
  return out;
}

const char* const kOrder[] = {"projection_diameter", "projection_lipschitz", "projection_coverage", "rho_diameter",
                              "hyperbolicity",       "complexity",           "containers",          "bgi",
                              "combinatorial_bgi",   "consistency",          "large_links",         "partial_realization",
                              "uniqueness",          "qi_multiplicative",    "qi_additive",         "hierarchy_condition",
                              "bottleneck"};

void check_pinned(const Graph& g, const std::vector<std::string>& expected) {
  RunConfig cfg;
  FullReport r = full_report(g, cfg);
  CHECK(r.ok);
  auto c = constants(r);
  REQUIRE(r.axioms.size() == 17);
  for (int i = 0; i < 17; ++i) {
    CAPTURE(kOrder[i]);
    CHECK(r.axioms[i].name == kOrder[i]);
    CHECK(c[kOrder[i]] == expected[i]);
    CHECK(r.replayed[i]);
  }
}
}  // namespace

TEST_CASE("host-only system is vacuous") {
  Graph g(3);
  auto fs = close_factor_system(g, {g.all_vertices()});
  ProtoHierarchy ph(AugmentedGraph(fs, x_graph_sharing_vertex(g)));
  CHECK(ph.pi(0, 1) == VertexSet(3, {1}));
  CHECK_FALSE(ph.rho_defined(0, 0));
  CHECK(check_consistency(ph).constant == Ratio(0));
  CHECK(check_bgi(ph).constant == Ratio(0));
  CHECK(check_large_links(ph).constant == Ratio(0));
  CHECK(check_containers(ph).status == Status::pass);
}

TEST_CASE("projections in the cube pipeline") {
  auto ph = qm_proto(gen::hypercube(3));
  REQUIRE(ph.w_count() == 1);
  CHECK(ph.pi(0, 0) == VertexSet(9, {0, 1, 2}));
  for (int f = 0; f < ph.domain_count(); ++f) CHECK_FALSE(ph.pi(f, 0).empty());
  CHECK(check_projection_diameter(ph).constant == Ratio(3));
}

TEST_CASE("projections in the glued squares pipeline") {
  auto ph = qm_proto(gen::glued_squares(2));
  REQUIRE(ph.w_count() == 2);
  const auto& fs = ph.system();
  for (int f = 1; f < fs.size(); ++f)
    for (int w = 0; w < 2; ++w) {
      CHECK_FALSE(ph.pi(f, w).empty());
      CHECK(ph.pi(f, w).is_subset_of(ph.cf(f)));
    }
  auto cons = check_consistency(ph);
  CHECK_FALSE(cons.infinite);
  CHECK(replay_witness(ph, cons) == cons.constant);
}

TEST_CASE("containers in the triangle system") {
  auto ph = qm_proto(gen::hypercube(3));
  const auto& fs = ph.system();
  int h = fs.find(VertexSet(3, {0}));
  int opposite = fs.find(VertexSet(3, {1, 2}));
  CHECK(fs.perp(h) == opposite);
  CHECK(check_containers(ph).status == Status::pass);
}

TEST_CASE("witness replay matches every numeric check") {
  for (const Graph& g : {gen::hypercube(3), gen::hamming(3, 2), gen::glued_squares(3), gen::random_tree(12, 4)}) {
    auto ph = qm_proto(g);
    CheckOptions opt;
    for (const auto& r : {check_projection_diameter(ph), check_projection_lipschitz(ph), check_projection_coverage(ph),
                          check_rho_diameter(ph), check_hyperbolicity(ph), check_complexity(ph), check_bgi(ph, opt),
                          check_combinatorial_bgi(ph), check_consistency(ph), check_large_links(ph),
                          check_partial_realization(ph, opt), check_qi_multiplicative(ph), check_qi_additive(ph)}) {
      CAPTURE(r.name);
      CHECK(replay_witness(ph, r) == r.constant);
    }
  }
}

TEST_CASE("a tampered witness does not replay") {
  auto ph = qm_proto(gen::glued_squares(3));
  auto r = check_projection_diameter(ph);
  REQUIRE(r.constant > Ratio(0));
  r.constant = Ratio(r.constant.num + 1, r.constant.den);
  CHECK_FALSE(replay_witness(ph, r) == r.constant);
}

TEST_CASE("coordinates of actual points") {
  for (const Graph& g : {gen::hypercube(3), gen::hamming(3, 2), gen::glued_squares(3)}) {
    auto ph = qm_proto(g);
    int bound = static_cast<int>(check_projection_diameter(ph).constant.value());
    for (int w = 0; w < ph.w_count(); ++w) {
      auto t = coordinates(ph, w);
      auto tc = tuple_consistency(ph, t);
      CHECK(tc.kappa <= std::max(bound, static_cast<int>(check_consistency(ph).constant.value())) + bound);
      auto real = realize_tuple(ph, t, tc.kappa);
      CHECK(real.deviation == 0);
      CHECK(ph.hausdorff(0, ph.pi(0, real.w), t[0]) == 0);
    }
  }
}

TEST_CASE("inconsistent tuples are rejected") {
  auto ph = qm_proto(gen::glued_squares(3));
  REQUIRE(ph.w_count() >= 3);
  auto a = coordinates(ph, 0);
  auto b = coordinates(ph, ph.w_count() - 1);
  Tuple mixed = a;
  for (std::size_t f = 0; f < mixed.size(); f += 2) mixed[f] = b[f];
  auto tc = tuple_consistency(ph, mixed);
  REQUIRE(tc.kappa > 0);
  CHECK(tc.u >= 0);
  CHECK_THROWS_AS(realize_tuple(ph, mixed, tc.kappa - 1), PreconditionError);
  CHECK_NOTHROW(realize_tuple(ph, mixed, tc.kappa));
}

TEST_CASE("uniqueness table is monotone") {
  auto ph = qm_proto(gen::glued_squares(3));
  auto u = check_uniqueness(ph);
  REQUIRE_FALSE(u.theta.empty());
  for (std::size_t k = 1; k < u.theta.size(); ++k) CHECK(u.theta[k] >= u.theta[k - 1]);
  CHECK(u.cross_component_pairs == 0);
}

TEST_CASE("hierarchy condition on quasi-median pipelines") {
  for (const Graph& g : {gen::hypercube(3), gen::hamming(3, 2), gen::glued_squares(2)}) {
    auto q = build_qm_system(g);
    auto aug = qm_augmented(q);
    auto rep = check_hierarchy_condition(aug, [&](int f) { return qm_w_family(q, f); }, true);
    CHECK(rep.ok());
    CHECK(rep.maps_checked > 0);
  }
}

TEST_CASE("hierarchy condition identity map at the host") {
  Graph g = gen::cycle(5);
  AugmentedGraph aug(minimal_factor_system(g), x_graph_sharing_vertex(g));
  auto rep = check_hierarchy_condition(aug, [&](int f) { return restriction_w_family(aug, f); }, false);
  CHECK(rep.induced_systems);
  CHECK(rep.augmented_graphs);
  auto host = restriction_w_family(aug, 0);
  CHECK(same_labelled_graph(host.w, aug.x_graph().w));
}

TEST_CASE("full report regression values") {
  check_pinned(gen::hypercube(3), {"3", "0", "1", "3", "1/2", "3", "0", "1", "4", "3", "2", "3", "0", "1", "0", "0", "1"});
  check_pinned(gen::hamming(3, 2), {"1", "0", "1", "3", "0", "2", "0", "1", "1", "0", "0", "3", "0", "1", "0", "0", "0"});
  check_pinned(gen::random_tree(20, 7),
               {"0", "1", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "7", "1", "0", "0", "0"});
  check_pinned(gen::glued_squares(3),
               {"2", "2", "1", "3", "1", "2", "0", "1", "3", "2", "1", "3", "2", "1", "0", "0", "1"});
}

TEST_CASE("tree axiom constants stay small") {
  FullReport r = full_report(gen::random_tree(20, 7), RunConfig{});
  for (const auto& a : r.axioms) {
    if (a.name == "uniqueness") continue;
    CAPTURE(a.name);
    CHECK(a.constant <= Ratio(4));
  }
  for (std::size_t k = 0; k < r.uniqueness.theta.size(); ++k) CHECK(r.uniqueness.theta[k] <= static_cast<int>(k) + 1);
}

TEST_CASE("full report rejects non-quasi-median input") {
  Graph k4m(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(full_report(k4m, RunConfig{}), PreconditionError);
  RunConfig generic;
  generic.pipeline = Pipeline::generic;
  CHECK_NOTHROW(full_report(k4m, generic));
}

TEST_CASE("bounds turn a pass into a failure") {
  RunConfig cfg;
  cfg.bounds["projection_diameter"] = Ratio(2);
  FullReport r = full_report(gen::hypercube(3), cfg);
  CHECK_FALSE(r.ok);
  CHECK(r.axioms[0].status == Status::fail);
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg;
  cfg.check.seed = 9;
  Graph g = gen::glued_squares(3);
  CHECK(report_json(full_report(g, cfg)) == report_json(full_report(g, cfg)));
}

TEST_CASE("ratio parsing") {
  CHECK(parse_ratio("3") == Ratio(3));
  CHECK(parse_ratio("3/2") == Ratio(3, 2));
  CHECK_THROWS_AS(parse_ratio("x"), ParseError);
  CHECK_THROWS_AS(parse_ratio("1/0"), ParseError);
}
