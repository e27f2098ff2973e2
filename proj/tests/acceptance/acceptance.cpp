// Acceptance run: one PASS/FAIL line per criterion; exit status 1 when any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hhs/axioms.hpp"
#include "hhs/gated.hpp"
#include "hhs/generators.hpp"
#include "hhs/metrics.hpp"
#include "hhs/qm_pipeline.hpp"
#include "hhs/quasi_median.hpp"
#include "hhs/report.hpp"
#include "oracles.hpp"

using namespace hhs;

namespace {

struct Named {
  std::string name;
  Graph g;
};

Graph rook_with_pendant() {
  Graph r = gen::hamming(3, 2);
  std::vector<Edge> es = r.edges();
  es.push_back({0, 9});
  return Graph(10, es);
}

// Accepted quasi-median graphs used across criteria.
std::vector<Named> corpus() {
  std::vector<Named> c;
  for (int n = 1; n <= 4; ++n) c.push_back({"Q" + std::to_string(n), gen::hypercube(n)});
  for (int q = 2; q <= 4; ++q)
    for (int d = 1; d <= 3; ++d) c.push_back({"K" + std::to_string(q) + "^" + std::to_string(d), gen::hamming(q, d)});
  for (int s = 1; s <= 4; ++s) c.push_back({"glued" + std::to_string(s), gen::glued_squares(s)});
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    c.push_back({"tree" + std::to_string(seed), gen::random_tree(10 + 5 * static_cast<int>(seed), seed)});
  c.push_back({"grid4x5", gen::cartesian_product(gen::path(4), gen::path(5))});
  c.push_back({"rook+pendant", rook_with_pendant()});
  c.push_back({"tree x K3", gen::cartesian_product(gen::random_tree(6, 3), gen::complete(3))});
  c.push_back({"Q3 x P3", gen::cartesian_product(gen::hypercube(3), gen::path(3))});
  return c;
}

int failures = 0;

void line(int id, const std::string& title, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] %2d %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void criterion(int id, const std::string& title, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  double limit = 0;
  try {
    ok = body(detail, limit);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && s >= limit) {
    ok = false;
    detail += "; over the time limit";
  }
  line(id, title, ok, detail, s);
}

Graph line_graph(const Graph& g) {
  std::vector<Edge> es;
  const auto& e = g.edges();
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (e[i].u == e[j].u || e[i].u == e[j].v || e[i].v == e[j].u || e[i].v == e[j].v) es.push_back({i, j});
  return Graph(g.size(), es);
}

bool complete_graph(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

// Criterion 1.
bool hyperplanes_ok(std::string& detail, double& limit) {
  limit = 10;
  std::mt19937_64 rng(2024);
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    Graph tree = gen::random_tree(std::uniform_int_distribution<int>(2, 60)(rng), rng());
    HyperplaneSystem hs(tree);
    bool ok = hs.count() == tree.size() && hs.crossing_graph().size() == 0;
    // hyperplane i is the single edge whose id it carries
    for (int h = 0; h < hs.count() && ok; ++h) ok = hs.dual_edges(h) == std::vector<int>{h};
    ok = ok && hs.contact_graph() == line_graph(tree);
    bad += !ok;
  }
  for (int n = 1; n <= 4; ++n) {
    HyperplaneSystem hs(gen::hypercube(n));
    Graph delta = hs.crossing_graph();
    bad += !(hs.count() == n && complete_graph(delta));
  }
  for (int q = 2; q <= 4; ++q)
    for (int d = 1; d <= 3; ++d) {
      HyperplaneSystem hs(gen::hamming(q, d));
      bad += !(hs.count() == d && complete_graph(hs.crossing_graph()));
    }
  detail = "100 trees, Q1..Q4, K_q^d (q<=4, d<=3); mismatches " + std::to_string(bad);
  return bad == 0;
}

// Criterion 2.
bool recognition_ok(std::string& detail, double& limit) {
  limit = 5;
  int bad = 0;
  for (const Graph& g : {gen::hypercube(3), gen::hamming(3, 2), gen::random_tree(40, 5), gen::random_tree(25, 8),
                         gen::glued_squares(4)})
    bad += !is_quasi_median(g).is_quasi_median;
  Graph k4m(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  std::ostringstream rej;
  for (const auto& [name, g] : std::vector<Named>{{"K4-", k4m}, {"C5", gen::cycle(5)}, {"C6", gen::cycle(6)}}) {
    auto r = is_quasi_median(g);
    bool ok = !r.is_quasi_median && witness_holds(g, r);
    bad += !ok;
    rej << " " << name << "=" << to_string(r.failure);
  }
  detail = "rejections:" + rej.str() + "; mismatches " + std::to_string(bad);
  return bad == 0;
}

// Criterion 3.
bool separation_ok(std::string& detail, double&) {
  long pairs = 0, bad = 0;
  for (const auto& [name, g] : corpus()) {
    if (g.order() > 100) continue;
    HyperplaneSystem hs(g);
    const auto& d = hs.distances();
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y, ++pairs)
        bad += static_cast<int>(hs.separating(x, y).size()) != d(x, y);
  }
  detail = std::to_string(pairs) + " ordered pairs, mismatches " + std::to_string(bad);
  return bad == 0;
}

// Criterion 4.
bool delta_ok(std::string& detail, double&) {
  int bad = 0;
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) bad += gromov_delta(gen::random_tree(std::uniform_int_distribution<int>(1, 40)(rng), rng())).twice_delta != 0;
  for (int n = 1; n <= 8; ++n) bad += gromov_delta(gen::complete(n)).twice_delta != 0;
  Graph c6 = gen::cycle(6);
  int lib = gromov_delta(c6).twice_delta, brute = oracle::twice_delta(c6);
  bad += lib != brute;
  detail = "delta(C6) = " + Ratio(lib, 2).str() + " vs oracle " + Ratio(brute, 2).str() + "; mismatches " +
           std::to_string(bad);
  return bad == 0;
}

// Criterion 5.
bool quasi_tree_ok(std::string& detail, double&) {
  int worst = 0;
  std::string where;
  for (const auto& [name, g] : corpus()) {
    if (g.order() > 80) continue;
    auto q = build_qm_system(g);
    auto chat = qm_augmented(q);
    int b = bottleneck_delta(chat.graph()).delta;
    if (b > worst) {
      worst = b;
      where = name;
    }
  }
  detail = "largest bottleneck constant " + std::to_string(worst) + (where.empty() ? "" : " on " + where) +
           " (vertex-level bound 3)";
  return worst <= 3;
}

// Criterion 6.
bool hierarchy_path_ok(std::string& detail, double&) {
  auto c = corpus();
  std::vector<QmSystem> systems;
  std::vector<AugmentedGraph> chats;
  std::vector<std::vector<VertexSet>> nbs;
  for (const auto& n : c) {
    if (n.g.size() == 0) continue;
    systems.push_back(build_qm_system(n.g));
  }
  for (const auto& q : systems) {
    chats.push_back(qm_augmented(q));
    nbs.push_back(qm_neighbourhoods(q, chats.back()));
  }
  std::mt19937_64 rng(6);
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, systems.size() - 1)(rng);
    const auto& q = systems[i];
    std::uniform_int_distribution<int> hyp(0, q.hs.count() - 1);
    int a = hyp(rng), b = hyp(rng);
    auto pa = q.hs.carrier(a).to_vector(), pb = q.hs.carrier(b).to_vector();
    int p = pa[std::uniform_int_distribution<std::size_t>(0, pa.size() - 1)(rng)];
    int r = pb[std::uniform_int_distribution<std::size_t>(0, pb.size() - 1)(rng)];
    auto hp = hierarchy_path(chats[i].graph(), nbs[i], q.hs.distances(), a, b, p, r);
    bool ok = hp.length_sum == q.hs.distances()(p, r) &&
              hierarchy_path_holds(chats[i].graph(), nbs[i], q.hs.distances(), hp);
    bad += !ok;
  }
  detail = "200 instances over " + std::to_string(systems.size()) + " graphs; non-additive " + std::to_string(bad);
  return bad == 0;
}

// Criterion 7.
bool proto_sanity_ok(std::string& detail, double&) {
  struct Pin {
    const char* name;
    Graph g;
    int diam, rho;
  };
  std::vector<Pin> pins{{"Q3", gen::hypercube(3), 3, 3}, {"K3xK3", gen::hamming(3, 2), 1, 3}};
  bool ok = true;
  std::ostringstream out;
  for (const auto& pin : pins) {
    ProtoHierarchy ph(qm_augmented(build_qm_system(pin.g)));
    int n = ph.domain_count();
    bool nonempty = true;
    int diam = 0;
    for (int f = 0; f < n; ++f)
      for (int w = 0; w < ph.w_count(); ++w) {
        nonempty = nonempty && !ph.pi(f, w).empty();
        diam = std::max(diam, ph.diam(f, ph.pi(f, w)));
      }
    // rho bound and the diameter-4 intersection
    bool rho_ok = true, meet_ok = true;
    int rho_max = 0;
    for (int f = 1; f < n; ++f)
      for (int g = 0; g < n; ++g) {
        if (!ph.rho_defined(f, g)) continue;
        int r = ph.diam(g, ph.rho(f, g));
        rho_max = std::max(rho_max, r);
        if (g == 0) continue;
        VertexSet yg = ph.yf(g);
        int mu = 0, lambda = 0;
        yg.for_each([&](int x) { mu = std::max(mu, ph.diam(g, ph.project(g, x))); });
        yg.for_each([&](int x) {
          yg.for_each([&](int y) {
            if (x < y && ph.augmented().graph().adjacent(x, y))
              lambda = std::max(lambda, ph.diam(g, ph.project(g, x) | ph.project(g, y)));
          });
        });
        rho_ok = rho_ok && r <= std::max(mu, 4 * lambda);
        VertexSet meet = ph.pf(f) & yg;
        meet.for_each([&](int x) {
          meet.for_each([&](int y) { meet_ok = meet_ok && ph.dist_yf(g, x, y) <= 4; });
        });
      }
    bool pinned = diam == pin.diam && rho_max == pin.rho;
    bool here = nonempty && diam <= 2 && rho_ok && meet_ok && pinned;
    ok = ok && here;
    out << pin.name << ": nonempty=" << (nonempty ? "yes" : "no") << " max diam pi=" << diam << " (bound 2)"
        << " rho<=lipschitz image: " << (rho_ok ? "yes" : "no") << " diam(PF^Y)<=4: " << (meet_ok ? "yes" : "no")
        << " pinned: " << (pinned ? "yes" : "no") << "; ";
  }
  detail = out.str();
  return ok;
}

// Criterion 8.
bool axiom_suite_ok(std::string& detail, double& limit) {
  limit = 60;
  struct Pin {
    const char* name;
    Graph g;
    std::vector<std::string> constants;
  };
  std::vector<Pin> pins{
      {"tree20", gen::random_tree(20, 7), {"0", "1", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "7", "1", "0", "0", "0"}},
      {"Q3", gen::hypercube(3), {"3", "0", "1", "3", "1/2", "3", "0", "1", "4", "3", "2", "3", "0", "1", "0", "0", "1"}},
      {"K3xK3", gen::hamming(3, 2), {"1", "0", "1", "3", "0", "2", "0", "1", "1", "0", "0", "3", "0", "1", "0", "0", "0"}},
      {"glued3", gen::glued_squares(3), {"2", "2", "1", "3", "1", "2", "0", "1", "3", "2", "1", "3", "2", "1", "0", "0", "1"}},
  };
  int bad = 0, runs = 0;
  std::string first;
  auto run = [&](const std::string& name, const Graph& g, const std::vector<std::string>* pin) {
    FullReport r = full_report(g, RunConfig{});
    ++runs;
    bool ok = r.ok;
    for (std::size_t i = 0; i < r.axioms.size(); ++i) {
      ok = ok && !r.axioms[i].infinite && r.replayed[i];
      if (pin) ok = ok && i < pin->size() && r.axioms[i].constant.str() == (*pin)[i];
    }
    if (pin) ok = ok && r.axioms.size() == pin->size();
    if (!ok) {
      ++bad;
      if (first.empty()) first = name;
    }
  };
  for (const auto& p : pins) run(p.name, p.g, &p.constants);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) run("tree", gen::random_tree(8 + 3 * static_cast<int>(seed), seed), nullptr);
  for (int s = 1; s <= 4; ++s) run("glued", gen::glued_squares(s), nullptr);
  detail = std::to_string(runs) + " full reports, failing " + std::to_string(bad) + (first.empty() ? "" : " first " + first);
  return bad == 0;
}

// Criterion 9.
bool realization_ok(std::string& detail, double&) {
  std::mt19937_64 rng(9);
  int points = 0, bad_own = 0, bad_perturbed = 0, worst_slack = 0;
  for (const auto& [name, g] : corpus()) {
    if (g.order() > 40) continue;
    ProtoHierarchy ph(qm_augmented(build_qm_system(g)));
    int bound = static_cast<int>(check_projection_diameter(ph).constant.value());
    for (int w = 0; w < ph.w_count(); ++w, ++points) {
      Tuple own = coordinates(ph, w);
      auto r = realize_tuple(ph, own, tuple_consistency(ph, own).kappa);
      bad_own += r.deviation != 0;
      Tuple moved(own.size());
      for (int f = 0; f < ph.domain_count(); ++f) {
        std::vector<int> near;
        ph.cf(f).for_each([&](int v) {
          if (ph.point_to_set(f, v, own[f]) == 1) near.push_back(v);
        });
        int v = near.empty() ? own[f].first()
                             : near[std::uniform_int_distribution<std::size_t>(0, near.size() - 1)(rng)];
        moved[f] = VertexSet(own[f].universe(), {v});
      }
      auto rp = realize_tuple(ph, moved, tuple_consistency(ph, moved).kappa);
      worst_slack = std::max(worst_slack, rp.deviation - bound);
      bad_perturbed += rp.deviation > 1 + bound;
    }
  }
  detail = std::to_string(points) + " points; own-tuple deviations != 0: " + std::to_string(bad_own) +
           "; perturbed over 1 + bound: " + std::to_string(bad_perturbed) +
           " (worst deviation - bound = " + std::to_string(worst_slack) + ")";
  return bad_own == 0 && bad_perturbed == 0;
}

// Criterion 10.
bool link_correspondence_ok(std::string& detail, double&) {
  int single = 0, pairs = 0, bad = 0;
  for (const auto& [name, g] : corpus()) {
    HyperplaneSystem hs(g);
    Graph delta = hs.crossing_graph();
    auto lk = [&](int h) { return link(delta, VertexSet(delta.order(), {h})); };
    auto same = [&](const LocalCrossing& local, const VertexSet& expect) {
      VertexSet ids(delta.order(), std::span<const int>(local.hyperplanes));
      return ids == expect && same_labelled_graph(local.graph, induced(delta, expect).graph);
    };
    for (int h = 0; h < hs.count(); ++h) {
      ++single;
      bad += !same(crossing_graph_of(hs, hs.fibres(h).front()), lk(h));
    }
    if (g.order() > 60) continue;
    for (int a = 0; a < hs.count(); ++a)
      for (int b = a + 1; b < hs.count(); ++b) {
        ++pairs;
        VertexSet proj = gate_projection(hs, hs.fibres(a).front(), hs.fibres(b).front());
        bad += !same(crossing_graph_of(hs, proj), lk(a) & lk(b));
      }
  }
  detail = std::to_string(single) + " hyperplanes, " + std::to_string(pairs) + " pairs; mismatches " +
           std::to_string(bad);
  return bad == 0;
}

// Criterion 11.
bool quasi_isometry_ok(std::string& detail, double&) {
  int bad = 0;
  Ratio worst_k(0);
  int worst_c = 0;
  for (const auto& [name, g] : corpus()) {
    HyperplaneSystem hs(g);
    auto prisms = maximal_prisms(hs);
    XGraph w = x_graph_from_prisms(hs, prisms);
    const auto& dx = hs.distances();
    auto dw = distance_matrix(w.w);
    int pd = 0;
    for (const auto& p : prisms) {
      auto vs = p.vertices.to_vector();
      for (int u : vs)
        for (int v : vs) pd = std::max(pd, dx(u, v));
    }
    Ratio k(1);
    int c = 0;
    int n = static_cast<int>(prisms.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int dmin = 1 << 20;
        prisms[i].vertices.for_each(
            [&](int u) { prisms[j].vertices.for_each([&](int v) { dmin = std::min(dmin, dx(u, v)); }); });
        int d = dw(i, j);
        if (d == DistanceMatrix::kUnreachable) {
          ++bad;
          continue;
        }
        if (dmin > 0) k = std::max(k, Ratio(d, dmin));
        k = std::max(k, Ratio(dmin, d));
        c = std::max(c, std::abs(dmin - d));
      }
    bool ok = k <= Ratio(pd + 1) && c <= pd + 1;
    bad += !ok;
    worst_k = std::max(worst_k, k);
    worst_c = std::max(worst_c, c);
  }
  detail = "worst multiplicative " + worst_k.str() + ", additive " + std::to_string(worst_c) +
           " against max prism diameter + 1; violations " + std::to_string(bad);
  return bad == 0;
}

}  // namespace

int main() {
  criterion(1, "hyperplane correctness", hyperplanes_ok);
  criterion(2, "quasi-median recognition", recognition_ok);
  criterion(3, "distance = separating hyperplanes", separation_ok);
  criterion(4, "delta oracle", delta_ok);
  criterion(5, "quasi-tree certification", quasi_tree_ok);
  criterion(6, "hierarchy-path additivity", hierarchy_path_ok);
  criterion(7, "proto-hierarchy sanity", proto_sanity_ok);
  criterion(8, "axiom suite", axiom_suite_ok);
  criterion(9, "realization", realization_ok);
  criterion(10, "link / crossing-graph correspondence", link_correspondence_ok);
  criterion(11, "prism graph quasi-isometry", quasi_isometry_ok);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
