#include "hhs/axioms.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "hhs/errors.hpp"

namespace hhs {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::degenerate: return "degenerate";
    case Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

// Keeps the worst instance seen so far.
struct Worst {
  int value = 0;
  Witness witness;
  bool seen = false;
  void offer(int v, Witness w) {
    if (!seen || v > value) {
      value = v;
      witness = std::move(w);
      seen = true;
    }
  }
};

AxiomReport finish(std::string name, const Worst& worst, int degenerate, std::string detail = {}) {
  AxiomReport r;
  r.name = std::move(name);
  r.witness = worst.witness;
  if (worst.value >= kInfinite) {
    r.infinite = true;
  } else {
    r.constant = Ratio(worst.value);
  }
  if (degenerate > 0) {
    r.status = Status::degenerate;
    detail += (detail.empty() ? "" : "; ") + std::to_string(degenerate) + " degenerate instance(s)";
  }
  r.detail = std::move(detail);
  return r;
}

VertexSet single(const ProtoHierarchy& ph, int v) {
  VertexSet s(ph.augmented().graph().order());
  s.insert(v);
  return s;
}

// Set distance with an empty operand counting as infinitely far.
int set_dist(const ProtoHierarchy& ph, int f, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) return kInfinite;
  return ph.dist(f, a, b);
}

// Transverse clause for V ⋔ W.
int transverse_term(const ProtoHierarchy& ph, int v, int w, const VertexSet& bv, const VertexSet& bw) {
  return std::min(set_dist(ph, v, bv, ph.rho(w, v)), set_dist(ph, w, bw, ph.rho(v, w)));
}

// Nested clause for V ⊊ W.
int nested_term(const ProtoHierarchy& ph, int v, int w, const VertexSet& bv, const VertexSet& bw) {
  int up = set_dist(ph, w, bw, ph.rho(v, w));
  VertexSet down = ph.rho_down(w, v, bw);
  int lo = down.empty() || bv.empty() ? kInfinite : ph.diam(v, bv | down);
  return std::min(up, lo);
}

int third_term(const ProtoHierarchy& ph, int u, int v, int w) { return set_dist(ph, w, ph.rho(u, w), ph.rho(v, w)); }

std::vector<int> to_local(const InducedGraph& g, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int v : ids) out.push_back(g.local(v));
  return out;
}

std::vector<int> to_parent(const InducedGraph& g, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int v : ids) out.push_back(g.to_parent[v]);
  return out;
}

bool is_geodesic_path(const Graph& g, const DistanceMatrix& d, const std::vector<int>& path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (path[i] < 0 || path[i + 1] < 0 || !g.adjacent(path[i], path[i + 1])) return false;
  return d.reachable(path.front(), path.back()) &&
         d(path.front(), path.back()) == static_cast<int>(path.size()) - 1;
}

// Least weight over a path of CF vertices, each weighted by its distance to s.
int path_clearance(const ProtoHierarchy& ph, int f, const std::vector<int>& path, const VertexSet& s) {
  int out = kInfinite;
  for (int v : path) out = std::min(out, ph.point_to_set(f, v, s));
  return out;
}

// BGI instance: the least E with E > D or every geodesic E-close to rho.
// `path` receives the geodesic whose clearance is largest.
int bgi_instance(const ProtoHierarchy& ph, int v, int u, int w1, int w2, int cap_dag, std::vector<int>* path,
                 bool* skipped, bool* degenerate) {
  int d_v = set_dist(ph, v, ph.pi(v, w1), ph.pi(v, w2));
  if (d_v >= kInfinite) {
    *degenerate = true;
    return 0;
  }
  const VertexSet& rho = ph.rho(v, u);
  const InducedGraph& cu = ph.cf_graph(u);
  const DistanceMatrix& du = ph.cf_distances(u);
  std::vector<int> weight(cu.graph.order());
  for (int i = 0; i < cu.graph.order(); ++i) weight[i] = ph.point_to_set(u, cu.to_parent[i], rho);
  int g = -1;
  std::vector<int> best_path;
  for (int a : ph.pi(u, w1).to_vector())
    for (int b : ph.pi(u, w2).to_vector()) {
      int la = cu.local(a), lb = cu.local(b);
      if (!du.reachable(la, lb)) {
        *degenerate = true;
        continue;
      }
      int interval = 0;
      for (int x = 0; x < cu.graph.order(); ++x)
        if (du.on_geodesic(la, x, lb)) ++interval;
      if (interval > cap_dag) {
        *skipped = true;
        continue;
      }
      auto [c, p] = widest_geodesic(cu.graph, du, la, lb, weight);
      if (c > g) {
        g = c;
        best_path = to_parent(cu, p);
      }
    }
  if (g < 0) return 0;
  *path = best_path;
  return std::min(d_v + 1, g);
}

// Smallest number of candidates covering every element of `need` (element
// t covered by candidate c when t ⊑ c).  Exact up to 16 candidates.
int min_cover(const FactorSystem& fs, const std::vector<int>& need, const std::vector<int>& cand, bool* exact) {
  if (need.empty()) return 0;
  const int k = static_cast<int>(cand.size());
  std::vector<std::vector<bool>> hit(k, std::vector<bool>(need.size()));
  for (std::size_t t = 0; t < need.size(); ++t)
    for (int c = 0; c < k; ++c)
      if (fs.nested(need[t], cand[c])) hit[c][t] = true;
  for (std::size_t t = 0; t < need.size(); ++t) {
    bool any = false;
    for (int c = 0; c < k; ++c) any = any || hit[c][t];
    if (!any) return kInfinite;
  }
  if (k <= 16) {
    *exact = true;
    int best = kInfinite;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      int bits = std::popcount(mask);
      if (bits >= best) continue;
      bool ok = true;
      for (std::size_t t = 0; t < need.size() && ok; ++t) {
        bool cov = false;
        for (int c = 0; c < k && !cov; ++c) cov = ((mask >> c) & 1u) && hit[c][t];
        ok = cov;
      }
      if (ok) best = bits;
    }
    return best;
  }
  *exact = false;
  std::vector<bool> done(need.size(), false);
  int used = 0;
  for (;;) {
    int best_c = -1, best_gain = 0;
    for (int c = 0; c < k; ++c) {
      int gain = 0;
      for (std::size_t t = 0; t < need.size(); ++t) gain += !done[t] && hit[c][t];
      if (gain > best_gain) {
        best_gain = gain;
        best_c = c;
      }
    }
    if (best_c < 0) break;
    ++used;
    for (std::size_t t = 0; t < need.size(); ++t) done[t] = done[t] || hit[best_c][t];
  }
  return used;
}

std::vector<int> maximal_proper_subdomains(const FactorSystem& fs, int u) {
  std::vector<int> proper;
  for (int t = 0; t < fs.size(); ++t)
    if (fs.proper_nested(t, u)) proper.push_back(t);
  std::vector<int> out;
  for (int t : proper) {
    bool maximal = true;
    for (int s : proper) maximal = maximal && !fs.proper_nested(t, s);
    if (maximal) out.push_back(t);
  }
  return out;
}

// Domains attached to the vertices of a CX geodesic between the closest
// points of two host cliques: lk(x) for a host vertex, F for b_F.
std::vector<int> geodesic_family(const ProtoHierarchy& ph, int w1, int w2) {
  const AugmentedGraph& aug = ph.augmented();
  const FactorSystem& fs = ph.system();
  const DistanceMatrix& d = ph.cf_distances(0);
  int best = kInfinite, a = -1, b = -1;
  for (int x : ph.clique(w1).to_vector())
    for (int y : ph.clique(w2).to_vector())
      if (d.reachable(x, y) && d(x, y) < best) {
        best = d(x, y);
        a = x;
        b = y;
      }
  std::vector<int> out;
  if (a < 0) return out;
  VertexSet none(aug.graph().order());
  for (int v : geodesic_avoiding(aug.graph(), d, a, b, none)) {
    int f = -1;
    if (v < aug.host_order()) {
      VertexSet lk = link(fs.host(), VertexSet(fs.host().order(), {v}));
      if (!lk.empty()) f = fs.find(lk);
    } else {
      f = aug.domain_of(v);
    }
    if (f > 0 && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

struct LargeLinkInstance {
  int e = 0;
  int cover = 0;
  bool proof_family_covers = false;
  bool exact = true;
};

LargeLinkInstance large_link_instance(const ProtoHierarchy& ph, int u, int w1, int w2, bool* degenerate) {
  const FactorSystem& fs = ph.system();
  LargeLinkInstance out;
  int d_u = set_dist(ph, u, ph.pi(u, w1), ph.pi(u, w2));
  std::vector<std::pair<int, int>> dt;
  int top = 0;
  for (int t = 0; t < fs.size(); ++t)
    if (fs.proper_nested(t, u)) {
      int d = set_dist(ph, t, ph.pi(t, w1), ph.pi(t, w2));
      if (d >= kInfinite) {
        *degenerate = true;
        continue;
      }
      dt.push_back({t, d});
      top = std::max(top, d);
    }
  if (d_u >= kInfinite) {
    *degenerate = true;
    return out;
  }
  std::vector<int> cand = u == 0 ? geodesic_family(ph, w1, w2) : std::vector<int>{};
  const std::size_t proof_size = cand.size();
  for (int t : maximal_proper_subdomains(fs, u))
    if (std::find(cand.begin(), cand.end(), t) == cand.end()) cand.push_back(t);
  for (int e = 0; e <= top; ++e) {
    std::vector<int> need;
    for (auto [t, d] : dt)
      if (d > e) need.push_back(t);
    bool exact = true;
    int c = min_cover(fs, need, cand, &exact);
    if (c <= e * d_u + e) {
      out.e = e;
      out.cover = c;
      out.exact = exact;
      std::vector<int> proof(cand.begin(), cand.begin() + static_cast<long>(proof_size));
      bool ignored = true;
      out.proof_family_covers = u == 0 && min_cover(fs, need, proof, &ignored) < kInfinite;
      return out;
    }
  }
  out.e = top;
  return out;
}

// Instance value of partial realization for chosen points at clique w.
int realization_instance(const ProtoHierarchy& ph, const std::vector<int>& family, const std::vector<int>& points,
                         int w) {
  const FactorSystem& fs = ph.system();
  int out = 0;
  for (std::size_t j = 0; j < family.size(); ++j) {
    int f = family[j];
    out = std::max(out, set_dist(ph, f, ph.pi(f, w), single(ph, points[j])));
    for (int v = 0; v < fs.size(); ++v)
      if (fs.proper_nested(f, v) || fs.transverse(f, v)) out = std::max(out, set_dist(ph, v, ph.pi(v, w), ph.rho(f, v)));
  }
  return out;
}

int containing_clique(const XGraph& x, const VertexSet& s) {
  for (std::size_t i = 0; i < x.cliques.size(); ++i)
    if (s.is_subset_of(x.cliques[i])) return static_cast<int>(i);
  return -1;
}

}  // namespace

AxiomReport check_projection_diameter(const ProtoHierarchy& ph) {
  Worst worst;
  int degenerate = 0;
  for (int f = 0; f < ph.domain_count(); ++f)
    for (int w = 0; w < ph.w_count(); ++w) {
      if (ph.pi(f, w).empty()) {
        ++degenerate;
        continue;
      }
      worst.offer(ph.diam(f, ph.pi(f, w)), {{f}, {w}, {}, "diam"});
    }
  return finish("projection_diameter", worst, degenerate);
}

AxiomReport check_projection_lipschitz(const ProtoHierarchy& ph) {
  Worst worst;
  int degenerate = 0;
  const Graph& wg = ph.x_graph().w;
  for (int f = 0; f < ph.domain_count(); ++f)
    for (const Edge& e : wg.edges()) {
      int d = set_dist(ph, f, ph.pi(f, e.u), ph.pi(f, e.v));
      if (d >= kInfinite) {
        ++degenerate;
        continue;
      }
      worst.offer(d, {{f}, {e.u, e.v}, {}, "adjacent"});
    }
  return finish("projection_lipschitz", worst, degenerate);
}

AxiomReport check_projection_coverage(const ProtoHierarchy& ph) {
  Worst worst;
  int degenerate = 0;
  for (int f = 0; f < ph.domain_count(); ++f) {
    VertexSet image(ph.augmented().graph().order());
    for (int w = 0; w < ph.w_count(); ++w) image |= ph.pi(f, w);
    for (int v : ph.cf(f).to_vector()) {
      int d = image.empty() ? kInfinite : ph.point_to_set(f, v, image);
      if (d >= kInfinite) {
        ++degenerate;
        continue;
      }
      worst.offer(d, {{f}, {v}, {}, "cover"});
    }
  }
  return finish("projection_coverage", worst, degenerate);
}

AxiomReport check_rho_diameter(const ProtoHierarchy& ph) {
  Worst worst;
  int degenerate = 0;
  for (int f = 0; f < ph.domain_count(); ++f)
    for (int g = 0; g < ph.domain_count(); ++g) {
      if (!ph.rho_defined(f, g)) continue;
      if (ph.rho(f, g).empty()) {
        ++degenerate;
        continue;
      }
      worst.offer(ph.diam(g, ph.rho(f, g)), {{f, g}, {}, {}, "diam"});
    }
  return finish("rho_diameter", worst, degenerate);
}

AxiomReport check_complexity(const ProtoHierarchy& ph) {
  Worst worst;
  worst.offer(ph.system().complexity(), {{}, {}, {}, "chain"});
  return finish("complexity", worst, 0);
}

AxiomReport check_consistency(const ProtoHierarchy& ph) {
  const FactorSystem& fs = ph.system();
  const int m = fs.size();
  Worst worst;
  int degenerate = 0;
  int counts[3] = {0, 0, 0};
  auto offer = [&](int v, Witness w) {
    if (v >= kInfinite) {
      ++degenerate;
      return;
    }
    worst.offer(v, std::move(w));
  };
  for (int w = 0; w < ph.w_count(); ++w)
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        if (u < v && fs.transverse(u, v)) {
          ++counts[0];
          offer(transverse_term(ph, u, v, ph.pi(u, w), ph.pi(v, w)), {{u, v}, {w}, {}, "transverse"});
        }
        if (fs.proper_nested(u, v)) {
          ++counts[1];
          offer(nested_term(ph, u, v, ph.pi(u, w), ph.pi(v, w)), {{u, v}, {w}, {}, "nested"});
        }
      }
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (!fs.proper_nested(u, v)) continue;
      for (int x = 0; x < m; ++x) {
        if (!(fs.proper_nested(v, x) || fs.transverse(v, x)) || fs.orthogonal(x, u)) continue;
        ++counts[2];
        offer(third_term(ph, u, v, x), {{u, v, x}, {}, {}, "rho"});
      }
    }
  return finish("consistency", worst, degenerate,
                std::to_string(counts[0]) + " transverse, " + std::to_string(counts[1]) + " nested, " +
                    std::to_string(counts[2]) + " relative-projection instances");
}

AxiomReport check_bgi(const ProtoHierarchy& ph, const CheckOptions& opt) {
  const FactorSystem& fs = ph.system();
  Worst worst;
  int degenerate = 0, skipped = 0, instances = 0;
  for (int u = 0; u < fs.size(); ++u)
    for (int v = 0; v < fs.size(); ++v) {
      if (!fs.proper_nested(v, u)) continue;
      for (int w1 = 0; w1 < ph.w_count(); ++w1)
        for (int w2 = w1; w2 < ph.w_count(); ++w2) {
          ++instances;
          std::vector<int> path;
          bool skip = false, degen = false;
          int e = bgi_instance(ph, v, u, w1, w2, opt.cap_dag, &path, &skip, &degen);
          skipped += skip;
          degenerate += degen;
          worst.offer(e, {{v, u}, {w1, w2}, path, "geodesic"});
        }
    }
  auto r = finish("bgi", worst, degenerate, std::to_string(instances) + " instances");
  r.skipped = skipped;
  if (skipped > 0) r.detail += "; " + std::to_string(skipped) + " skipped past the geodesic cap";
  return r;
}

AxiomReport check_combinatorial_bgi(const ProtoHierarchy& ph) {
  const FactorSystem& fs = ph.system();
  const Graph& cx = ph.augmented().graph();
  const DistanceMatrix& d = ph.cf_distances(0);
  Worst worst;
  int degenerate = 0, pairs = 0;
  for (int f = 1; f < fs.size(); ++f) {
    auto y = ph.yf(f).to_vector();
    std::vector<VertexSet> proj;
    for (int x : y) proj.push_back(ph.project(f, x));
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = i; j < y.size(); ++j) {
        auto path = geodesic_avoiding(cx, d, y[i], y[j], ph.pf(f));
        if (path.empty()) continue;
        ++pairs;
        int v = set_dist(ph, f, proj[i], proj[j]);
        if (v >= kInfinite) {
          ++degenerate;
          continue;
        }
        worst.offer(v + 1, {{f}, {y[i], y[j]}, path, "avoiding"});
      }
  }
  return finish("combinatorial_bgi", worst, degenerate, std::to_string(pairs) + " pairs joined avoiding PF");
}

AxiomReport check_large_links(const ProtoHierarchy& ph) {
  const FactorSystem& fs = ph.system();
  Worst worst;
  int degenerate = 0, instances = 0, proof_ok = 0, host_instances = 0, greedy = 0;
  for (int u = 0; u < fs.size(); ++u) {
    bool has_sub = false;
    for (int t = 0; t < fs.size(); ++t) has_sub = has_sub || fs.proper_nested(t, u);
    if (!has_sub) continue;
    for (int w1 = 0; w1 < ph.w_count(); ++w1)
      for (int w2 = w1; w2 < ph.w_count(); ++w2) {
        ++instances;
        bool degen = false;
        auto inst = large_link_instance(ph, u, w1, w2, &degen);
        degenerate += degen;
        if (u == 0) {
          ++host_instances;
          proof_ok += inst.proof_family_covers;
        }
        greedy += !inst.exact;
        worst.offer(inst.e, {{u}, {w1, w2}, {}, "cover " + std::to_string(inst.cover)});
      }
  }
  std::string detail = std::to_string(instances) + " instances";
  if (host_instances > 0)
    detail += "; geodesic family covers " + std::to_string(proof_ok) + "/" + std::to_string(host_instances) +
              " host instances";
  if (greedy > 0) detail += "; " + std::to_string(greedy) + " covers found greedily";
  return finish("large_links", worst, degenerate, detail);
}

AxiomReport check_partial_realization(const ProtoHierarchy& ph, const CheckOptions& opt) {
  const FactorSystem& fs = ph.system();
  const int m = fs.size();
  std::mt19937_64 rng(opt.seed);
  // Points of F_j reached by some projection.
  std::vector<std::vector<int>> choice(m);
  for (int f = 0; f < m; ++f) {
    VertexSet img(ph.augmented().graph().order());
    for (int w = 0; w < ph.w_count(); ++w) img |= ph.pi(f, w);
    img &= ph.augmented().lift(fs.domain(f));
    choice[f] = img.to_vector();
  }
  std::vector<std::vector<int>> families;
  bool families_capped = false;
  std::vector<int> cur;
  auto grow = [&](auto&& self, int from) -> void {
    for (int f = from; f < m; ++f) {
      bool ok = true;
      for (int g : cur) ok = ok && fs.orthogonal(g, f) && fs.orthogonal(f, g);
      if (!ok) continue;
      if (static_cast<int>(families.size()) >= opt.cap_choices) {
        families_capped = true;
        return;
      }
      cur.push_back(f);
      families.push_back(cur);
      self(self, f + 1);
      cur.pop_back();
    }
  };
  grow(grow, 0);

  Worst worst;
  int sampled = 0, evaluated = 0;
  const XGraph& xg = ph.x_graph();
  for (const auto& fam : families) {
    double total = 1;
    bool empty = false;
    for (int f : fam) {
      total *= static_cast<double>(choice[f].size());
      empty = empty || choice[f].empty();
    }
    if (empty) continue;
    auto evaluate = [&](const std::vector<int>& pts) {
      VertexSet s(fs.host().order());
      for (int p : pts) s.insert(p);
      int w = containing_clique(xg, s);
      if (w < 0) throw InvariantViolation("no maximal clique contains points of pairwise orthogonal domains");
      ++evaluated;
      worst.offer(realization_instance(ph, fam, pts, w), {fam, pts, {w}, "choice"});
    };
    std::vector<int> pts(fam.size());
    if (total <= opt.cap_choices) {
      auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == fam.size()) {
          evaluate(pts);
          return;
        }
        for (int p : choice[fam[j]]) {
          pts[j] = p;
          self(self, j + 1);
        }
      };
      rec(rec, 0);
    } else {
      ++sampled;
      for (int s = 0; s < opt.cap_choices; ++s) {
        for (std::size_t j = 0; j < fam.size(); ++j) {
          const auto& c = choice[fam[j]];
          pts[j] = c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
        }
        evaluate(pts);
      }
    }
  }
  std::string detail = std::to_string(families.size()) + " orthogonal families, " + std::to_string(evaluated) +
                       " choices";
  if (families_capped) detail += "; family list capped";
  if (sampled > 0) detail += "; " + std::to_string(sampled) + " families sampled";
  auto r = finish("partial_realization", worst, 0, detail);
  r.skipped = families_capped ? 1 : 0;
  return r;
}

AxiomReport check_containers(const ProtoHierarchy& ph) {
  const FactorSystem& fs = ph.system();
  const int m = fs.size();
  AxiomReport r;
  r.name = "containers";
  int checked = 0;
  for (int t = 0; t < m && r.status == Status::pass; ++t)
    for (int u = 0; u < m; ++u) {
      if (!fs.nested(u, t)) continue;
      std::vector<int> partners;
      for (int v = 0; v < m; ++v)
        if (fs.nested(v, t) && fs.orthogonal(u, v)) partners.push_back(v);
      if (partners.empty()) continue;
      ++checked;
      VertexSet c = fs.link_of(u) & fs.domain(t);
      int ci = c.empty() ? -1 : fs.find(c);
      std::string why;
      if (ci < 0) {
        why = "container not a domain";
      } else if (ci == t) {
        why = "container not proper";
      } else {
        for (int v : partners)
          if (!fs.nested(v, ci)) why = "orthogonal domain " + std::to_string(v) + " outside the container";
      }
      if (!why.empty()) {
        r.status = Status::fail;
        r.witness = {{t, u}, {}, {}, why};
        break;
      }
    }
  r.detail = std::to_string(checked) + " containers verified";
  return r;
}

AxiomReport check_hyperbolicity(const ProtoHierarchy& ph) {
  Worst worst;
  int degenerate = 0;
  for (int f = 0; f < ph.domain_count(); ++f) {
    const DistanceMatrix& d = ph.cf_distances(f);
    if (!d.connected()) {
      ++degenerate;
      continue;
    }
    auto h = gromov_delta(d);
    std::vector<int> quad;
    if (h.witness[0] >= 0) quad = to_parent(ph.cf_graph(f), {h.witness.begin(), h.witness.end()});
    worst.offer(h.twice_delta, {{f}, quad, {}, "four-point"});
  }
  auto r = finish("hyperbolicity", worst, degenerate);
  r.constant = Ratio(worst.value, 2);
  return r;
}

namespace {

AxiomReport qi_check(const ProtoHierarchy& ph, bool multiplicative) {
  Ratio best(1);
  if (!multiplicative) best = Ratio(0);
  Witness wit;
  bool infinite = false;
  int degenerate = 0;
  for (int f = 1; f < ph.domain_count(); ++f) {
    const InducedGraph& y = ph.yf_graph(f);
    if (!ph.cf(f).is_subset_of(ph.yf(f))) {
      ++degenerate;
      continue;
    }
    auto rep = qi_distortion(y.graph, ph.yf_distances(f), y.restrict(ph.cf(f)));
    if (rep.infinite) {
      infinite = true;
      wit = {{f}, {}, {}, "disconnected"};
      continue;
    }
    if (multiplicative && rep.multiplicative > best) {
      best = rep.multiplicative;
      auto [a, b] = rep.multiplicative_witness;
      wit = {{f}, {y.to_parent[a], y.to_parent[b]}, {}, "ratio"};
    }
    if (!multiplicative && Ratio(rep.additive) > best) {
      best = Ratio(rep.additive);
      auto [a, b] = rep.additive_witness;
      wit = {{f}, {y.to_parent[a], y.to_parent[b]}, {}, "difference"};
    }
  }
  AxiomReport r;
  r.name = multiplicative ? "qi_multiplicative" : "qi_additive";
  r.constant = best;
  r.infinite = infinite;
  r.witness = wit;
  if (degenerate > 0) {
    r.status = Status::degenerate;
    r.detail = std::to_string(degenerate) + " domain(s) with CF outside Y_F";
  }
  return r;
}

}  // namespace

AxiomReport check_qi_multiplicative(const ProtoHierarchy& ph) { return qi_check(ph, true); }
AxiomReport check_qi_additive(const ProtoHierarchy& ph) { return qi_check(ph, false); }

Ratio replay_witness(const ProtoHierarchy& ph, const AxiomReport& r) {
  const Witness& w = r.witness;
  const auto& d = w.domains;
  const auto& p = w.points;
  auto finite = [](int v) { return Ratio(v >= kInfinite ? 0 : v); };
  if (r.name == "projection_diameter" && d.size() == 1) return finite(ph.diam(d[0], ph.pi(d[0], p[0])));
  if (r.name == "projection_lipschitz" && d.size() == 1) {
    if (!ph.x_graph().w.adjacent(p[0], p[1])) return Ratio(-1);
    return finite(ph.dist(d[0], ph.pi(d[0], p[0]), ph.pi(d[0], p[1])));
  }
  if (r.name == "projection_coverage" && d.size() == 1) {
    VertexSet image(ph.augmented().graph().order());
    for (int x = 0; x < ph.w_count(); ++x) image |= ph.pi(d[0], x);
    return finite(ph.point_to_set(d[0], p[0], image));
  }
  if (r.name == "rho_diameter" && d.size() == 2) return finite(ph.diam(d[1], ph.rho(d[0], d[1])));
  if (r.name == "complexity") return Ratio(ph.system().complexity());
  if (r.name == "consistency" && !d.empty()) {
    if (w.clause == "transverse") return finite(transverse_term(ph, d[0], d[1], ph.pi(d[0], p[0]), ph.pi(d[1], p[0])));
    if (w.clause == "nested") return finite(nested_term(ph, d[0], d[1], ph.pi(d[0], p[0]), ph.pi(d[1], p[0])));
    if (w.clause == "rho") return finite(third_term(ph, d[0], d[1], d[2]));
  }
  if (r.name == "bgi" && d.size() == 2) {
    // The witness geodesic must join the U-projections, and its clearance
    // from rho (capped by D + 1) gives the constant.
    int v = d[0], u = d[1];
    int dv = set_dist(ph, v, ph.pi(v, p[0]), ph.pi(v, p[1]));
    if (w.path.empty()) return Ratio(0);
    const InducedGraph& cu = ph.cf_graph(u);
    auto local = to_local(cu, w.path);
    if (!is_geodesic_path(cu.graph, ph.cf_distances(u), local)) return Ratio(-1);
    if (!ph.pi(u, p[0]).contains(w.path.front()) || !ph.pi(u, p[1]).contains(w.path.back())) return Ratio(-1);
    return finite(std::min(dv + 1, path_clearance(ph, u, w.path, ph.rho(v, u))));
  }
  if (r.name == "combinatorial_bgi" && d.size() == 1) {
    const auto& cx = ph.augmented().graph();
    if (!is_geodesic_path(cx, ph.cf_distances(0), w.path)) return Ratio(-1);
    for (int x : w.path)
      if (ph.pf(d[0]).contains(x)) return Ratio(-1);
    return finite(set_dist(ph, d[0], ph.project(d[0], p[0]), ph.project(d[0], p[1])) + 1);
  }
  if (r.name == "large_links" && d.size() == 1) {
    bool degen = false;
    return Ratio(large_link_instance(ph, d[0], p[0], p[1], &degen).e);
  }
  if (r.name == "partial_realization" && !w.path.empty()) {
    VertexSet s(ph.system().host().order());
    for (int x : p) s.insert(x);
    if (!s.is_subset_of(ph.x_graph().cliques[w.path[0]])) return Ratio(-1);
    return finite(realization_instance(ph, d, p, w.path[0]));
  }
  if (r.name == "hyperbolicity" && d.size() == 1 && p.size() == 4) {
    const InducedGraph& cf = ph.cf_graph(d[0]);
    auto l = to_local(cf, p);
    return Ratio(four_point_gap(ph.cf_distances(d[0]), l[0], l[1], l[2], l[3]), 2);
  }
  if ((r.name == "qi_multiplicative" || r.name == "qi_additive") && d.size() == 1 && p.size() == 2) {
    int sub = ph.dist_cf(d[0], p[0], p[1]);
    int amb = ph.dist_yf(d[0], p[0], p[1]);
    if (r.name == "qi_additive") return Ratio(sub - amb);
    return Ratio(sub, amb);
  }
  return r.name == "qi_multiplicative" ? Ratio(1) : Ratio(0);
}

UniquenessTable check_uniqueness(const ProtoHierarchy& ph) {
  const int n = ph.w_count();
  auto dw = distance_matrix(ph.x_graph().w);
  std::vector<std::pair<int, int>> rows;  // (max projection distance, d_W)
  UniquenessTable t;
  int top = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int mp = 0;
      for (int f = 0; f < ph.domain_count(); ++f)
        mp = std::max(mp, set_dist(ph, f, ph.pi(f, a), ph.pi(f, b)));
      int d = dw.reachable(a, b) ? dw(a, b) : kInfinite;
      if (d >= kInfinite) ++t.cross_component_pairs;
      rows.push_back({mp, d});
      if (mp < kInfinite) top = std::max(top, mp);
    }
  t.theta.assign(top + 1, 0);
  for (auto [mp, d] : rows)
    for (int k = std::min(mp, top + 1); k <= top; ++k) t.theta[k] = std::max(t.theta[k], d);
  return t;
}

Tuple coordinates(const ProtoHierarchy& ph, int w) {
  Tuple t;
  for (int f = 0; f < ph.domain_count(); ++f) t.push_back(ph.pi(f, w));
  return t;
}

TupleConsistency tuple_consistency(const ProtoHierarchy& ph, const Tuple& t) {
  const FactorSystem& fs = ph.system();
  const int m = fs.size();
  if (static_cast<int>(t.size()) != m) throw PreconditionError("tuple needs one coordinate per domain");
  TupleConsistency out;
  auto offer = [&](int k, int u, int v, const char* clause) {
    if (k > out.kappa) out = {k, u, v, clause};
  };
  for (int u = 0; u < m; ++u) {
    if (t[u].empty()) throw PreconditionError("empty coordinate for domain " + std::to_string(u));
    if (!t[u].is_subset_of(ph.cf(u))) throw PreconditionError("coordinate outside CF for domain " + std::to_string(u));
    offer(ph.diam(u, t[u]), u, u, "diameter");
  }
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (u < v && fs.transverse(u, v)) offer(transverse_term(ph, u, v, t[u], t[v]), u, v, "transverse");
      if (fs.proper_nested(u, v)) offer(nested_term(ph, u, v, t[u], t[v]), u, v, "nested");
    }
  return out;
}

Realization realize_tuple(const ProtoHierarchy& ph, const Tuple& t, int kappa) {
  auto c = tuple_consistency(ph, t);
  if (c.kappa > kappa)
    throw PreconditionError("tuple is not " + std::to_string(kappa) + "-consistent: " + c.clause + " pair (" +
                            std::to_string(c.u) + ", " + std::to_string(c.v) + ") needs " +
                            distance_string(c.kappa));
  Realization best;
  best.deviation = std::numeric_limits<int>::max();
  for (int w = 0; w < ph.w_count(); ++w) {
    int dev = 0;
    for (int f = 0; f < ph.domain_count() && dev < best.deviation; ++f)
      dev = std::max(dev, ph.hausdorff(f, ph.pi(f, w), t[f]));
    if (dev < best.deviation) best = {w, dev};
  }
  return best;
}

XGraph restriction_w_family(const AugmentedGraph& aug, int f) {
  const FactorSystem& fs = aug.system();
  const XGraph& xg = aug.x_graph();
  InducedGraph sub = induced(fs.host(), fs.domain(f));
  auto cl = maximal_cliques(sub.graph);
  // Ambient cliques containing each clique of F.
  std::vector<std::vector<int>> over(cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) {
    VertexSet c = sub.lift(cl[i]);
    for (std::size_t w = 0; w < xg.cliques.size(); ++w)
      if (c.is_subset_of(xg.cliques[w])) over[i].push_back(static_cast<int>(w));
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j) {
      bool adj = false;
      for (int a : over[i])
        for (int b : over[j]) adj = adj || xg.w.adjacent(a, b);
      if (adj) pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return make_x_graph(sub.graph, pairs);
}

HierarchyConditionReport check_hierarchy_condition(const AugmentedGraph& aug, const WFamily& w_family,
                                                   bool separation) {
  const FactorSystem& fs = aug.system();
  const Graph& host = fs.host();
  HierarchyConditionReport rep;
  const int m = fs.size();
  std::vector<XGraph> wf(m);
  for (int f = 0; f < m; ++f) {
    wf[f] = f == 0 ? aug.x_graph() : w_family(f);
    InducedGraph sub = induced(host, fs.domain(f));
    if (!same_labelled_graph(wf[f].base, sub.graph))
      throw PreconditionError("W family for domain " + std::to_string(f) + " is not over the induced graph");
  }
  auto lift_clique = [&](int f, int i) {
    InducedGraph sub = induced(host, fs.domain(f));
    return sub.lift(wf[f].cliques[i]);
  };

  for (int f = 0; f < m; ++f) {
    // (1) induced system and its augmented graphs
    InducedSystem is = induced_system(fs, f);
    std::string why = factor_system_violation(is.graph.graph, is.family);
    if (!why.empty()) {
      rep.induced_systems = false;
      rep.failures.push_back("domain " + std::to_string(f) + ": " + why);
      continue;
    }
    FactorSystem local = close_factor_system(is.graph.graph, is.family);
    if (local.size() != static_cast<int>(is.family.size())) {
      rep.induced_systems = false;
      rep.failures.push_back("domain " + std::to_string(f) + ": induced family not closed");
      continue;
    }
    AugmentedGraph sub_aug(local, wf[f]);
    for (int lf = 0; lf < local.size(); ++lf) {
      int amb = fs.find(is.graph.lift(local.domain(lf)));
      if (amb < 0) throw InvariantViolation("induced domain missing from the ambient system");
      if (!same_labelled_graph(sub_aug.domain_graph(lf).graph, aug.domain_graph(amb).graph)) {
        rep.augmented_graphs = false;
        rep.failures.push_back("domain " + std::to_string(f) + ": augmented graph of domain " + std::to_string(amb) +
                               " differs");
      }
    }

    // (2) induced maps W^{F'} -> W^F
    const auto images = [&](int fp, const VertexSet& x) {
      std::vector<int> img;
      for (std::size_t i = 0; i < wf[fp].cliques.size(); ++i) {
        VertexSet s = lift_clique(fp, static_cast<int>(i)) | x;
        if (!is_clique(host, s)) throw InvariantViolation("orthogonality violated: x * w is not a clique");
        int target = -1;
        for (std::size_t j = 0; j < wf[f].cliques.size() && target < 0; ++j)
          if (s.is_subset_of(lift_clique(f, static_cast<int>(j)))) target = static_cast<int>(j);
        if (target < 0) throw InvariantViolation("no maximal clique of the domain contains x * w");
        img.push_back(target);
      }
      return img;
    };
    for (int fp = 0; fp < m; ++fp) {
      if (!fs.nested(fp, f)) continue;
      VertexSet perp = fs.link_of(fp) & fs.domain(f);
      std::vector<VertexSet> xs;
      if (perp.empty()) {
        xs.push_back(VertexSet(host.order()));
      } else {
        InducedGraph pg = induced(host, perp);
        for (const auto& c : maximal_cliques(pg.graph)) xs.push_back(pg.lift(c));
      }
      for (const auto& x : xs) {
        ++rep.maps_checked;
        auto img = images(fp, x);
        const Graph& src = wf[fp].w;
        const Graph& dst = wf[f].w;
        for (int a = 0; a < src.order(); ++a)
          for (int b = a + 1; b < src.order(); ++b) {
            bool ia = img[a] == img[b] || dst.adjacent(img[a], img[b]);
            if (src.adjacent(a, b) && !ia) {
              rep.maps = false;
              rep.failures.push_back("domain " + std::to_string(f) + " from " + std::to_string(fp) +
                                     ": adjacent pair w" + std::to_string(a) + ", w" + std::to_string(b) +
                                     " not sent to adjacent images");
            }
            if (separation && !src.adjacent(a, b) && ia) {
              rep.separation = false;
              rep.failures.push_back("domain " + std::to_string(f) + " from " + std::to_string(fp) +
                                     ": separated pair w" + std::to_string(a) + ", w" + std::to_string(b) +
                                     " sent to adjacent or equal images");
            }
          }
      }
    }
  }
  return rep;
}

}  // namespace hhs
