#include "hhs/proto.hpp"

#include <algorithm>

#include "hhs/errors.hpp"

namespace hhs {

std::string distance_string(int d) { return d >= kInfinite ? "inf" : std::to_string(d); }

ProtoHierarchy::ProtoHierarchy(AugmentedGraph aug) : aug_(std::move(aug)) {
  const FactorSystem& fs = system();
  const Graph& cx = aug_.graph();
  const int m = fs.size();
  dom_.resize(m);
  for (int f = 0; f < m; ++f) {
    auto& d = dom_[f];
    d.cf = aug_.domain_vertices(f);
    d.pf = aug_.projection_part(f);
    d.yf = aug_.complement(f);
    d.cf_graph = induced(cx, d.cf);
    d.cf_dist = distance_matrix(d.cf_graph.graph);
    d.yf_graph = induced(cx, d.yf);
    d.yf_dist = distance_matrix(d.yf_graph.graph);
  }
  pi_.assign(m, {});
  for (int f = 0; f < m; ++f) {
    for (int w = 0; w < w_count(); ++w) {
      VertexSet c = clique(w);
      VertexSet img = f == 0 ? c : project(f, c & yf(f));
      if (img.empty())
        degenerate_.push_back("clique w" + std::to_string(w) + " has no projection to domain " + std::to_string(f));
      pi_[f].push_back(std::move(img));
    }
  }
  rho_.assign(m, std::vector<VertexSet>(m));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (rho_defined(f, g)) rho_[f][g] = g == 0 ? pf(f) : project(g, pf(f) & yf(g));
}

int ProtoHierarchy::dist_cf(int f, int a, int b) const {
  const auto& d = dom_[f];
  int la = d.cf_graph.local(a), lb = d.cf_graph.local(b);
  if (la < 0 || lb < 0 || !d.cf_dist.reachable(la, lb)) return kInfinite;
  return d.cf_dist(la, lb);
}

int ProtoHierarchy::dist_yf(int f, int a, int b) const {
  const auto& d = dom_[f];
  int la = d.yf_graph.local(a), lb = d.yf_graph.local(b);
  if (la < 0 || lb < 0 || !d.yf_dist.reachable(la, lb)) return kInfinite;
  return d.yf_dist(la, lb);
}

int ProtoHierarchy::diam(int f, const VertexSet& s) const {
  auto v = s.to_vector();
  int out = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) out = std::max(out, dist_cf(f, v[i], v[j]));
  return out;
}

int ProtoHierarchy::point_to_set(int f, int a, const VertexSet& s) const {
  int best = kInfinite;
  s.for_each([&](int b) { best = std::min(best, dist_cf(f, a, b)); });
  return best;
}

int ProtoHierarchy::hausdorff(int f, const VertexSet& a, const VertexSet& b) const {
  if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0 : kInfinite;
  int out = 0;
  a.for_each([&](int x) { out = std::max(out, point_to_set(f, x, b)); });
  b.for_each([&](int y) { out = std::max(out, point_to_set(f, y, a)); });
  return out;
}

VertexSet ProtoHierarchy::project(int f, int x) const {
  VertexSet out(aug_.graph().order());
  if (f == 0) {
    out.insert(x);
    return out;
  }
  const auto& d = dom_[f];
  int lx = d.yf_graph.local(x);
  if (lx < 0) return out;
  int best = kInfinite;
  d.cf.for_each([&](int y) {
    int ly = d.yf_graph.local(y);
    if (d.yf_dist.reachable(lx, ly)) best = std::min(best, d.yf_dist(lx, ly));
  });
  if (best >= kInfinite) return out;
  d.cf.for_each([&](int y) {
    int ly = d.yf_graph.local(y);
    if (d.yf_dist.reachable(lx, ly) && d.yf_dist(lx, ly) <= best + 1) out.insert(y);
  });
  return out;
}

VertexSet ProtoHierarchy::project(int f, const VertexSet& s) const {
  VertexSet out(aug_.graph().order());
  s.for_each([&](int x) { out |= project(f, x); });
  return out;
}

bool ProtoHierarchy::rho_defined(int f, int g) const {
  if (f == g) return false;
  Relation r = system().relation(f, g);
  return r == Relation::nested || r == Relation::transverse;
}

const VertexSet& ProtoHierarchy::rho(int f, int g) const {
  if (!rho_defined(f, g)) throw PreconditionError("relative projection defined only for nested or transverse pairs");
  return rho_[f][g];
}

VertexSet ProtoHierarchy::rho_down(int g, int f, const VertexSet& s) const {
  if (!system().proper_nested(f, g)) throw PreconditionError("downward relative projection needs a nested pair");
  return project(f, s & yf(f));
}

}  // namespace hhs
