#include "hhs/factor_system.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hhs/errors.hpp"

namespace hhs {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::nested: return "nested";
    case Relation::contains: return "contains";
    case Relation::orthogonal: return "orthogonal";
    case Relation::transverse: return "transverse";
  }
  return "?";
}

int FactorSystem::find(const VertexSet& s) const {
  for (int i = 0; i < size(); ++i)
    if (domains_[i] == s) return i;
  return -1;
}

Relation FactorSystem::relation(int i, int j) const {
  if (i == j) return Relation::equal;
  if (nested(i, j)) return Relation::nested;
  if (nested(j, i)) return Relation::contains;
  if (orthogonal(i, j)) return Relation::orthogonal;
  return Relation::transverse;
}

std::vector<int> FactorSystem::nested_in(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (nested(j, i)) out.push_back(j);
  return out;
}

namespace {

std::vector<VertexSet> required_seeds(const Graph& host) {
  std::vector<VertexSet> out{host.all_vertices()};
  for (int v = 0; v < host.order(); ++v) {
    VertexSet l = link(host, VertexSet(host.order(), {v}));
    if (!l.empty()) out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

FactorSystem close_factor_system(const Graph& host, const std::vector<VertexSet>& seeds, int cap) {
  const int n = host.order();
  if (n == 0) throw PreconditionError("factor system of an empty graph");
  std::vector<VertexSet> found;
  std::vector<FactorSystem::Origin> origin;
  std::unordered_map<VertexSet, int, VertexSetHash> index;
  auto add = [&](VertexSet s, FactorSystem::Origin o) {
    if (index.count(s)) return;
    if (static_cast<int>(found.size()) >= cap) throw CapExceeded("factor system too large");
    index.emplace(s, static_cast<int>(found.size()));
    found.push_back(std::move(s));
    origin.push_back(o);
  };
  for (const auto& s : seeds) {
    if (s.universe() != n) throw PreconditionError("seed is not a subgraph of the host");
    if (s.empty()) throw PreconditionError("empty seed domain");
    add(s, {});
  }
  for (const auto& s : required_seeds(host))
    if (!index.count(s)) throw PreconditionError("seeds miss the host or a nonempty vertex link");
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      VertexSet s = found[i] & found[j];
      if (!s.empty()) add(std::move(s), {static_cast<int>(j), static_cast<int>(i)});
    }

  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> counts(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) counts[i] = found[i].count();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    return found[a] < found[b];
  });
  std::vector<int> rank(found.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);

  FactorSystem fs;
  fs.host_ = host;
  for (int old : order) {
    fs.domains_.push_back(found[old]);
    auto o = origin[old];
    if (o.a >= 0) o = {rank[o.a], rank[o.b]};
    fs.origins_.push_back(o);
  }
  const int m = fs.size();
  fs.links_.resize(m);
  fs.perp_.assign(m, -1);
  fs.co_level_.assign(m, 0);
  fs.co_level_min_.assign(m, 0);
  std::vector<int> chain(m, 1);
  for (int i = 0; i < m; ++i) {
    fs.links_[i] = link(host, fs.domains_[i]);
    if (!fs.links_[i].empty()) {
      fs.perp_[i] = fs.find(fs.links_[i]);
      if (fs.perp_[i] < 0) throw InvariantViolation("domain link missing from the closure");
    }
    int hi = -1, lo = -1;
    for (int j = 0; j < i; ++j) {
      if (!fs.proper_nested(i, j)) continue;
      hi = std::max(hi, fs.co_level_[j]);
      lo = lo < 0 ? fs.co_level_min_[j] : std::min(lo, fs.co_level_min_[j]);
      chain[i] = std::max(chain[i], chain[j] + 1);
    }
    if (i > 0) {
      fs.co_level_[i] = hi + 1;
      fs.co_level_min_[i] = lo + 1;
    }
  }
  fs.complexity_ = *std::max_element(chain.begin(), chain.end());
  return fs;
}

FactorSystem minimal_factor_system(const Graph& host, int cap) {
  return close_factor_system(host, required_seeds(host), cap);
}

std::string factor_system_violation(const Graph& host, const std::vector<VertexSet>& family) {
  std::unordered_map<VertexSet, int, VertexSetHash> present;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].universe() != host.order()) return "domain " + std::to_string(i) + " has the wrong universe";
    if (family[i].empty()) return "domain " + std::to_string(i) + " is empty";
    present.emplace(family[i], static_cast<int>(i));
  }
  if (host.order() > 0 && !present.count(host.all_vertices())) return "host missing";
  for (int v = 0; v < host.order(); ++v) {
    VertexSet l = link(host, VertexSet(host.order(), {v}));
    if (!l.empty() && !present.count(l)) return "link of vertex " + host.label(v) + " missing";
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      VertexSet s = family[i] & family[j];
      if (!s.empty() && !present.count(s))
        return "intersection of domains " + std::to_string(i) + " and " + std::to_string(j) + " missing";
    }
  return {};
}

InducedSystem induced_system(const FactorSystem& fs, int i) {
  InducedSystem out{induced(fs.host(), fs.domain(i)), {}, {}};
  for (int j : fs.nested_in(i)) {
    out.ambient_index.push_back(j);
    out.family.push_back(out.graph.restrict(fs.domain(j)));
  }
  return out;
}

}  // namespace hhs
