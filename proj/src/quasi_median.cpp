#include "hhs/quasi_median.hpp"

#include <algorithm>
#include <cstdlib>

#include "hhs/errors.hpp"

namespace hhs {

QuasiMedians quasi_median_of_triple(const Graph& g, const DistanceMatrix& d, int x1, int x2, int x3) {
  if (!d.reachable(x1, x2) || !d.reachable(x1, x3) || !d.reachable(x2, x3))
    throw PreconditionError("quasi-median of vertices in different components");
  const int d12 = d(x1, x2), d13 = d(x1, x3), d23 = d(x2, x3);
  QuasiMedians out;
  // With a = d(x1,y1), b = d(x2,y2), c = d(x3,y3) the three geodesic
  // equations fix a, b, c once k is chosen.
  for (int k = 0; k <= std::min({d12, d13, d23}); ++k) {
    int s1 = d12 + d13 - d23 - k, s2 = d12 + d23 - d13 - k, s3 = d13 + d23 - d12 - k;
    if (s1 < 0 || s2 < 0 || s3 < 0 || (s1 & 1)) continue;
    int a = s1 / 2, b = s2 / 2, c = s3 / 2;
    std::vector<int> c1, c2, c3;
    for (int v = 0; v < g.order(); ++v) {
      if (d(x1, v) == a && d(v, x2) == d12 - a && d(v, x3) == d13 - a) c1.push_back(v);
      if (d(x2, v) == b && d(v, x1) == d12 - b && d(v, x3) == d23 - b) c2.push_back(v);
      if (d(x3, v) == c && d(v, x1) == d13 - c && d(v, x2) == d23 - c) c3.push_back(v);
    }
    for (int y1 : c1)
      for (int y2 : c2) {
        if (d(y1, y2) != k) continue;
        for (int y3 : c3)
          if (d(y1, y3) == k && d(y2, y3) == k) out.triples.push_back({y1, y2, y3});
      }
    if (!out.triples.empty()) {
      out.k = k;
      break;
    }
  }
  return out;
}

QuasiMedians quasi_median_of_triple(const Graph& g, int x1, int x2, int x3) {
  return quasi_median_of_triple(g, distance_matrix(g), x1, x2, x3);
}

std::string to_string(QmFailure f) {
  switch (f) {
    case QmFailure::none: return "none";
    case QmFailure::disconnected: return "disconnected";
    case QmFailure::k4_minus: return "k4_minus";
    case QmFailure::c6_hull: return "c6_hull";
    case QmFailure::triple: return "triple";
  }
  return "unknown";
}

VertexSet interval_closure(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  VertexSet out = s;
  std::vector<int> members = s.to_vector();
  // Every pair is examined once; a vertex added later is paired with all
  // members present at that time and with all later additions.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      int a = members[i], b = members[j];
      for (int v = 0; v < g.order(); ++v) {
        if (out.contains(v) || !d.on_geodesic(a, v, b)) continue;
        out.insert(v);
        members.push_back(v);
      }
    }
  }
  return out;
}

namespace {

bool is_cube3(const Graph& g, const VertexSet& s) {
  if (s.count() != 8) return false;
  auto sub = induced(g, s);
  for (int v = 0; v < 8; ++v)
    if (sub.graph.degree(v) != 3) return false;
  // A 3-regular bipartite graph on 8 vertices is K_{4,4} minus a perfect
  // matching, which is the 3-cube.
  std::vector<int> colour(8, -1);
  colour[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : sub.graph.neighbors(u)) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[u];
        stack.push_back(w);
      } else if (colour[w] == colour[u]) {
        return false;
      }
    }
  }
  return std::find(colour.begin(), colour.end(), -1) == colour.end();
}

bool is_isometric_cycle(const DistanceMatrix& d, const std::vector<int>& cyc) {
  const int n = static_cast<int>(cyc.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d(cyc[i], cyc[j]) != std::min(j - i, n - (j - i))) return false;
  return true;
}

bool is_cycle(const Graph& g, const std::vector<int>& cyc) {
  const int n = static_cast<int>(cyc.size());
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(cyc[i], cyc[(i + 1) % n])) return false;
  return true;
}

// First isometric 6-cycle (v0 smallest, v1 < v5) whose interval hull is not
// a 3-cube.
std::vector<int> bad_c6(const Graph& g, const DistanceMatrix& d) {
  for (int v0 = 0; v0 < g.order(); ++v0)
    for (int v1 : g.neighbors(v0)) {
      if (v1 < v0) continue;
      for (int v2 : g.neighbors(v1)) {
        if (v2 < v0 || d(v0, v2) != 2) continue;
        for (int v3 : g.neighbors(v2)) {
          if (v3 < v0 || d(v0, v3) != 3) continue;
          for (int v5 : g.neighbors(v0)) {
            if (v5 <= v1) continue;
            for (int v4 : g.neighbors(v5)) {
              if (v4 < v0 || v4 == v2 || !g.adjacent(v4, v3)) continue;
              std::vector<int> cyc{v0, v1, v2, v3, v4, v5};
              if (!is_isometric_cycle(d, cyc)) continue;
              if (!is_cube3(g, interval_closure(g, d, VertexSet(g.order(), cyc)))) return cyc;
            }
          }
        }
      }
    }
  return {};
}

}  // namespace

QuasiMedianReport is_quasi_median(const Graph& g) {
  QuasiMedianReport r;
  auto d = distance_matrix(g);
  for (int v = 1; v < g.order(); ++v)
    if (!d.reachable(0, v)) {
      r.failure = QmFailure::disconnected;
      r.witness = {0, v};
      return r;
    }
  for (const auto& e : g.edges()) {
    auto common = (g.neighbor_set(e.u) & g.neighbor_set(e.v)).to_vector();
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (!g.adjacent(common[i], common[j])) {
          r.failure = QmFailure::k4_minus;
          r.witness = {e.u, e.v, common[i], common[j]};
          return r;
        }
  }
  if (auto cyc = bad_c6(g, d); !cyc.empty()) {
    r.failure = QmFailure::c6_hull;
    r.witness = cyc;
    return r;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      for (int c = b + 1; c < g.order(); ++c) {
        auto qm = quasi_median_of_triple(g, d, a, b, c);
        if (qm.triples.size() == 1) continue;
        r.failure = QmFailure::triple;
        r.witness = {a, b, c};
        for (std::size_t i = 0; i < std::min<std::size_t>(2, qm.triples.size()); ++i)
          r.witness.insert(r.witness.end(), qm.triples[i].begin(), qm.triples[i].end());
        return r;
      }
  r.is_quasi_median = true;
  return r;
}

bool witness_holds(const Graph& g, const QuasiMedianReport& report) {
  const auto& w = report.witness;
  for (int v : w)
    if (v < 0 || v >= g.order()) return false;
  switch (report.failure) {
    case QmFailure::none:
      return report.is_quasi_median;
    case QmFailure::disconnected:
      return w.size() == 2 && bfs_distances(g, w[0])[w[1]] == DistanceMatrix::kUnreachable;
    case QmFailure::k4_minus: {
      if (w.size() != 4) return false;
      VertexSet s(g.order(), w);
      if (s.count() != 4) return false;
      return g.adjacent(w[0], w[1]) && g.adjacent(w[0], w[2]) && g.adjacent(w[0], w[3]) && g.adjacent(w[1], w[2]) &&
             g.adjacent(w[1], w[3]) && !g.adjacent(w[2], w[3]);
    }
    case QmFailure::c6_hull: {
      if (w.size() != 6 || VertexSet(g.order(), w).count() != 6) return false;
      auto d = distance_matrix(g);
      return is_cycle(g, w) && is_isometric_cycle(d, w) && !is_cube3(g, interval_closure(g, d, VertexSet(g.order(), w)));
    }
    case QmFailure::triple: {
      if (w.size() < 3) return false;
      auto d = distance_matrix(g);
      auto qm = quasi_median_of_triple(g, d, w[0], w[1], w[2]);
      return qm.triples.size() != 1;
    }
  }
  return false;
}

}  // namespace hhs
