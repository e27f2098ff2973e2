#include "hhs/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hhs/errors.hpp"

namespace hhs {

Ratio::Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw PreconditionError("ratio with zero denominator");
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Ratio::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

int four_point_gap(const DistanceMatrix& d, int w, int x, int y, int z) {
  int s[3] = {d(w, x) + d(y, z), d(w, y) + d(x, z), d(w, z) + d(x, y)};
  std::sort(s, s + 3);
  return s[2] - s[1];
}

HyperbolicityReport gromov_delta(const DistanceMatrix& d) {
  HyperbolicityReport r;
  const int n = d.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          int gap = four_point_gap(d, a, b, c, e);
          if (gap > r.twice_delta) {
            r.twice_delta = gap;
            r.witness = {a, b, c, e};
          }
        }
  return r;
}

HyperbolicityReport gromov_delta(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("gromov_delta needs a connected graph");
  return gromov_delta(distance_matrix(g));
}

EmbeddingReport qi_distortion(const Graph& ambient, const VertexSet& sub) {
  return qi_distortion(ambient, distance_matrix(ambient), sub);
}

EmbeddingReport qi_distortion(const Graph& ambient, const DistanceMatrix& ambient_d, const VertexSet& sub) {
  EmbeddingReport r;
  InducedGraph s = induced(ambient, sub);
  DistanceMatrix sd = distance_matrix(s.graph);
  const int m = s.graph.order();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int a = s.to_parent[i], b = s.to_parent[j];
      if (!ambient_d.reachable(a, b)) continue;
      if (!sd.reachable(i, j)) {
        if (!r.infinite) {
          r.infinite = true;
          r.multiplicative_witness = r.additive_witness = {a, b};
        }
        continue;
      }
      if (r.infinite) continue;
      Ratio q(sd(i, j), ambient_d(a, b));
      if (q > r.multiplicative) {
        r.multiplicative = q;
        r.multiplicative_witness = {a, b};
      }
      int add = sd(i, j) - ambient_d(a, b);
      if (add > r.additive) {
        r.additive = add;
        r.additive_witness = {a, b};
      }
    }
  return r;
}

VertexSet nearest_point_projection(const Graph& g, const VertexSet& allowed, const VertexSet& target, int x,
                                   bool* unreachable) {
  VertexSet out(g.order());
  if (unreachable) *unreachable = false;
  if (!allowed.contains(x)) throw PreconditionError("projected vertex outside the ambient subgraph");
  auto dist = bfs_distances(g, x, &allowed);
  int best = -1;
  target.for_each([&](int y) {
    if (dist[y] >= 0 && (best < 0 || dist[y] < best)) best = dist[y];
  });
  if (best < 0) {
    if (unreachable) *unreachable = true;
    return out;
  }
  target.for_each([&](int y) {
    if (dist[y] >= 0 && dist[y] <= best + 1) out.insert(y);
  });
  return out;
}

BottleneckReport bottleneck_delta(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("bottleneck_delta needs a connected graph");
  const int n = g.order();
  DistanceMatrix d = distance_matrix(g);
  // level[m][x * n + y]: largest t such that x and y are joined inside
  // {v : d(m, v) >= t}, i.e. the least ball radius about m meeting every x-y
  // path.
  std::vector<std::vector<int>> level(n);
  for (int m = 0; m < n; ++m) {
    int ecc = 0;
    for (int v = 0; v < n; ++v) ecc = std::max(ecc, d(m, v));
    auto& lv = level[m];
    lv.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<bool> done(static_cast<std::size_t>(n) * n, false);
    for (int t = ecc; t >= 1; --t) {
      VertexSet keep(n);
      for (int v = 0; v < n; ++v)
        if (d(m, v) >= t) keep.insert(v);
      auto comp = component_labels(g, &keep);
      for (int x = 0; x < n; ++x) {
        if (comp[x] < 0) continue;
        for (int y = x; y < n; ++y) {
          std::size_t k = static_cast<std::size_t>(x) * n + y;
          if (!done[k] && comp[y] == comp[x]) {
            done[k] = true;
            lv[k] = t;
          }
        }
      }
    }
  }
  BottleneckReport r;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int dxy = d(x, y);
      if (dxy <= 1) continue;
      int best = std::numeric_limits<int>::max(), best_m = -1;
      for (int m = 0; m < n; ++m) {
        if (!d.on_geodesic(x, m, y)) continue;
        if (d(x, m) != dxy / 2 && d(x, m) != (dxy + 1) / 2) continue;
        int v = level[m][static_cast<std::size_t>(x) * n + y];
        if (v < best) {
          best = v;
          best_m = m;
        }
      }
      if (best > r.delta) r = {best, x, y, best_m};
    }
  return r;
}

bool every_geodesic_meets(const Graph& g, const DistanceMatrix& d, int x, int y, const VertexSet& blocked) {
  return geodesic_avoiding(g, d, x, y, blocked).empty();
}

std::vector<int> geodesic_avoiding(const Graph& g, const DistanceMatrix& d, int x, int y, const VertexSet& blocked) {
  if (!d.reachable(x, y) || blocked.contains(x) || blocked.contains(y)) return {};
  const int n = g.order();
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<int> frontier{x};
  seen[x] = true;
  while (!frontier.empty() && !seen[y]) {
    std::vector<int> next;
    for (int u : frontier)
      for (int v : g.neighbors(u)) {
        if (seen[v] || blocked.contains(v)) continue;
        if (d(x, v) != d(x, u) + 1 || !d.on_geodesic(x, v, y)) continue;
        seen[v] = true;
        parent[v] = u;
        next.push_back(v);
      }
    frontier = std::move(next);
  }
  if (!seen[y]) return {};
  std::vector<int> path{y};
  while (path.back() != x) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::pair<int, std::vector<int>> widest_geodesic(const Graph& g, const DistanceMatrix& d, int x, int y,
                                                 const std::vector<int>& weight) {
  if (!d.reachable(x, y)) throw PreconditionError("widest_geodesic between disconnected vertices");
  const int n = g.order();
  const int len = d(x, y);
  std::vector<std::vector<int>> layers(len + 1);
  for (int v = 0; v < n; ++v)
    if (d.on_geodesic(x, v, y)) layers[d(x, v)].push_back(v);
  std::vector<int> best(n, -1), parent(n, -1);
  best[x] = weight[x];
  for (int i = 1; i <= len; ++i)
    for (int v : layers[i])
      for (int u : g.neighbors(v)) {
        if (best[u] < 0 || d(x, u) != i - 1 || !d.on_geodesic(x, u, y)) continue;
        int c = std::min(best[u], weight[v]);
        if (c > best[v]) {
          best[v] = c;
          parent[v] = u;
        }
      }
  std::vector<int> path{y};
  while (path.back() != x) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return {best[y], path};
}

HierarchyPath hierarchy_path(const Graph& chat, const std::vector<VertexSet>& nbhd, const DistanceMatrix& dx, int a,
                             int b, int p, int q) {
  const int n = chat.order();
  if (static_cast<int>(nbhd.size()) != n) throw PreconditionError("one neighbourhood per vertex required");
  if (!nbhd[a].contains(p) || !nbhd[b].contains(q)) throw PreconditionError("endpoints outside their neighbourhoods");
  auto da = bfs_distances(chat, a);
  auto db = bfs_distances(chat, b);
  if (da[b] < 0) throw PreconditionError("no path between the chosen vertices");
  HierarchyPath out;
  out.target = dx(p, q);
  if (a == b) {
    out.nodes = {a};
    out.points = {p, q};
    out.length_sum = dx(p, q);
    return out;
  }
  const int len = da[b];
  const int big = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> layers(len + 1);
  for (int v = 0; v < n; ++v)
    if (da[v] >= 0 && db[v] >= 0 && da[v] + db[v] == len) layers[da[v]].push_back(v);

  // best[v][x]: least cost of a prefix ending at node v with current point x
  // in N(pred) ∩ N(v); back pointers give the predecessor node and point.
  const int nx = dx.order();
  std::vector<std::vector<int>> best(n), from_node(n), from_point(n);
  auto reset = [&](int v) {
    best[v].assign(nx, big);
    from_node[v].assign(nx, -1);
    from_point[v].assign(nx, -1);
  };
  for (int i = 0; i < len; ++i) {
    for (int u : layers[i]) {
      // cost to move to point y in N(u)
      std::vector<int> reach(nx, big), arg(nx, -1);
      nbhd[u].for_each([&](int y) {
        if (u == a) {
          reach[y] = dx(p, y);
          arg[y] = p;
          return;
        }
        for (int x = 0; x < nx; ++x) {
          if (best[u].empty() || best[u][x] >= big) continue;
          int c = best[u][x] + dx(x, y);
          if (c < reach[y]) {
            reach[y] = c;
            arg[y] = x;
          }
        }
      });
      for (int v : chat.neighbors(u)) {
        if (da[v] != i + 1 || db[v] < 0 || da[v] + db[v] != len) continue;
        VertexSet common = nbhd[u] & nbhd[v];
        if (common.empty()) throw InvariantViolation("adjacent vertices with disjoint neighbourhoods");
        if (best[v].empty()) reset(v);
        common.for_each([&](int y) {
          if (reach[y] < best[v][y]) {
            best[v][y] = reach[y];
            from_node[v][y] = u;
            from_point[v][y] = arg[y];
          }
        });
      }
    }
  }
  int end_point = -1, total = big;
  for (int x = 0; x < nx; ++x) {
    if (best[b][x] >= big) continue;
    int c = best[b][x] + dx(x, q);
    if (c < total) {
      total = c;
      end_point = x;
    }
  }
  std::vector<int> nodes{b}, points{q, end_point};
  int v = b, x = end_point;
  while (v != a) {
    int u = from_node[v][x];
    int y = from_point[v][x];
    nodes.push_back(u);
    points.push_back(y);
    v = u;
    x = y;
  }
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(points.begin(), points.end());
  out.nodes = std::move(nodes);
  out.points = std::move(points);
  out.length_sum = total;
  if (total != out.target) throw InvariantViolation("hierarchy path is not additive");
  return out;
}

bool hierarchy_path_holds(const Graph& chat, const std::vector<VertexSet>& nbhd, const DistanceMatrix& dx,
                          const HierarchyPath& path) {
  const auto& A = path.nodes;
  const auto& P = path.points;
  if (A.empty() || P.size() != A.size() + 1) return false;
  auto da = bfs_distances(chat, A.front());
  if (da[A.back()] != static_cast<int>(A.size()) - 1) return false;
  for (std::size_t i = 0; i + 1 < A.size(); ++i)
    if (!chat.adjacent(A[i], A[i + 1])) return false;
  if (!nbhd[A.front()].contains(P.front()) || !nbhd[A.back()].contains(P.back())) return false;
  for (std::size_t i = 1; i < A.size(); ++i)
    if (!nbhd[A[i - 1]].contains(P[i]) || !nbhd[A[i]].contains(P[i])) return false;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < P.size(); ++i) sum += dx(P[i], P[i + 1]);
  return sum == path.length_sum && sum == dx(P.front(), P.back());
}

}  // namespace hhs
