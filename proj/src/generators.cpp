#include "hhs/generators.hpp"

#include <random>

#include "hhs/errors.hpp"

namespace hhs::gen {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph hypercube(int dim) {
  require(dim >= 0 && dim <= 12, "hypercube dimension must be in [0, 12]");
  const int n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
  return Graph(n, e);
}

Graph hamming(int q, int d) {
  require(q >= 2 && d >= 1, "hamming needs q >= 2 and d >= 1");
  int n = 1;
  for (int i = 0; i < d; ++i) {
    n *= q;
    require(n <= 100000, "hamming graph too large");
  }
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) {
    int place = 1;
    for (int i = 0; i < d; ++i, place *= q) {
      int digit = (v / place) % q;
      for (int t = digit + 1; t < q; ++t) e.push_back({v, v + (t - digit) * place});
    }
  }
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    std::string s;
    int x = v;
    for (int i = 0; i < d; ++i, x /= q) s.insert(s.begin(), static_cast<char>('0' + x % q));
    labels.push_back(q <= 10 ? s : std::to_string(v));
  }
  return Graph(n, e, labels);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i});
  return Graph(n, e);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  auto id = [nb](int i, int j) { return i * nb + j; };
  std::vector<Edge> e;
  for (int i = 0; i < na; ++i)
    for (const auto& f : b.edges()) e.push_back({id(i, f.u), id(i, f.v)});
  for (const auto& f : a.edges())
    for (int j = 0; j < nb; ++j) e.push_back({id(f.u, j), id(f.v, j)});
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  return Graph(na * nb, e, labels);
}

Graph glued_squares(int squares) {
  require(squares >= 1, "glued-squares needs at least one square");
  return cartesian_product(path(2), path(squares + 1));
}

}  // namespace hhs::gen
