#include "hhs/prisms.hpp"

#include "hhs/errors.hpp"
#include "hhs/gated.hpp"

namespace hhs {

VertexSet clique_at(const HyperplaneSystem& hs, int h, int v) {
  const auto& g = hs.graph();
  VertexSet out(g.order());
  out.insert(v);
  auto nbrs = g.neighbors(v);
  for (int w : nbrs)
    if (hs.hyperplane_of(v, w) == h) out.insert(w);
  return out;
}

std::vector<Prism> maximal_prisms(const HyperplaneSystem& hs) {
  const auto& g = hs.graph();
  std::vector<Prism> out;
  for (const auto& clique : maximal_cliques(hs.crossing_graph())) {
    Prism p;
    p.hyperplanes = clique.to_vector();
    VertexSet common = g.all_vertices();
    for (int h : p.hyperplanes) common &= hs.carrier(h);
    int corner = common.first();
    if (corner < 0) throw InvariantViolation("pairwise crossing hyperplanes with disjoint carriers");
    VertexSet seed(g.order());
    long long expected = 1;
    for (int h : p.hyperplanes) {
      p.factors.push_back(clique_at(hs, h, corner));
      seed |= p.factors.back();
      expected *= p.factors.back().count();
    }
    p.vertices = gated_hull(g, hs.distances(), seed);
    if (hs.meeting(p.vertices) != p.hyperplanes || p.vertices.count() != expected)
      throw InvariantViolation("prism realization failed for a maximal crossing family");
    out.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && out[i].vertices.is_subset_of(out[j].vertices))
        throw InvariantViolation("a realized prism is contained in another");
  return out;
}

}  // namespace hhs
