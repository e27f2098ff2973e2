#pragma once

#include <cstdint>

#include "hhs/graph.hpp"

namespace hhs::gen {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
// Vertex i is the bit vector i; neighbours differ in one bit.
Graph hypercube(int dim);
// K_q^{□d}; vertex ids are base-q digit strings read as integers.
Graph hamming(int q, int d);
// Vertex i > 0 attaches to a vertex chosen uniformly from [0, i).
Graph random_tree(int n, std::uint64_t seed);
// Vertex (i, j) has id i * b.order() + j and label "(la,lb)".
Graph cartesian_product(const Graph& a, const Graph& b);
// A 2 x (squares + 1) grid: `squares` squares glued consecutively along edges.
Graph glued_squares(int squares);

}  // namespace hhs::gen
