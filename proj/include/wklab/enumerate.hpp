#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "wklab/graph.hpp"

namespace wklab {

// Number of vertex pairs, i.e. the bit width of a labeled-graph mask.
int pair_count(int n);

// Row-major index of the pair (u, v), u < v: (0,1), (0,2), ..., (1,2), ...
int pair_index(int n, int u, int v);

// Labeled graph on n vertices whose edge set is given by mask bits in
// pair_index order. Requires pair_count(n) <= 63.
Graph graph_from_mask(int n, uint64_t mask);

// All 2^C(n,2) labeled graphs on n vertices in ascending mask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&, uint64_t)>& fn);

// G(n, p) with one Bernoulli draw per pair in pair_index order, so the
// result is reproducible from the generator state.
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

} // namespace wklab
