#include "wklab/enumerate.hpp"

#include <stdexcept>

namespace wklab {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int u, int v) {
    // pairs (u, *) start after all pairs with smaller first coordinate
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Graph graph_from_mask(int n, uint64_t mask) {
    if (pair_count(n) > 63) throw std::invalid_argument("graph too large for a 64-bit mask");
    GraphBuilder b(n);
    int p = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++p)
            if (mask & (uint64_t{1} << p)) b.add_edge(u, v);
    return b.build();
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&, uint64_t)>& fn) {
    const int bits = pair_count(n);
    if (bits > 62) throw std::invalid_argument("labeled enumeration too large");
    const uint64_t total = uint64_t{1} << bits;
    for (uint64_t mask = 0; mask < total; ++mask) fn(graph_from_mask(n, mask), mask);
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(edge_probability);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

} // namespace wklab
