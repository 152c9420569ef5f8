#include "wklab/graph.hpp"

#include <stdexcept>
#include <string>

namespace wklab {

void GraphBuilder::add_edge(int u, int v) {
    const int n = g_.n_;
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
        throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (g_.adj_[u].contains(v)) return;
    g_.adj_[u].add(v);
    g_.adj_[v].add(u);
    ++g_.m_;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph Graph::cycle(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    if (n >= 3) b.add_edge(n - 1, 0);
    return b.build();
}

Graph Graph::complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1))
            es.emplace_back(u, v);
    return es;
}

} // namespace wklab
