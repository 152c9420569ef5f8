#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wklab/vertex_set.hpp"

namespace wklab {

// Simple undirected graph on dense vertex ids 0..n-1. Adjacency is symmetric
// and loop-free by construction; instances are immutable once built.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n) { return Graph(n); }

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }

    const VertexSet& neighbors(int v) const { return adj_[v]; }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        s.add(v);
        return s;
    }

    int degree(int v) const { return adj_[v].count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    friend class GraphBuilder;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Mutable staging area for Graph construction.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    // Throws std::invalid_argument on out-of-range ids or loops.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const { return g_.adj_[u].contains(v); }

    int vertex_count() const { return g_.n_; }

    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

} // namespace wklab
