#pragma once

#include <vector>

#include "wklab/family.hpp"
#include "wklab/graph.hpp"

namespace wklab {

// H = G * K_k: every base vertex v becomes the k-clique K^v on the id block
// [v*k, v*k + k); blocks of adjacent base vertices are fully joined.
struct ProductGraph {
    Graph base;
    int k = 1;
    Graph product;

    int encode(int v, int i) const { return v * k + i; }
    int base_of(int id) const { return id / k; }
    int label_of(int id) const { return id % k; }

    VertexSet block(int v) const {
        VertexSet b(product.vertex_count());
        for (int i = 0; i < k; ++i) b.add(encode(v, i));
        return b;
    }
};

// Throws std::invalid_argument for k < 1.
ProductGraph lex_product_with_clique(const Graph& g, int k);

// Base vertices whose block meets a.
VertexSet project(const ProductGraph& p, const VertexSet& a);

// {(v, label) : v in a}; requires a independent in the base (input error
// otherwise) so the image is independent in the product.
VertexSet lift(const ProductGraph& p, const VertexSet& a, int label);

// Per-block bijection onto labels 1..k: whenever K^v meets family member i
// (1-based), the unique vertex in the intersection gets label i; remaining
// vertices take the free labels in ascending id order.
struct StarLabeling {
    int k = 1;
    std::vector<int> label; // size n_H, values 1..k
};

StarLabeling star_labeling(const ProductGraph& p, const IndependentFamily& family);

// The product vertex of block K^v carrying the given label.
int labeled_vertex(const ProductGraph& p, const StarLabeling& l, int base_v, int label);

// {labeled_vertex(v, label) : v in base_set}.
VertexSet lift_by_labels(const ProductGraph& p, const StarLabeling& l, const VertexSet& base_set,
                         int label);

struct ReductionCheck {
    bool base_well_covered = false;
    bool product_wk = false;
    bool consistent() const { return base_well_covered == product_wk; }
};

// Computes both sides independently by brute force: is the base
// well-covered, and is the product W_k?
ReductionCheck check_reduction(const Graph& g, int k);

// True iff the two verdicts of check_reduction agree.
bool verify_reduction(const Graph& g, int k);

} // namespace wklab
