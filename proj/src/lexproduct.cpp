#include "wklab/lexproduct.hpp"

#include <stdexcept>

#include "wklab/independent.hpp"
#include "wklab/wk.hpp"

namespace wklab {

ProductGraph lex_product_with_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.vertex_count();
    if (static_cast<long long>(n) * k > 50000)
        throw std::invalid_argument("product would exceed 50000 vertices");
    GraphBuilder b(n * k);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) b.add_edge(v * k + i, v * k + j);
        for (int u : g.neighbors(v)) {
            if (u > v) continue; // each base edge once
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) b.add_edge(u * k + i, v * k + j);
        }
    }
    return ProductGraph{g, k, b.build()};
}

VertexSet project(const ProductGraph& p, const VertexSet& a) {
    if (a.universe() != p.product.vertex_count())
        throw std::invalid_argument("set universe does not match product order");
    VertexSet r(p.base.vertex_count());
    for (int id : a) r.add(p.base_of(id));
    return r;
}

VertexSet lift(const ProductGraph& p, const VertexSet& a, int label) {
    if (label < 0 || label >= p.k) throw std::invalid_argument("label out of range");
    if (!is_independent(p.base, a))
        throw std::invalid_argument("lift requires an independent base set");
    VertexSet r(p.product.vertex_count());
    for (int v : a) r.add(p.encode(v, label));
    return r;
}

StarLabeling star_labeling(const ProductGraph& p, const IndependentFamily& family) {
    if (auto err = family.validate(p.product))
        throw std::invalid_argument("invalid independent family: " + *err);
    if (family.k() > p.k)
        throw std::invalid_argument("family has more members than there are labels");
    const int n = p.base.vertex_count();
    const int k = p.k;
    StarLabeling l{k, std::vector<int>(p.product.vertex_count(), 0)};
    for (int v = 0; v < n; ++v) {
        // Constrained vertices first: a clique block meets an independent
        // member in at most one vertex, and disjoint members pin distinct
        // vertices, so the forced assignments never clash. Assert anyway.
        std::vector<bool> label_taken(k + 1, false);
        for (int i = 0; i < family.k(); ++i) {
            int hit = -1;
            for (int j = 0; j < k; ++j) {
                int id = p.encode(v, j);
                if (!family.set(i).contains(id)) continue;
                if (hit != -1) throw std::logic_error("block meets a member twice");
                hit = id;
            }
            if (hit == -1) continue;
            if (l.label[hit] != 0 || label_taken[i + 1])
                throw std::logic_error("conflicting block label constraints");
            l.label[hit] = i + 1;
            label_taken[i + 1] = true;
        }
        int next = 1;
        for (int j = 0; j < k; ++j) {
            int id = p.encode(v, j);
            if (l.label[id] != 0) continue;
            while (label_taken[next]) ++next;
            l.label[id] = next;
            label_taken[next] = true;
        }
    }
    return l;
}

int labeled_vertex(const ProductGraph& p, const StarLabeling& l, int base_v, int label) {
    for (int j = 0; j < p.k; ++j) {
        int id = p.encode(base_v, j);
        if (l.label[id] == label) return id;
    }
    throw std::invalid_argument("label not present in block");
}

VertexSet lift_by_labels(const ProductGraph& p, const StarLabeling& l, const VertexSet& base_set,
                         int label) {
    VertexSet r(p.product.vertex_count());
    for (int v : base_set) r.add(labeled_vertex(p, l, v, label));
    return r;
}

ReductionCheck check_reduction(const Graph& g, int k) {
    ReductionCheck c;
    c.base_well_covered = is_well_covered(g).verdict;
    c.product_wk = is_wk(lex_product_with_clique(g, k).product, k).verdict;
    return c;
}

bool verify_reduction(const Graph& g, int k) { return check_reduction(g, k).consistent(); }

} // namespace wklab
