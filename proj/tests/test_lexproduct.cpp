#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "wklab/enumerate.hpp"
#include "wklab/independent.hpp"
#include "wklab/lexproduct.hpp"
#include "wklab/wk.hpp"

using namespace wklab;

namespace {

VertexSet vs(int n, std::initializer_list<int> members) { return VertexSet(n, members); }

} // namespace

TEST_CASE("product structure on named graphs") {
    CHECK(lex_product_with_clique(Graph::complete(2), 2).product == Graph::complete(4));

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = random_graph(1 + rep % 6, 0.5, rng);
        CHECK(lex_product_with_clique(g, 1).product == g); // identity case
    }

    auto p = lex_product_with_clique(Graph::cycle(4), 2);
    CHECK(p.product.vertex_count() == 8);
    CHECK(p.product.edge_count() == 20);
    // block cliques and cross edges per the adjacency rule
    CHECK(p.product.adjacent(p.encode(0, 0), p.encode(0, 1)));
    CHECK(p.product.adjacent(p.encode(0, 1), p.encode(1, 0)));
    CHECK_FALSE(p.product.adjacent(p.encode(0, 1), p.encode(2, 0))); // 0-2 not an edge of C4

    CHECK_THROWS_AS(lex_product_with_clique(Graph::cycle(4), 0), std::invalid_argument);
}

TEST_CASE("edge count formula holds on random graphs") {
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(rng() % 7);
        int k = 1 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.5, rng);
        auto p = lex_product_with_clique(g, k);
        CHECK(p.product.edge_count() == k * k * g.edge_count() + n * k * (k - 1) / 2);
        // every (u,i)-(x,j) adjacency matches the definition
        for (int a = 0; a < p.product.vertex_count(); ++a)
            for (int b = a + 1; b < p.product.vertex_count(); ++b) {
                bool expect = g.adjacent(p.base_of(a), p.base_of(b)) ||
                              (p.base_of(a) == p.base_of(b) && p.label_of(a) != p.label_of(b));
                CHECK(p.product.adjacent(a, b) == expect);
            }
    }
}

TEST_CASE("projection basics") {
    auto p = lex_product_with_clique(Graph::cycle(4), 2);
    CHECK(project(p, VertexSet(8)) == VertexSet(4));
    // {(0,1), (2,0)} = ids {1, 4}
    CHECK(project(p, vs(8, {1, 4})) == vs(4, {0, 2}));
    CHECK_THROWS_AS(project(p, VertexSet(4)), std::invalid_argument);
}

TEST_CASE("independent sets of the product project losslessly") {
    // lossless-projection property over every independent set of H
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 1 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.5, rng);
        auto p = lex_product_with_clique(g, k);
        oracle::Small h(p.product);
        oracle::for_each_subset(h.full(), [&](uint32_t mask) {
            if (!h.independent(mask)) return;
            VertexSet a(p.product.vertex_count());
            for (int v = 0; v < p.product.vertex_count(); ++v)
                if ((mask >> v) & 1) a.add(v);
            VertexSet proj = project(p, a);
            CHECK(proj.count() == a.count());
            CHECK(is_independent(g, proj));
        });
    }
}

TEST_CASE("lift produces independent sets of the same size") {
    Graph c4 = Graph::cycle(4);
    auto p = lex_product_with_clique(c4, 2);
    VertexSet lifted = lift(p, vs(4, {0, 2}), 0);
    CHECK(lifted == vs(8, {0, 4}));
    CHECK(is_independent(p.product, lifted));
    CHECK(lift(p, VertexSet(4), 1) == VertexSet(8));
    CHECK_THROWS_AS(lift(p, vs(4, {0, 1}), 0), std::invalid_argument); // not independent
    CHECK_THROWS_AS(lift(p, vs(4, {0}), 2), std::invalid_argument);    // label range
}

TEST_CASE("lifting a maximum set stays maximum (alpha is preserved)") {
    std::mt19937_64 rng(44);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 1 + static_cast<int>(rng() % 6);
        int k = 1 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.5, rng);
        auto p = lex_product_with_clique(g, k);
        CHECK(alpha(g) == alpha(p.product));
        VertexSet mx = maximum_independent_sets(g).front();
        VertexSet lifted = lift(p, mx, k - 1);
        CHECK(lifted.count() == alpha(p.product));
        CHECK(is_independent(p.product, lifted));
    }
}

TEST_CASE("alpha is preserved on every graph up to six vertices") {
    long long mismatches = 0;
    for (int n = 0; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
            for (int k : {2, 3})
                if (alpha(g) != alpha(lex_product_with_clique(g, k).product)) ++mismatches;
        });
    CHECK(mismatches == 0);
}

TEST_CASE("star labeling honors the forced block constraints") {
    auto p = lex_product_with_clique(Graph::cycle(4), 2);

    // all-empty family: every block labeled in ascending order
    auto plain = star_labeling(p, IndependentFamily({VertexSet(8), VertexSet(8)}));
    for (int v = 0; v < 4; ++v) {
        CHECK(plain.label[p.encode(v, 0)] == 1);
        CHECK(plain.label[p.encode(v, 1)] == 2);
    }

    // family = ({(0,1)}, {(0,0)}) pins block 0: (0,1) -> 1, (0,0) -> 2
    auto pinned = star_labeling(p, IndependentFamily({vs(8, {1}), vs(8, {0})}));
    CHECK(pinned.label[1] == 1);
    CHECK(pinned.label[0] == 2);

    CHECK_THROWS_AS(star_labeling(p, IndependentFamily({vs(8, {0, 1})})),
                    std::invalid_argument); // not independent in H
}

TEST_CASE("star labeling is a bijection per block and satisfies the constraints") {
    std::mt19937_64 rng(55);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(rng() % 5);
        int k = 2 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 0.5, rng);
        auto p = lex_product_with_clique(g, k);

        // random disjoint independent family in H via disjoint base sets
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) {
            uint64_t r = rng() % 3;
            if (r == 0 && is_independent(g, a) && !g.neighbors(v).intersects(a)) a.add(v);
            if (r == 1 && !g.neighbors(v).intersects(b)) b.add(v);
        }
        IndependentFamily fam({lift(p, a, rng() % k), lift(p, b, rng() % k)});
        REQUIRE(!fam.validate(p.product).has_value());

        auto l = star_labeling(p, fam);
        for (int v = 0; v < n; ++v) {
            std::vector<bool> seen(k + 1, false);
            for (int j = 0; j < k; ++j) {
                int lab = l.label[p.encode(v, j)];
                CHECK(lab >= 1);
                CHECK(lab <= k);
                CHECK_FALSE(seen[lab]);
                seen[lab] = true;
            }
        }
        for (int i = 0; i < fam.k(); ++i)
            for (int id : fam.set(i)) CHECK(l.label[id] == i + 1);
    }
}

TEST_CASE("labeled lifts of maximum extensions are disjoint maximum sets") {
    // the construction step behind the product direction of the reduction
    std::mt19937_64 rng(66);
    int tested = 0;
    while (tested < 25) {
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 2 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 0.4, rng);
        if (!is_well_covered(g).verdict) continue;
        ++tested;
        auto p = lex_product_with_clique(g, k);

        // disjoint independent family in H: lift disjoint base sets
        VertexSet a(n), b(n);
        auto maxima = maximum_independent_sets(g);
        for (int v : maxima.front()) ((v & 1) ? a : b).add(v);
        IndependentFamily fam({lift(p, a, 0), lift(p, b, k - 1)});
        auto l = star_labeling(p, fam);

        // independently extend each projection to a maximum set of g
        std::vector<VertexSet> lifted;
        for (int i = 0; i < fam.k(); ++i) {
            VertexSet proj = project(p, fam.set(i));
            auto ext = find_disjoint_maximum_extensions(g, IndependentFamily({proj}));
            REQUIRE(ext.has_value());
            lifted.push_back(lift_by_labels(p, l, ext->set(0), i + 1));
        }
        for (size_t i = 0; i < lifted.size(); ++i) {
            CHECK(lifted[i].count() == alpha(p.product));
            CHECK(is_independent(p.product, lifted[i]));
            CHECK(fam.set(static_cast<int>(i)).is_subset_of(lifted[i]));
            for (size_t j = i + 1; j < lifted.size(); ++j)
                CHECK(lifted[i].is_disjoint(lifted[j]));
        }
    }
}

TEST_CASE("reduction harness on named graphs") {
    auto c4 = check_reduction(Graph::cycle(4), 2);
    CHECK(c4.base_well_covered);
    CHECK(c4.product_wk);
    CHECK(c4.consistent());

    auto p3 = check_reduction(Graph::path(3), 2);
    CHECK_FALSE(p3.base_well_covered);
    CHECK_FALSE(p3.product_wk);
    CHECK(p3.consistent());

    auto k1 = check_reduction(Graph::empty(1), 3);
    CHECK(k1.base_well_covered);
    CHECK(k1.product_wk);

    CHECK(verify_reduction(Graph::cycle(5), 2));
}

TEST_CASE("reduction harness over all 4-vertex graphs") {
    for (int n = 0; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
            CHECK(verify_reduction(g, 2));
        });
}
