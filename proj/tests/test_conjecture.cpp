#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "wklab/conjecture.hpp"
#include "wklab/enumerate.hpp"
#include "wklab/independent.hpp"
#include "wklab/wk.hpp"

using namespace wklab;

namespace {

VertexSet vs(int n, std::initializer_list<int> members) { return VertexSet(n, members); }

} // namespace

TEST_CASE("matching join structure") {
    auto k4 = matching_join(1, 1);
    CHECK(k4.graph == Graph::complete(4));

    auto g12 = matching_join(1, 2);
    CHECK(g12.graph.vertex_count() == 6);
    CHECK(g12.graph.edge_count() == 11); // s + t + 4st
    for (int v : g12.side_a) CHECK(g12.graph.degree(v) == 1 + 2 * g12.t);
    for (int v : g12.side_b) CHECK(g12.graph.degree(v) == 1 + 2 * g12.s);

    auto g23 = matching_join(2, 3);
    CHECK(g23.graph.vertex_count() == 10);
    CHECK(g23.graph.edge_count() == 29);

    CHECK_THROWS_AS(matching_join(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(matching_join(1, 0), std::invalid_argument);
}

TEST_CASE("sibling is a fixed-point-free involution adjacent to its vertex") {
    for (auto [s, t] : {std::pair{1, 2}, {2, 3}, {3, 1}}) {
        auto mj = matching_join(s, t);
        for (int v = 0; v < mj.graph.vertex_count(); ++v) {
            CHECK(mj.sibling(v) != v);
            CHECK(mj.sibling(mj.sibling(v)) == v);
            CHECK(mj.graph.adjacent(v, mj.sibling(v)));
            // the sibling is the only neighbor on the same side
            VertexSet side = mj.side_a.contains(v) ? mj.side_a : mj.side_b;
            CHECK((mj.graph.neighbors(v) & side) == vs(mj.graph.vertex_count(), {mj.sibling(v)}));
        }
    }
}

TEST_CASE("maximal independent sets of the join pick one endpoint per edge of one side") {
    for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t) {
            auto mj = matching_join(s, t);
            auto sets = maximal_independent_sets(mj.graph);
            CHECK(sets.size() == (size_t{1} << s) + (size_t{1} << t));
            for (const auto& m : sets) {
                bool in_a = m.is_subset_of(mj.side_a);
                bool in_b = m.is_subset_of(mj.side_b);
                CHECK(in_a != in_b);
                CHECK(m.count() == (in_a ? s : t));
                for (int v : m) CHECK_FALSE(m.contains(mj.sibling(v)));
            }
        }
}

TEST_CASE("condition check on C4 fails with an empty residual") {
    auto r = check_levit_tankus_condition(Graph::cycle(4), ConditionVariant::closed);
    CHECK_FALSE(r.holds);
    REQUIRE(!r.trace.empty());
    const auto& first = r.trace.front();
    CHECK(first.v == 0);
    CHECK(first.s == vs(4, {2}));
    CHECK(first.residual == VertexSet(4));
    CHECK(first.max_independent_size == 0);
    CHECK_FALSE(first.ok);

    CHECK_FALSE(check_levit_tankus_condition(Graph::cycle(4), ConditionVariant::open).holds);
}

TEST_CASE("condition holds on the matching joins, residual is exactly the sibling") {
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t) {
            auto mj = matching_join(s, t);
            auto r = check_levit_tankus_condition(mj.graph, ConditionVariant::closed);
            CHECK(r.holds);
            for (const auto& e : r.trace)
                CHECK(e.residual == vs(mj.graph.vertex_count(), {mj.sibling(e.v)}));
        }
}

TEST_CASE("open and closed variants differ on G(2,3)") {
    auto mj = matching_join(2, 3);
    CHECK(check_levit_tankus_condition(mj.graph, ConditionVariant::closed).holds);
    CHECK_FALSE(check_levit_tankus_condition(mj.graph, ConditionVariant::open).holds);
    // but both hold on G(1,2): side-A vertices dominate the graph there
    auto mj12 = matching_join(1, 2);
    CHECK(check_levit_tankus_condition(mj12.graph, ConditionVariant::closed).holds);
    CHECK(check_levit_tankus_condition(mj12.graph, ConditionVariant::open).holds);
}

TEST_CASE("condition check agrees with the subset-scan oracle") {
    for (int n = 0; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g, uint64_t) {
            oracle::Small s(g);
            CHECK(check_levit_tankus_condition(g, ConditionVariant::closed).holds ==
                  oracle::condition(s, true));
            CHECK(check_levit_tankus_condition(g, ConditionVariant::open).holds ==
                  oracle::condition(s, false));
        });
    std::mt19937_64 rng(1912);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = random_graph(6 + rep % 2, 0.5, rng);
        oracle::Small s(g);
        CHECK(check_levit_tankus_condition(g, ConditionVariant::closed).holds ==
              oracle::condition(s, true));
        CHECK(check_levit_tankus_condition(g, ConditionVariant::open).holds ==
              oracle::condition(s, false));
    }
}

TEST_CASE("refutation of the conjecture on small matching joins") {
    auto r = refute_conjecture(1, 2);
    CHECK(r.confirmed());
    CHECK(r.condition_holds);
    CHECK_FALSE(r.well_covered);
    CHECK_FALSE(r.w2);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0] == vs(6, {0}));
    CHECK(r.witnesses[1] == vs(6, {2, 4}));

    CHECK(refute_conjecture(1, 3).confirmed());
    CHECK(refute_conjecture(3, 4).confirmed());

    CHECK_THROWS_AS(refute_conjecture(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(refute_conjecture(3, 2), std::invalid_argument);
}

TEST_CASE("witness sizes in a refutation report are s and t") {
    for (auto [s, t] : {std::pair{1, 2}, {1, 4}, {2, 3}, {2, 4}}) {
        auto r = refute_conjecture(s, t);
        CHECK(r.confirmed());
        auto mj = matching_join(s, t);
        CHECK(r.witnesses[0].count() == s);
        CHECK(r.witnesses[1].count() == t);
        CHECK(is_maximal_independent(mj.graph, r.witnesses[0]));
        CHECK(is_maximal_independent(mj.graph, r.witnesses[1]));
    }
}
