#include "wklab/conjecture.hpp"

#include <stdexcept>

#include "wklab/independent.hpp"
#include "wklab/wk.hpp"

namespace wklab {

MatchingJoin matching_join(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("matching sizes must be positive");
    if (s > 2000 || t > 2000) throw std::invalid_argument("matching sizes capped at 2000");
    const int n = 2 * s + 2 * t;
    GraphBuilder b(n);
    for (int i = 0; i < s + t; ++i) b.add_edge(2 * i, 2 * i + 1);
    for (int a = 0; a < 2 * s; ++a)
        for (int bb = 2 * s; bb < n; ++bb) b.add_edge(a, bb);
    MatchingJoin mj{s, t, b.build(), VertexSet(n), VertexSet(n)};
    for (int a = 0; a < 2 * s; ++a) mj.side_a.add(a);
    for (int bb = 2 * s; bb < n; ++bb) mj.side_b.add(bb);
    return mj;
}

ConditionResult check_levit_tankus_condition(const Graph& g, ConditionVariant variant) {
    ConditionResult result;
    result.variant = variant;
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        VertexSet keep = g.closed_neighborhood(v).complement();
        if (keep.empty()) continue; // no vertices left, no S to range over
        InducedSubgraph del = induced_subgraph(g, keep);
        for (const VertexSet& s_local : maximal_independent_sets(del.graph)) {
            VertexSet s(n);
            for (int u : s_local) s.add(del.new_to_old[u]);
            VertexSet residual = g.neighbors(v);
            if (variant == ConditionVariant::closed) {
                for (int u : s) residual -= g.neighbors(u);
            } else {
                residual -= s;
            }
            int size = alpha(induced_subgraph(g, residual).graph);
            bool ok = (size == 1);
            result.trace.push_back({v, s, residual, size, ok});
            if (!ok) result.holds = false;
        }
    }
    return result;
}

RefutationReport refute_conjecture(int s, int t) {
    if (s >= t) throw std::invalid_argument("the family needs s < t");
    MatchingJoin mj = matching_join(s, t);

    RefutationReport r;
    r.s = s;
    r.t = t;
    r.variant = ConditionVariant::closed;
    r.condition_holds = check_levit_tankus_condition(mj.graph, ConditionVariant::closed).holds;

    WkReport wc = is_well_covered(mj.graph);
    r.well_covered = wc.verdict;
    r.w2 = is_wk(mj.graph, 2).verdict;

    // Smallest and largest maximal independent sets, canonical-first.
    const int n = mj.graph.vertex_count();
    VertexSet smallest(n), largest(n);
    bool have = false;
    for_each_maximal_independent_set(mj.graph, [&](const VertexSet& m) {
        if (!have) {
            smallest = largest = m;
            have = true;
            return true;
        }
        if (m.count() < smallest.count() ||
            (m.count() == smallest.count() && m < smallest))
            smallest = m;
        if (m.count() > largest.count() || (m.count() == largest.count() && m < largest))
            largest = m;
        return true;
    });
    r.witnesses = {smallest, largest};
    return r;
}

} // namespace wklab
