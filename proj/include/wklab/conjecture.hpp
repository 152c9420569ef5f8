#pragma once

#include <vector>

#include "wklab/graph.hpp"

namespace wklab {

// Join of an s-matching (side A, vertices 0..2s-1) and a t-matching
// (side B, vertices 2s..2s+2t-1): matching edges (2i, 2i+1) within each
// side, plus every edge between the sides. A matched vertex's partner is
// its sibling (id xor 1 under this layout).
struct MatchingJoin {
    int s = 0;
    int t = 0;
    Graph graph;
    VertexSet side_a;
    VertexSet side_b;

    int sibling(int v) const { return v ^ 1; }
};

// Throws std::invalid_argument unless s, t >= 1.
MatchingJoin matching_join(int s, int t);

// The conjecture's condition exists in two printed forms; `closed` removes
// N(S) from N(v), `open` removes S itself.
enum class ConditionVariant { closed, open };

struct ConditionTraceEntry {
    int v;
    VertexSet s;        // maximal independent set of G - N[v], original ids
    VertexSet residual; // N(v) \ N(S), or N(v) \ S for the open variant
    int max_independent_size;
    bool ok; // residual's largest independent subset has size exactly 1
};

struct ConditionResult {
    bool holds = true;
    ConditionVariant variant = ConditionVariant::closed;
    std::vector<ConditionTraceEntry> trace;
};

// For every vertex v and every maximal independent set S of G - N[v], the
// largest independent subset of the residual must have size exactly 1.
// Vertices whose closed neighborhood covers the whole graph contribute no
// (v, S) pairs: the deleted graph has no vertices, hence no maximal
// independent set to range over. Trace order is (v ascending, S ascending
// by bit pattern).
ConditionResult check_levit_tankus_condition(const Graph& g, ConditionVariant variant);

struct RefutationReport {
    int s = 0;
    int t = 0;
    ConditionVariant variant = ConditionVariant::closed;
    bool condition_holds = false;
    bool well_covered = true;
    bool w2 = true;
    // A smallest and a largest maximal independent set (sizes s and t).
    std::vector<VertexSet> witnesses;

    bool confirmed() const { return condition_holds && !well_covered && !w2; }
};

// Builds G(s,t) for s < t and verifies the three legs of the refutation:
// the closed-variant condition holds, yet the graph is not well-covered
// and therefore not W2. Throws std::invalid_argument unless s < t.
RefutationReport refute_conjecture(int s, int t);

} // namespace wklab
