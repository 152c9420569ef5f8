#pragma once

#include <functional>
#include <vector>

#include "wklab/graph.hpp"

namespace wklab {

// True iff no two members of s are adjacent in g.
// Throws std::invalid_argument if s is over a different universe than g.
bool is_independent(const Graph& g, const VertexSet& s);

// True iff s is independent and every vertex outside s has a neighbor in s.
bool is_maximal_independent(const Graph& g, const VertexSet& s);

// Visits every maximal independent set exactly once (pivoting search over
// the complement; order unspecified). Return false from the callback to
// stop early. Returns false iff stopped early.
bool for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& fn);

// All maximal independent sets, ascending by bit pattern (vertex 0 = LSB).
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Independence number. 0 for the empty graph.
int alpha(const Graph& g);

// Size of a smallest maximal independent set (independent domination
// number). 0 for the empty graph.
int beta(const Graph& g);

// All maximum independent sets, ascending by bit pattern.
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for dropped vertices; monotone on kept
    std::vector<int> new_to_old;
};

// Subgraph induced by `keep`, with ids renumbered in ascending old order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

} // namespace wklab
