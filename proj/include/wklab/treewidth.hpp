#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wklab/graph.hpp"

namespace wklab {

// Tree of bags covering every edge, with connected per-vertex traces.
struct TreeDecomposition {
    int n = 0;                             // order of the decomposed graph
    std::vector<VertexSet> bags;           // bag per node, over [0, n)
    std::vector<std::pair<int, int>> edges; // tree edges between node ids

    int node_count() const { return static_cast<int>(bags.size()); }

    // max bag size - 1; -1 when every bag is empty.
    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, b.count() - 1);
        return w;
    }
};

struct ValidationResult {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks tree shape, edge coverage, vertex coverage and trace connectivity;
// lists every violation found.
ValidationResult validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Heuristic decomposition from an elimination order: bag of each eliminated
// vertex is its closed neighborhood in the partially eliminated graph.
TreeDecomposition elimination_order_decomposition(const Graph& g, const std::vector<int>& order);

// Min-fill elimination heuristic (width is heuristic, not optimal). The
// result is validated before being returned.
TreeDecomposition min_fill_decomposition(const Graph& g);

// Min-degree elimination heuristic.
TreeDecomposition min_degree_decomposition(const Graph& g);

// One bag holding every vertex; always valid, width n - 1.
TreeDecomposition single_bag_decomposition(const Graph& g);

enum class NiceNodeKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceNodeKind kind = NiceNodeKind::leaf;
    int vertex = -1; // introduce/forget
    int child = -1;
    int child2 = -1; // join only
    VertexSet bag;
};

// Normal form: empty leaf bags, one-vertex introduce/forget steps, joins
// with equal child bags, empty root bag. Children precede parents in the
// node array.
struct NiceTreeDecomposition {
    int n = 0;
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const {
        int w = -1;
        for (const auto& nd : nodes) w = std::max(w, nd.bag.count() - 1);
        return w;
    }

    TreeDecomposition as_tree_decomposition() const;
};

// Converts a decomposition of equal width into nice form, rooted at node 0.
// Throws std::invalid_argument when the input decomposition is invalid.
NiceTreeDecomposition to_nice(const Graph& g, const TreeDecomposition& td);

struct DpStats {
    size_t max_table_entries = 0; // largest per-node table encountered
};

// Independence number via the 2^bag subset DP. Throws std::invalid_argument
// when the decomposition does not fit the graph.
int dp_alpha(const Graph& g, const NiceTreeDecomposition& ntd, DpStats* stats = nullptr);

// Independent domination number via the 3^bag coloring DP (in /
// out-dominated / out-undominated; undominated vertices cannot be
// forgotten).
int dp_beta(const Graph& g, const NiceTreeDecomposition& ntd, DpStats* stats = nullptr);

// alpha == beta over one nice decomposition; computes a min-fill
// decomposition when none is supplied.
bool well_covered_fpt(const Graph& g, const std::optional<TreeDecomposition>& td = std::nullopt);

// PACE-style text format, 1-based: header "s td <#nodes> <max bag size>
// <n>", bag lines "b <node> <v...>", then tree edges "<a> <b>".
TreeDecomposition parse_tree_decomposition(std::string_view text);
std::string emit_tree_decomposition(const TreeDecomposition& td);

} // namespace wklab
