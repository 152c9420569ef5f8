#include "wklab/treewidth.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "wklab/graph_io.hpp"

namespace wklab {

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
    std::vector<std::vector<int>> adj(td.node_count());
    for (auto [a, b] : td.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

} // namespace

ValidationResult validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    ValidationResult r;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.violations.push_back(std::move(msg));
    };

    if (td.n != g.vertex_count()) {
        fail("decomposition is for a graph of different order");
        return r;
    }
    const int nodes = td.node_count();
    if (nodes == 0) {
        fail("decomposition has no nodes");
        return r;
    }
    for (const auto& b : td.bags)
        if (b.universe() != td.n) {
            fail("bag universe mismatch");
            return r;
        }
    for (auto [a, b] : td.edges)
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) {
            fail("tree edge endpoints out of range");
            return r;
        }

    // Tree shape: connected with exactly nodes-1 edges.
    if (static_cast<int>(td.edges.size()) != nodes - 1)
        fail("tree has " + std::to_string(td.edges.size()) + " edges, expected " +
             std::to_string(nodes - 1));
    auto adj = tree_adjacency(td);
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int u : adj[t])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != nodes) fail("tree is not connected");

    // Every vertex in some bag, with a connected trace.
    for (int v = 0; v < td.n; ++v) {
        std::vector<int> holders;
        for (int t = 0; t < nodes; ++t)
            if (td.bags[t].contains(v)) holders.push_back(t);
        if (holders.empty()) {
            fail("vertex " + std::to_string(v) + " appears in no bag");
            continue;
        }
        if (reached != nodes) continue; // connectivity of traces needs a tree
        std::vector<char> vseen(nodes, 0);
        std::vector<int> vstack = {holders[0]};
        vseen[holders[0]] = 1;
        int got = 1;
        while (!vstack.empty()) {
            int t = vstack.back();
            vstack.pop_back();
            for (int u : adj[t])
                if (!vseen[u] && td.bags[u].contains(v)) {
                    vseen[u] = 1;
                    ++got;
                    vstack.push_back(u);
                }
        }
        if (got != static_cast<int>(holders.size()))
            fail("trace of vertex " + std::to_string(v) + " is disconnected");
    }

    // Every edge inside some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int t = 0; t < nodes && !covered; ++t)
            covered = td.bags[t].contains(u) && td.bags[t].contains(v);
        if (!covered)
            fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag");
    }
    return r;
}

TreeDecomposition elimination_order_decomposition(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("elimination order must list every vertex once");
    TreeDecomposition td;
    td.n = n;
    if (n == 0) {
        td.bags.push_back(VertexSet(0));
        return td;
    }

    std::vector<VertexSet> work;
    work.reserve(n);
    for (int v = 0; v < n; ++v) work.push_back(g.neighbors(v));
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || position[order[i]] != -1)
            throw std::invalid_argument("elimination order must be a permutation of the vertices");
        position[order[i]] = i;
    }

    VertexSet alive = VertexSet::full(n);
    td.bags.resize(n, VertexSet(n));
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        VertexSet nbrs = work[v] & alive;
        VertexSet bag = nbrs;
        bag.add(v);
        td.bags[i] = bag;
        // Eliminate: clique the live neighborhood.
        for (int a : nbrs)
            for (int b : nbrs)
                if (a < b && !work[a].contains(b)) {
                    work[a].add(b);
                    work[b].add(a);
                }
        alive.remove(v);
        // Attach below the node of the earliest-eliminated bag member,
        // which keeps vertex traces connected.
        if (!nbrs.empty()) {
            int parent_pos = n;
            for (int u : nbrs) parent_pos = std::min(parent_pos, position[u]);
            td.edges.emplace_back(i, parent_pos);
        } else if (i + 1 < n) {
            td.edges.emplace_back(i, i + 1); // isolated bag, attach anywhere
        }
    }
    return td;
}

namespace {

TreeDecomposition greedy_elimination(const Graph& g, bool min_fill) {
    const int n = g.vertex_count();
    std::vector<VertexSet> work;
    work.reserve(n);
    for (int v = 0; v < n; ++v) work.push_back(g.neighbors(v));
    VertexSet alive = VertexSet::full(n);

    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_score = std::numeric_limits<long long>::max();
        for (int v : alive) {
            VertexSet nbrs = work[v] & alive;
            long long score;
            if (min_fill) {
                long long missing = 0;
                for (int a : nbrs) missing += (nbrs - work[a]).count() - 1; // a itself
                score = missing / 2;
            } else {
                score = nbrs.count();
            }
            if (score < best_score) {
                best_score = score;
                best = v;
            }
        }
        order.push_back(best);
        VertexSet nbrs = work[best] & alive;
        for (int a : nbrs)
            for (int b : nbrs)
                if (a < b && !work[a].contains(b)) {
                    work[a].add(b);
                    work[b].add(a);
                }
        alive.remove(best);
    }
    return elimination_order_decomposition(g, order);
}

} // namespace

TreeDecomposition min_fill_decomposition(const Graph& g) {
    TreeDecomposition td = greedy_elimination(g, true);
    auto check = validate_decomposition(g, td);
    if (!check.valid) throw std::logic_error("min-fill produced an invalid decomposition");
    return td;
}

TreeDecomposition min_degree_decomposition(const Graph& g) {
    TreeDecomposition td = greedy_elimination(g, false);
    auto check = validate_decomposition(g, td);
    if (!check.valid) throw std::logic_error("min-degree produced an invalid decomposition");
    return td;
}

TreeDecomposition single_bag_decomposition(const Graph& g) {
    TreeDecomposition td;
    td.n = g.vertex_count();
    td.bags.push_back(VertexSet::full(td.n));
    return td;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    td.n = n;
    td.bags.reserve(nodes.size());
    for (const auto& nd : nodes) td.bags.push_back(nd.bag);
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].child >= 0) td.edges.emplace_back(nodes[i].child, static_cast<int>(i));
        if (nodes[i].child2 >= 0) td.edges.emplace_back(nodes[i].child2, static_cast<int>(i));
    }
    return td;
}

namespace {

struct NiceBuilder {
    int n;
    std::vector<NiceNode> nodes;

    int add(NiceNodeKind kind, int vertex, int child, int child2, VertexSet bag) {
        nodes.push_back({kind, vertex, child, child2, std::move(bag)});
        return static_cast<int>(nodes.size()) - 1;
    }

    // Empty leaf, then introduce the bag vertices in ascending order.
    int grow_from_leaf(const VertexSet& bag) {
        int cur = add(NiceNodeKind::leaf, -1, -1, -1, VertexSet(n));
        VertexSet acc(n);
        for (int v : bag) {
            acc.add(v);
            cur = add(NiceNodeKind::introduce, v, cur, -1, acc);
        }
        return cur;
    }

    // Forget from/introduce to morph the top bag into `target`.
    int morph(int cur, const VertexSet& target) {
        VertexSet acc = nodes[cur].bag;
        for (int v : acc - target) {
            acc.remove(v);
            cur = add(NiceNodeKind::forget, v, cur, -1, acc);
        }
        for (int v : target - nodes[cur].bag) {
            acc.add(v);
            cur = add(NiceNodeKind::introduce, v, cur, -1, acc);
        }
        return cur;
    }
};

} // namespace

NiceTreeDecomposition to_nice(const Graph& g, const TreeDecomposition& td) {
    auto check = validate_decomposition(g, td);
    if (!check.valid) {
        std::string msg = "invalid tree decomposition:";
        for (const auto& v : check.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }

    auto adj = tree_adjacency(td);
    NiceBuilder b{td.n, {}};

    // Post-order from the root (node 0, per convention); explicit stack to
    // keep deep paths safe.
    std::vector<int> parent(td.node_count(), -2);
    std::vector<int> order;
    order.reserve(td.node_count());
    std::vector<int> stack = {0};
    parent[0] = -1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        for (int u : adj[t])
            if (parent[u] == -2) {
                parent[u] = t;
                stack.push_back(u);
            }
    }
    std::reverse(order.begin(), order.end()); // children before parents

    std::vector<int> top(td.node_count(), -1); // nice index with bag == bag(t)
    for (int t : order) {
        std::vector<int> kids;
        for (int u : adj[t])
            if (u != parent[t]) kids.push_back(u);
        std::sort(kids.begin(), kids.end());
        if (kids.empty()) {
            top[t] = b.grow_from_leaf(td.bags[t]);
            continue;
        }
        std::vector<int> branches;
        branches.reserve(kids.size());
        for (int u : kids) branches.push_back(b.morph(top[u], td.bags[t]));
        int cur = branches[0];
        for (size_t i = 1; i < branches.size(); ++i)
            cur = b.add(NiceNodeKind::join, -1, cur, branches[i], td.bags[t]);
        top[t] = cur;
    }

    int root = b.morph(top[0], VertexSet(td.n));
    NiceTreeDecomposition ntd;
    ntd.n = td.n;
    ntd.nodes = std::move(b.nodes);
    ntd.root = root;
    return ntd;
}

namespace {

constexpr int32_t kNoValue = std::numeric_limits<int32_t>::min() / 4;
constexpr int32_t kInf = std::numeric_limits<int32_t>::max() / 4;

void require_fits(const Graph& g, const NiceTreeDecomposition& ntd) {
    if (ntd.n != g.vertex_count())
        throw std::invalid_argument("decomposition is for a graph of different order");
    if (ntd.nodes.empty() || ntd.root < 0)
        throw std::invalid_argument("empty nice decomposition");
    auto check = validate_decomposition(g, ntd.as_tree_decomposition());
    if (!check.valid) {
        std::string msg = "invalid nice decomposition:";
        for (const auto& v : check.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    if (!ntd.nodes[ntd.root].bag.empty())
        throw std::invalid_argument("nice decomposition root bag must be empty");
    for (const auto& nd : ntd.nodes) {
        switch (nd.kind) {
        case NiceNodeKind::leaf:
            if (!nd.bag.empty()) throw std::invalid_argument("leaf bag must be empty");
            break;
        case NiceNodeKind::introduce:
        case NiceNodeKind::forget: {
            const auto& cb = ntd.nodes[nd.child].bag;
            bool intro = nd.kind == NiceNodeKind::introduce;
            VertexSet expect = cb;
            if (intro)
                expect.add(nd.vertex);
            else
                expect.remove(nd.vertex);
            if (!(nd.bag == expect) || cb.contains(nd.vertex) != !intro)
                throw std::invalid_argument("introduce/forget must change the bag by one vertex");
            break;
        }
        case NiceNodeKind::join:
            if (!(ntd.nodes[nd.child].bag == nd.bag) || !(ntd.nodes[nd.child2].bag == nd.bag))
                throw std::invalid_argument("join children must share the parent bag");
            break;
        }
    }
}

struct BagContext {
    std::vector<int> verts;          // sorted ascending
    std::vector<uint32_t> local_adj; // within-bag adjacency per position

    BagContext(const Graph& g, const VertexSet& bag) : verts(bag.to_vector()) {
        local_adj.assign(verts.size(), 0);
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = 0; j < verts.size(); ++j)
                if (i != j && g.adjacent(verts[i], verts[j])) local_adj[i] |= uint32_t{1} << j;
    }

    int position(int v) const {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }

    size_t size() const { return verts.size(); }
};

// Insert a bit at `pos` (shifting higher bits up).
uint32_t insert_bit(uint32_t mask, int pos, uint32_t bit) {
    uint32_t low = mask & ((uint32_t{1} << pos) - 1);
    uint32_t high = mask >> pos;
    return low | (bit << pos) | (high << (pos + 1));
}

// Remove the bit at `pos` (shifting higher bits down).
uint32_t remove_bit(uint32_t mask, int pos) {
    uint32_t low = mask & ((uint32_t{1} << pos) - 1);
    uint32_t high = mask >> (pos + 1);
    return low | (high << pos);
}

} // namespace

int dp_alpha(const Graph& g, const NiceTreeDecomposition& ntd, DpStats* stats) {
    require_fits(g, ntd);
    if (ntd.width() + 1 > 25)
        throw std::invalid_argument("decomposition width too large for the 2^w subset tables");
    const int count = static_cast<int>(ntd.nodes.size());
    std::vector<std::vector<int32_t>> tables(count);
    size_t max_entries = 0;

    for (int idx = 0; idx < count; ++idx) {
        const NiceNode& nd = ntd.nodes[idx];
        BagContext bag(g, nd.bag);
        std::vector<int32_t>& table = tables[idx];
        table.assign(size_t{1} << bag.size(), kNoValue);
        max_entries = std::max(max_entries, table.size());

        switch (nd.kind) {
        case NiceNodeKind::leaf:
            table[0] = 0;
            break;
        case NiceNodeKind::introduce: {
            const auto& child = tables[nd.child];
            const int pos = bag.position(nd.vertex);
            const uint32_t vadj = bag.local_adj[pos];
            for (uint32_t cq = 0; cq < child.size(); ++cq) {
                if (child[cq] == kNoValue) continue;
                uint32_t without = insert_bit(cq, pos, 0);
                table[without] = std::max(table[without], child[cq]);
                uint32_t with = insert_bit(cq, pos, 1);
                if ((with & vadj) == 0) table[with] = std::max(table[with], child[cq] + 1);
            }
            tables[nd.child].clear();
            break;
        }
        case NiceNodeKind::forget: {
            const auto& child = tables[nd.child];
            BagContext cbag(g, ntd.nodes[nd.child].bag);
            const int pos = cbag.position(nd.vertex);
            for (uint32_t cq = 0; cq < child.size(); ++cq) {
                if (child[cq] == kNoValue) continue;
                uint32_t q = remove_bit(cq, pos);
                table[q] = std::max(table[q], child[cq]);
            }
            tables[nd.child].clear();
            break;
        }
        case NiceNodeKind::join: {
            const auto& left = tables[nd.child];
            const auto& right = tables[nd.child2];
            for (uint32_t q = 0; q < table.size(); ++q) {
                if (left[q] == kNoValue || right[q] == kNoValue) continue;
                table[q] = left[q] + right[q] - std::popcount(q);
            }
            tables[nd.child].clear();
            tables[nd.child2].clear();
            break;
        }
        }
    }
    if (stats) stats->max_table_entries = std::max(stats->max_table_entries, max_entries);
    int32_t answer = tables[ntd.root][0];
    if (answer == kNoValue) throw std::logic_error("alpha DP ended without a value");
    return answer;
}

namespace {

// dp_beta digit values per bag vertex.
enum : uint32_t { kIn = 0, kOutDom = 1, kOutUndom = 2 };

uint32_t digit(uint32_t state, int pos) {
    // covers bag positions 0..15; dp_beta guards the width accordingly
    static const uint32_t pow3[16] = {1,      3,       9,      27,      81,     243,
                                      729,    2187,    6561,   19683,   59049,  177147,
                                      531441, 1594323, 4782969, 14348907};
    return (state / pow3[pos]) % 3;
}

uint32_t pow3_of(int e) {
    uint32_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

uint32_t insert_digit(uint32_t state, int pos, uint32_t d) {
    uint32_t p = pow3_of(pos);
    uint32_t low = state % p;
    uint32_t high = state / p;
    return low + p * (d + 3 * high);
}

uint32_t remove_digit(uint32_t state, int pos) {
    uint32_t p = pow3_of(pos);
    uint32_t low = state % p;
    uint32_t high = state / (p * 3);
    return low + p * high;
}

} // namespace

int dp_beta(const Graph& g, const NiceTreeDecomposition& ntd, DpStats* stats) {
    require_fits(g, ntd);
    if (ntd.width() + 1 > 16)
        throw std::invalid_argument("decomposition width too large for the 3^w coloring tables");
    const int count = static_cast<int>(ntd.nodes.size());
    std::vector<std::vector<int32_t>> tables(count);
    size_t max_entries = 0;

    for (int idx = 0; idx < count; ++idx) {
        const NiceNode& nd = ntd.nodes[idx];
        BagContext bag(g, nd.bag);
        std::vector<int32_t>& table = tables[idx];
        table.assign(pow3_of(static_cast<int>(bag.size())), kInf);
        max_entries = std::max(max_entries, table.size());

        switch (nd.kind) {
        case NiceNodeKind::leaf:
            table[0] = 0;
            break;
        case NiceNodeKind::introduce: {
            const auto& child = tables[nd.child];
            BagContext cbag(g, ntd.nodes[nd.child].bag);
            const int pos = bag.position(nd.vertex);
            // Child positions of the new vertex's bag neighbors.
            std::vector<int> nbr_child_pos;
            for (size_t j = 0; j < cbag.size(); ++j)
                if (g.adjacent(nd.vertex, cbag.verts[j])) nbr_child_pos.push_back((int)j);

            for (uint32_t cs = 0; cs < child.size(); ++cs) {
                if (child[cs] >= kInf) continue;
                bool any_in_neighbor = false;
                for (int j : nbr_child_pos)
                    if (digit(cs, j) == kIn) {
                        any_in_neighbor = true;
                        break;
                    }
                // v stays out: its domination state is decided by the bag,
                // since all its subtree neighbors are right here.
                {
                    uint32_t d = any_in_neighbor ? kOutDom : kOutUndom;
                    uint32_t ps = insert_digit(cs, pos, d);
                    table[ps] = std::min(table[ps], child[cs]);
                }
                // v goes in: needs an IN-free neighborhood; its out
                // neighbors become dominated.
                if (!any_in_neighbor) {
                    uint32_t upgraded = cs;
                    for (int j : nbr_child_pos)
                        if (digit(cs, j) == kOutUndom) upgraded -= pow3_of(j); // 2 -> 1
                    uint32_t ps = insert_digit(upgraded, pos, kIn);
                    table[ps] = std::min(table[ps], child[cs] + 1);
                }
            }
            tables[nd.child].clear();
            break;
        }
        case NiceNodeKind::forget: {
            const auto& child = tables[nd.child];
            BagContext cbag(g, ntd.nodes[nd.child].bag);
            const int pos = cbag.position(nd.vertex);
            for (uint32_t cs = 0; cs < child.size(); ++cs) {
                if (child[cs] >= kInf) continue;
                if (digit(cs, pos) == kOutUndom) continue; // would stay undominated forever
                uint32_t ps = remove_digit(cs, pos);
                table[ps] = std::min(table[ps], child[cs]);
            }
            tables[nd.child].clear();
            break;
        }
        case NiceNodeKind::join: {
            const auto& left = tables[nd.child];
            const auto& right = tables[nd.child2];
            const int b = static_cast<int>(bag.size());
            // Pair states agreeing on IN; an out vertex is dominated in the
            // parent iff it is dominated on either side.
            std::vector<int> out_positions;
            for (uint32_t ls = 0; ls < left.size(); ++ls) {
                if (left[ls] >= kInf) continue;
                out_positions.clear();
                int in_count = 0;
                for (int j = 0; j < b; ++j) {
                    if (digit(ls, j) == kIn)
                        ++in_count;
                    else
                        out_positions.push_back(j);
                }
                const int o = static_cast<int>(out_positions.size());
                for (uint32_t combo = 0; combo < (uint32_t{1} << o); ++combo) {
                    // combo bit set -> right side has this vertex dominated
                    uint32_t rs = ls;
                    uint32_t ps = ls;
                    for (int jj = 0; jj < o; ++jj) {
                        int j = out_positions[jj];
                        uint32_t ld = digit(ls, j);
                        uint32_t rd = (combo >> jj) & 1 ? kOutDom : kOutUndom;
                        if (rd != ld) rs += (rd - ld) * pow3_of(j);
                        uint32_t pd = (ld == kOutDom || rd == kOutDom) ? kOutDom : kOutUndom;
                        if (pd != ld) ps += (pd - ld) * pow3_of(j);
                    }
                    if (right[rs] >= kInf) continue;
                    int32_t val = left[ls] + right[rs] - in_count;
                    table[ps] = std::min(table[ps], val);
                }
            }
            tables[nd.child].clear();
            tables[nd.child2].clear();
            break;
        }
        }
    }
    if (stats) stats->max_table_entries = std::max(stats->max_table_entries, max_entries);
    int32_t answer = tables[ntd.root][0];
    if (answer >= kInf) throw std::logic_error("beta DP ended without a value");
    return answer;
}

bool well_covered_fpt(const Graph& g, const std::optional<TreeDecomposition>& td) {
    TreeDecomposition dec;
    if (td) {
        auto check = validate_decomposition(g, *td);
        if (!check.valid) {
            std::string msg = "invalid tree decomposition:";
            for (const auto& v : check.violations) msg += " " + v + ";";
            throw std::invalid_argument(msg);
        }
        dec = *td;
    } else {
        dec = min_fill_decomposition(g);
    }
    NiceTreeDecomposition ntd = to_nice(g, dec);
    return dp_alpha(g, ntd) == dp_beta(g, ntd);
}

TreeDecomposition parse_tree_decomposition(std::string_view text) {
    TreeDecomposition td;
    int nodes = -1;
    int line_no = 0;
    size_t pos = 0;
    std::vector<bool> bag_seen;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<long long> nums;
        std::string_view rest = line;
        auto next_token = [&]() -> std::string_view {
            while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
                rest.remove_prefix(1);
            size_t e = 0;
            while (e < rest.size() && rest[e] != ' ' && rest[e] != '\t') ++e;
            auto tok = rest.substr(0, e);
            rest.remove_prefix(e);
            return tok;
        };
        auto first = next_token();
        if (first.empty() || first == "c") continue;
        auto parse_rest_numbers = [&]() {
            for (auto tok = next_token(); !tok.empty(); tok = next_token()) {
                long long v = 0;
                auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc{} || p != tok.data() + tok.size())
                    throw parse_error("malformed number '" + std::string(tok) + "'", line_no);
                nums.push_back(v);
            }
        };
        if (first == "s") {
            auto kind = next_token();
            if (kind != "td") throw parse_error("expected 's td' header", line_no);
            parse_rest_numbers();
            if (nums.size() != 3 || nums[0] < 0 || nums[1] < 0 || nums[2] < 0)
                throw parse_error("malformed 's td' header", line_no);
            if (nums[0] > 1'000'000 || nums[2] > 20000)
                throw parse_error("decomposition header sizes too large", line_no);
            nodes = static_cast<int>(nums[0]);
            td.n = static_cast<int>(nums[2]);
            td.bags.assign(std::max(nodes, 0), VertexSet(td.n));
            bag_seen.assign(std::max(nodes, 0), false);
            if (nodes == 0) throw parse_error("decomposition must have at least one node", line_no);
        } else if (first == "b") {
            if (nodes < 0) throw parse_error("bag line before header", line_no);
            parse_rest_numbers();
            if (nums.empty()) throw parse_error("bag line missing node id", line_no);
            long long id = nums[0];
            if (id < 1 || id > nodes) throw parse_error("bag id out of range", line_no);
            if (bag_seen[id - 1]) throw parse_error("duplicate bag line", line_no);
            bag_seen[id - 1] = true;
            for (size_t i = 1; i < nums.size(); ++i) {
                if (nums[i] < 1 || nums[i] > td.n)
                    throw parse_error("bag vertex out of range (ids are 1-based)", line_no);
                td.bags[id - 1].add(static_cast<int>(nums[i]) - 1);
            }
        } else {
            if (nodes < 0) throw parse_error("edge line before header", line_no);
            long long a = 0;
            auto [p, ec] = std::from_chars(first.data(), first.data() + first.size(), a);
            if (ec != std::errc{} || p != first.data() + first.size())
                throw parse_error("malformed line", line_no);
            parse_rest_numbers();
            if (nums.size() != 1) throw parse_error("expected tree edge '<a> <b>'", line_no);
            long long b = nums[0];
            if (a < 1 || a > nodes || b < 1 || b > nodes)
                throw parse_error("tree edge endpoint out of range", line_no);
            td.edges.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
        }
    }
    if (nodes < 0) throw parse_error("missing 's td' header", line_no == 0 ? 1 : line_no);
    return td;
}

std::string emit_tree_decomposition(const TreeDecomposition& td) {
    int max_bag = 0;
    for (const auto& b : td.bags) max_bag = std::max(max_bag, b.count());
    std::string out = "s td " + std::to_string(td.node_count()) + " " + std::to_string(max_bag) +
                      " " + std::to_string(td.n) + "\n";
    for (int t = 0; t < td.node_count(); ++t) {
        out += "b " + std::to_string(t + 1);
        for (int v : td.bags[t]) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    for (auto [a, b] : td.edges)
        out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

} // namespace wklab
