#include "wklab/independent.hpp"

#include <algorithm>
#include <stdexcept>

namespace wklab {

namespace {

void require_same_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph order");
}

// V \ N[v] for every v; the candidate masks of the pivot search.
std::vector<VertexSet> non_closed_neighborhoods(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> r;
    r.reserve(n);
    for (int v = 0; v < n; ++v) r.push_back(g.closed_neighborhood(v).complement());
    return r;
}

// Tomita-style pivoting; maximal independent sets are maximal cliques of
// the complement, so candidates shrink through V \ N[v] masks.
struct MaximalIsSearch {
    const Graph& g;
    const std::vector<VertexSet>& nonadj;
    const std::function<bool(const VertexSet&)>& fn;

    bool run(VertexSet cur, VertexSet cand, VertexSet excl) {
        if (cand.empty() && excl.empty()) return fn(cur);
        int pivot = -1, pivot_score = -1;
        for (const VertexSet* side : {&cand, &excl}) {
            for (int u : *side) {
                int score = (cand & nonadj[u]).count();
                if (score > pivot_score) {
                    pivot_score = score;
                    pivot = u;
                }
            }
        }
        VertexSet ext = cand - nonadj[pivot];
        for (int v : ext) {
            VertexSet next = cur;
            next.add(v);
            if (!run(std::move(next), cand & nonadj[v], excl & nonadj[v])) return false;
            cand.remove(v);
            excl.add(v);
        }
        return true;
    }
};

} // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
    require_same_universe(g, s);
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    require_same_universe(g, s);
    if (!is_independent(g, s)) return false;
    VertexSet dominated = s;
    for (int v : s) dominated |= g.neighbors(v);
    return dominated == g.vertices();
}

bool for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& fn) {
    const int n = g.vertex_count();
    if (n == 0) return fn(VertexSet(0)); // the empty set is the unique maximal IS
    auto nonadj = non_closed_neighborhoods(g);
    MaximalIsSearch search{g, nonadj, fn};
    return search.run(VertexSet(n), VertexSet::full(n), VertexSet(n));
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct AlphaSearch {
    const std::vector<VertexSet>& nonadj;
    int best = 0;

    void run(const VertexSet& cand, int cur) {
        if (cur + cand.count() <= best) return;
        if (cand.empty()) {
            best = cur;
            return;
        }
        // Dominance: a candidate with at most one candidate neighbor lies in
        // some maximum extension, so take it outright. Otherwise branch on a
        // max-degree candidate.
        int pick = -1, maxdeg = -1;
        for (int u : cand) {
            int deg = (cand - nonadj[u]).count() - 1;
            if (deg <= 1) {
                pick = u;
                maxdeg = deg;
                break;
            }
            if (deg > maxdeg) {
                maxdeg = deg;
                pick = u;
            }
        }
        run(cand & nonadj[pick], cur + 1);
        if (maxdeg > 1) {
            VertexSet rest = cand;
            rest.remove(pick);
            run(rest, cur);
        }
    }
};

} // namespace

int alpha(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    auto nonadj = non_closed_neighborhoods(g);
    AlphaSearch s{nonadj};
    s.run(VertexSet::full(g.vertex_count()), 0);
    return s.best;
}

int beta(const Graph& g) {
    int best = g.vertex_count(); // every maximal IS has at most n vertices
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        best = std::min(best, s.count());
        return true;
    });
    return best;
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
    const int a = alpha(g);
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        if (s.count() == a) out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    require_same_universe(g, keep);
    InducedSubgraph r;
    r.old_to_new.assign(g.vertex_count(), -1);
    for (int v : keep) {
        r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
        r.new_to_old.push_back(v);
    }
    GraphBuilder b(static_cast<int>(r.new_to_old.size()));
    for (int v : keep)
        for (int u : g.neighbors(v) & keep)
            if (v < u) b.add_edge(r.old_to_new[v], r.old_to_new[u]);
    r.graph = b.build();
    return r;
}

} // namespace wklab
