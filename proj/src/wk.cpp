#include "wklab/wk.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wklab/independent.hpp"

namespace wklab {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::duration<double, std::milli> since(Clock::time_point t0) {
    return Clock::now() - t0;
}

// Backtracking search for pairwise disjoint pool members S_i containing the
// respective tuple components. Components are processed fewest-candidates
// first; a branch dies when the vertices still free cannot host the
// remaining sets (each needs at least min_size fresh vertices).
std::optional<std::vector<VertexSet>> disjoint_pool_extensions(
    int n, const std::vector<VertexSet>& tuple, const std::vector<VertexSet>& pool,
    int min_size) {
    const int k = static_cast<int>(tuple.size());
    std::vector<std::vector<const VertexSet*>> cands(k);
    for (int i = 0; i < k; ++i) {
        for (const VertexSet& s : pool)
            if (tuple[i].is_subset_of(s)) cands[i].push_back(&s);
        if (cands[i].empty()) return std::nullopt;
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cands[a].size() < cands[b].size(); });

    std::vector<VertexSet> chosen(k, VertexSet(n));
    std::function<bool(int, const VertexSet&)> rec = [&](int depth, const VertexSet& used) {
        if (depth == k) return true;
        const int i = order[depth];
        for (const VertexSet* s : cands[i]) {
            if (s->intersects(used)) continue;
            VertexSet used2 = used | *s;
            if (n - used2.count() < (k - depth - 1) * min_size) continue;
            chosen[i] = *s;
            if (rec(depth + 1, used2)) return true;
        }
        return false;
    };
    if (!rec(0, VertexSet(n))) return std::nullopt;
    return chosen;
}

// Depth-first sweep over the componentwise-maximal disjoint independent
// k-tuples, in canonical order: components sorted ascending by bit pattern,
// tuples visited lexicographically. Maximality means every vertex outside
// the union has a neighbor in every component; tuples below a maximal one
// inherit its extensions, so checking only these suffices.
class MaximalTupleSweep {
public:
    using CheckFn = std::function<bool(const std::vector<VertexSet>&)>;

    MaximalTupleSweep(const Graph& g, int k, CheckFn check)
        : g_(g), n_(g.vertex_count()), k_(k), check_(std::move(check)),
          all_(VertexSet::full(n_)), tuple_(k, VertexSet(n_)) {
        nonadj_.reserve(n_);
        below_.reserve(n_);
        for (int v = 0; v < n_; ++v) {
            nonadj_.push_back(g.closed_neighborhood(v).complement());
            VertexSet b(n_);
            for (int u = 0; u < v; ++u) b.add(u);
            below_.push_back(std::move(b));
        }
    }

    // First tuple rejected by check(), or nullopt when all pass.
    std::optional<std::vector<VertexSet>> run() {
        start_component(0, VertexSet(n_), VertexSet(n_));
        return failure_;
    }

private:
    // used: union of components < d. cum: vertices left unblocked by at
    // least one of them (no neighbor in that component).
    bool start_component(int d, const VertexSet& used, const VertexSet& cum) {
        VertexSet residual = all_ - used;
        if (d == k_ - 1) {
            // Vertices unblocked so far must all be absorbed by the final
            // component; bail out when they cannot coexist.
            VertexSet base = cum - used;
            if (!is_independent(g_, base)) return true;
            VertexSet unblocked = all_;
            VertexSet allowed = residual - base;
            for (int w : base) {
                unblocked -= g_.neighbors(w);
                allowed -= g_.neighbors(w);
            }
            return enumerate(d, base, unblocked, allowed, used, cum);
        }
        return enumerate(d, VertexSet(n_), all_, residual, used, cum);
    }

    // Ascending enumeration of candidate sets for component d: emits cur,
    // then for each allowed v the sets whose highest new vertex is v.
    bool enumerate(int d, const VertexSet& cur, const VertexSet& unblocked,
                   const VertexSet& allowed, const VertexSet& used, const VertexSet& cum) {
        if (d == 0 || !(cur < tuple_[d - 1])) {
            tuple_[d] = cur;
            VertexSet used2 = used | cur;
            VertexSet cum2 = cum | unblocked;
            if (d == k_ - 1) {
                if ((cum2 - used2).empty() && !check_(tuple_)) {
                    failure_ = tuple_;
                    return false;
                }
            } else {
                if (!start_component(d + 1, used2, cum2)) return false;
            }
        }
        for (int v : allowed) {
            VertexSet cur2 = cur;
            cur2.add(v);
            if (!enumerate(d, cur2, unblocked - g_.neighbors(v), allowed & below_[v] & nonadj_[v],
                           used, cum))
                return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    int k_;
    CheckFn check_;
    VertexSet all_;
    std::vector<VertexSet> tuple_;
    std::vector<VertexSet> nonadj_;
    std::vector<VertexSet> below_;
    std::optional<std::vector<VertexSet>> failure_;
};

} // namespace

WkReport is_well_covered(const Graph& g) {
    const auto t0 = Clock::now();
    WkReport r;
    r.property = "W1";
    r.alpha = alpha(g);
    std::optional<VertexSet> smallest;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        if (!smallest || s.count() < smallest->count() ||
            (s.count() == smallest->count() && s < *smallest))
            smallest = s;
        return true;
    });
    r.beta = smallest ? smallest->count() : 0;
    r.verdict = (r.beta == r.alpha);
    if (!r.verdict) r.witness = IndependentFamily({*smallest});
    r.elapsed = since(t0);
    return r;
}

bool is_one_well_covered(const Graph& g) {
    if (!is_well_covered(g).verdict) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet keep = VertexSet::full(g.vertex_count());
        keep.remove(v);
        if (!is_well_covered(induced_subgraph(g, keep).graph).verdict) return false;
    }
    return true;
}

std::optional<IndependentFamily> find_disjoint_maximum_extensions(const Graph& g,
                                                                  const IndependentFamily& family) {
    if (auto err = family.validate(g))
        throw std::invalid_argument("invalid independent family: " + *err);
    auto pool = maximum_independent_sets(g);
    auto ext = disjoint_pool_extensions(g.vertex_count(), family.sets(), pool, alpha(g));
    if (!ext) return std::nullopt;
    return IndependentFamily(std::move(*ext));
}

WkReport is_wk(const Graph& g, int k, bool witness_on_true) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const auto t0 = Clock::now();
    const int n = g.vertex_count();

    WkReport wc = is_well_covered(g);
    WkReport r;
    r.property = "W" + std::to_string(k);
    r.alpha = wc.alpha;
    r.beta = wc.beta;

    // All-empty tuple needs k disjoint maximum sets, so k*alpha vertices.
    if (n >= 1 && static_cast<long long>(k) * r.alpha > n) {
        r.verdict = false;
        r.witness = IndependentFamily(std::vector<VertexSet>(k, VertexSet(n)));
        r.elapsed = since(t0);
        return r;
    }
    // A maximal non-maximum set has no maximum superset at all.
    if (!wc.verdict) {
        r.verdict = false;
        std::vector<VertexSet> sets(k, VertexSet(n));
        sets[0] = wc.witness->set(0);
        r.witness = IndependentFamily(std::move(sets));
        r.elapsed = since(t0);
        return r;
    }

    auto pool = maximum_independent_sets(g);
    MaximalTupleSweep sweep(g, k, [&](const std::vector<VertexSet>& tuple) {
        return disjoint_pool_extensions(n, tuple, pool, r.alpha).has_value();
    });
    auto failing = sweep.run();
    if (failing) {
        r.verdict = false;
        r.witness = IndependentFamily(std::move(*failing));
    } else {
        r.verdict = true;
        if (witness_on_true) {
            auto ext = disjoint_pool_extensions(
                n, std::vector<VertexSet>(k, VertexSet(n)), pool, r.alpha);
            if (ext) r.witness = IndependentFamily(std::move(*ext));
        }
    }
    r.elapsed = since(t0);
    return r;
}

bool models_formula_wk(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.vertex_count();
    auto pool = maximal_independent_sets(g);
    int min_size = n;
    for (const auto& s : pool) min_size = std::min(min_size, s.count());
    MaximalTupleSweep sweep(g, k, [&](const std::vector<VertexSet>& tuple) {
        return disjoint_pool_extensions(n, tuple, pool, min_size).has_value();
    });
    return !sweep.run().has_value();
}

bool eval_indep(const Graph& g, const VertexSet& x) {
    for (int u : x)
        for (int v : x)
            if (u != v && g.adjacent(u, v)) return false;
    return true;
}

bool eval_maximal(const Graph& g, const VertexSet& x) {
    if (!eval_indep(g, x)) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (x.contains(v)) continue;
        bool hit = false;
        for (int u : x)
            if (g.adjacent(u, v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool eval_disjoint(const Graph&, const VertexSet& x, const VertexSet& y) {
    for (int u : x)
        for (int v : y)
            if (u == v) return false;
    return true;
}

bool eval_subset(const Graph&, const VertexSet& x, const VertexSet& y) {
    for (int u : x)
        if (!y.contains(u)) return false;
    return true;
}

} // namespace wklab
