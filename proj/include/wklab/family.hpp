#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wklab/graph.hpp"

namespace wklab {

// Ordered tuple of pairwise disjoint independent sets (empty members are
// legal). Construction does not validate; call validate() or use
// make_checked() at API boundaries.
class IndependentFamily {
public:
    IndependentFamily() = default;
    explicit IndependentFamily(std::vector<VertexSet> sets) : sets_(std::move(sets)) {}

    // Throws std::invalid_argument when a member is not independent or two
    // members intersect.
    static IndependentFamily make_checked(const Graph& g, std::vector<VertexSet> sets);

    // nullopt when valid, otherwise a description of the violation.
    std::optional<std::string> validate(const Graph& g) const;

    int k() const { return static_cast<int>(sets_.size()); }
    const VertexSet& set(int i) const { return sets_[i]; }
    const std::vector<VertexSet>& sets() const { return sets_; }

    VertexSet union_all(int universe) const {
        VertexSet u(universe);
        for (const auto& s : sets_) u |= s;
        return u;
    }

    friend bool operator==(const IndependentFamily& a, const IndependentFamily& b) {
        return a.sets_ == b.sets_;
    }

private:
    std::vector<VertexSet> sets_;
};

} // namespace wklab
