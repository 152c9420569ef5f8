#include "wklab/family.hpp"

#include <stdexcept>

#include "wklab/independent.hpp"

namespace wklab {

std::optional<std::string> IndependentFamily::validate(const Graph& g) const {
    for (size_t i = 0; i < sets_.size(); ++i) {
        if (sets_[i].universe() != g.vertex_count())
            return "member " + std::to_string(i) + " is over the wrong universe";
        if (!is_independent(g, sets_[i]))
            return "member " + std::to_string(i) + " is not independent";
    }
    for (size_t i = 0; i < sets_.size(); ++i)
        for (size_t j = i + 1; j < sets_.size(); ++j)
            if (sets_[i].intersects(sets_[j]))
                return "members " + std::to_string(i) + " and " + std::to_string(j) +
                       " are not disjoint";
    return std::nullopt;
}

IndependentFamily IndependentFamily::make_checked(const Graph& g, std::vector<VertexSet> sets) {
    IndependentFamily f(std::move(sets));
    if (auto err = f.validate(g)) throw std::invalid_argument("invalid independent family: " + *err);
    return f;
}

} // namespace wklab
