#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "wklab/family.hpp"
#include "wklab/graph.hpp"

namespace wklab {

// Verdict record shared by the recognizers. On a false W_k verdict the
// witness is a pairwise disjoint independent k-tuple with no disjoint
// maximum extension; on a false well-covered verdict it is a single
// maximal independent set of non-maximum size.
struct WkReport {
    std::string property; // "W1", "W2", ...
    bool verdict = false;
    std::optional<IndependentFamily> witness;
    int alpha = 0;
    int beta = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

// Every maximal independent set is maximum; equivalently alpha == beta.
// Records exact alpha and beta. On false, the witness is the smallest
// maximal independent set (ties broken by bit pattern).
WkReport is_well_covered(const Graph& g);

// Well-covered and still well-covered after deleting any single vertex.
bool is_one_well_covered(const Graph& g);

// Pairwise disjoint maximum independent supersets S_i of the family
// members, or nullopt when none exist. Throws std::invalid_argument when
// the family itself is invalid (distinct from "no extension exists").
std::optional<IndependentFamily> find_disjoint_maximum_extensions(const Graph& g,
                                                                  const IndependentFamily& family);

// W_k test: every pairwise disjoint independent k-tuple (empty members
// allowed) extends to k pairwise disjoint maximum independent sets.
// Fast-fails on k*alpha > n and on non-well-covered graphs. With
// witness_on_true, a true verdict carries k pairwise disjoint maximum
// independent sets as the witness.
WkReport is_wk(const Graph& g, int k, bool witness_on_true = false);

// Quantifier semantics of the k-set extension formula: every pairwise
// disjoint independent k-tuple extends to k pairwise disjoint *maximal*
// independent supersets.
bool models_formula_wk(const Graph& g, int k);

// Predicate evaluators written as literal quantifier loops; they must agree
// with the set-algebra operations of the same meaning.
bool eval_indep(const Graph& g, const VertexSet& x);
bool eval_maximal(const Graph& g, const VertexSet& x);
bool eval_disjoint(const Graph& g, const VertexSet& x, const VertexSet& y);
bool eval_subset(const Graph& g, const VertexSet& x, const VertexSet& y);

} // namespace wklab
