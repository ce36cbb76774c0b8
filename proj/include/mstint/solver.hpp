#pragma once

#include <optional>
#include <string>
#include <variant>

#include "mstint/pareto.hpp"
#include "mstint/patterns.hpp"

namespace mstint {

struct SolveReport {
    enum class Case { exact_hit, full_removal, bracketed, frozen };

    Case case_taken = Case::frozen;
    EdgeSet removal;             // edge ids of the instance handed to solve()
    int64_t value_rounded = 0;   // MST weight after removal, rounded weights
    int64_t value_original = 0;  // MST weight after removal, input weights
    std::optional<Rational> upper_bound;  // nu_star, bracketed case only
    // Bracketing witnesses in input edge ids, when the third case ran.
    std::optional<EdgeSet> witness_lower, witness_upper;
    int reductions_applied = 0;
    int guarantee_rounded = 7;
    int guarantee_original = 14;

    static const char* case_name(Case c);
};

using SolveResult = std::variant<SolveReport, Reject>;

// Full pipeline: round, preprocess (chasing reductions), build the Pareto
// front, dispatch on the budget case, with the greedy pattern construction
// plus best-of-two backing the bracketed case.
SolveResult solve(const Instance& raw);

// Bracketed-case dispatch: the lower witness when it already reaches a
// seventh of the upper bound, otherwise the best-of-two set built from the
// over-budget upper witness.
EdgeSet algorithm1(const LevelDecomposition& dec, const ParetoPoint& lower,
                   const ParetoPoint& upper, const Rational& bound);

// max(val) of: the greedy pattern set derived from U, and the cheapest cut
// splitting (V, E_{<=p-1}). Requires c(U) > budget.
EdgeSet best_of_two(const LevelDecomposition& dec, const EdgeSet& over_budget_set);

struct ExactResult {
    EdgeSet removal;
    int64_t value = 0;
};

// Exhaustive interdiction oracle: maximizes mst_weight(E \ R) over all
// R within budget, ties by lexicographically smallest edge-id set. Subsets
// that disconnect the graph are skipped. OpenMP splits the search space;
// the serial variant is the reference for testing.
ExactResult exact_opt(const Instance& g, int limit = 22);
ExactResult exact_opt_serial(const Instance& g, int limit = 22);

}  // namespace mstint
