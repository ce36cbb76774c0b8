#pragma once

#include <variant>
#include <vector>

#include "mstint/levels.hpp"
#include "mstint/rational.hpp"

namespace mstint {

// Parametric objective lambda*c(U) - val(U) over subsets of the removable
// edges, handled in scaled integer form num*c(U) - den*val(U). Submodular for
// every lambda >= 0. Small ground sets get cached per-mask tables.
class SubmodularObjective {
public:
    // Tables cover the whole exhaustive range: 2 x 8B x 2^22 = 64 MiB at the
    // cap, paid once per objective instead of once per lambda.
    static constexpr int kTableLimit = 22;
    static constexpr int kExhaustiveLimit = 22;

    explicit SubmodularObjective(const LevelDecomposition& dec);

    const LevelDecomposition& decomposition() const { return *dec_; }
    const std::vector<int>& ground() const { return ground_; }
    int size() const { return static_cast<int>(ground_.size()); }
    int64_t val_empty() const { return val_empty_; }
    int64_t val_full() const { return val_full_; }
    bool has_tables() const { return !val_table_.empty(); }

    int64_t cost_of_mask(uint32_t mask) const;
    int64_t val_of_mask(uint32_t mask) const;
    EdgeSet mask_to_set(uint32_t mask) const;
    uint32_t set_to_mask(const EdgeSet& s) const;

private:
    const LevelDecomposition* dec_;
    std::vector<int> ground_;
    std::vector<int> ground_pos_;  // edge id -> position, -1 outside
    int64_t val_empty_ = 0;
    int64_t val_full_ = 0;
    std::vector<int64_t> cost_table_;
    std::vector<int64_t> val_table_;
};

enum class SfmBackend { automatic, exhaustive, exhaustive_serial, min_norm_point };

struct SfmResult {
    EdgeSet minimal;        // intersection of all minimizers
    EdgeSet maximal;        // union of all minimizers
    int64_t scaled_value;   // num*c(U) - den*val(U)
    Rational value;         // scaled_value / den
};

// Exact minimization of lambda*c(U) - val(U); lambda as a nonnegative rational.
SfmResult sfm_min(const SubmodularObjective& f, const Rational& lambda,
                  SfmBackend backend = SfmBackend::automatic);

struct ParetoPoint {
    int64_t cost = 0;
    int64_t value = 0;
    EdgeSet witness;
};

// Extreme supported tuples sorted by strictly increasing cost, witnesses
// nested along the front (minimal-minimizer convention).
struct ParetoFront {
    std::vector<ParetoPoint> points;
};

ParetoFront extreme_supported_tuples(const LevelDecomposition& dec);

struct CaseExactHit { ParetoPoint point; };
struct CaseFullRemoval {};
struct CaseBracketed { ParetoPoint lower, upper; };
using BudgetCase = std::variant<CaseExactHit, CaseFullRemoval, CaseBracketed>;

BudgetCase locate_budget(const ParetoFront& front, int64_t budget);

// Budget-line interpolation between the bracketing tuples; upper bounds OPT.
Rational nu_star(const ParetoPoint& lower, const ParetoPoint& upper, int64_t budget);

}  // namespace mstint
