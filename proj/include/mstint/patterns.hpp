#pragma once

#include <span>
#include <vector>

#include "mstint/levels.hpp"
#include "mstint/rational.hpp"

namespace mstint {

// Efficiency ratio g/kappa; kappa == 0 means +infinity, above every finite value.
struct Efficiency {
    int64_t g = 0;
    int64_t kappa = 0;

    bool infinite() const { return kappa == 0; }
    // -1 / 0 / +1 comparison, infinity greatest.
    friend int compare(const Efficiency& a, const Efficiency& b) {
        return compare_ratio(a.g, a.kappa, b.g, b.kappa);
    }
};

// Partitions A_i = components of (V, E_{<=i} \ U) for i = -1..p, with child
// links and the auxiliary cost/impact tables memoized per block.
class PartitionTower {
public:
    struct Level {
        std::vector<int> block_of;                // vertex -> block
        int block_count = 0;
        std::vector<std::vector<int>> children;   // block -> blocks one level down
        std::vector<int> parent;                  // block -> block one level up
        std::vector<int> min_vertex;              // deterministic block identity
        std::vector<int64_t> kappa;
        std::vector<int64_t> g;
    };

    PartitionTower(const LevelDecomposition& dec, EdgeSet removal);

    const LevelDecomposition& decomposition() const { return *dec_; }
    const EdgeSet& removal() const { return removal_; }
    int p() const { return dec_->p; }
    const Level& level(int i) const { return levels_[i + 1]; }  // i in [-1, p]

    int64_t kappa(int level, int block) const { return levels_[level + 1].kappa[block]; }
    int64_t g(int level, int block) const { return levels_[level + 1].g[block]; }
    Efficiency rho(int level, int block) const {
        return Efficiency{g(level, block), kappa(level, block)};
    }

    // Block of A_i containing the block `b` of A_j, for j <= i.
    int ancestor(int from_level, int block, int to_level) const;

private:
    const LevelDecomposition* dec_;
    EdgeSet removal_;
    std::vector<Level> levels_;
};

PartitionTower build_tower(const LevelDecomposition& dec, const EdgeSet& removal);

struct PatternTuple {
    int level = 0;  // in [-1, p-1]
    int block = 0;  // block id within the tower's partition at that level

    bool operator==(const PatternTuple&) const = default;
};

// Family of disjoint (block, level) tuples.
struct RemovalPattern {
    std::vector<PatternTuple> tuples;
};

// R(W): every removal edge of U_{<=i} with at least one endpoint in a pattern
// block (W, i). An edge with both endpoints inside W is included as well; the
// block is fully detached from U's influence on levels -1..i.
EdgeSet pattern_edges(const PartitionTower& tower, const RemovalPattern& pattern);

struct Algorithm2Result {
    RemovalPattern pattern;
    EdgeSet removal_set;  // R(W)
    int64_t cost = 0;     // c(R(W)) <= B

    // Per-iteration trace of the greedy descent, for the over-budget replay.
    struct Iteration {
        int level = 0;                   // the loop's current level
        int parent_block = 0;            // block of A_{level+1} being split
        std::vector<int> sorted_children;// rho-descending block ids of A_level
        int taken = 0;                   // s: prefix length added
        RemovalPattern pattern_before;
        EdgeSet removal_before;
    };
    std::vector<Iteration> trace;
};

// Greedy pattern construction from level p-1 downward; requires c(U) > B.
Algorithm2Result algorithm2(const PartitionTower& tower);
Algorithm2Result algorithm2(const LevelDecomposition& dec, const EdgeSet& removal);

// The over-budget companion pattern W' from the analysis: replay up to the
// last iteration with s != h and add one extra tuple. c(R(W')) > B always.
struct OverBudgetPattern {
    RemovalPattern pattern;
    EdgeSet removal_set;
    int64_t cost = 0;
    int boost_level = 0;  // the level whose extra tuple was added
};

OverBudgetPattern overbudget_pattern(const PartitionTower& tower, const Algorithm2Result& run);

// Structural validity of an efficient removal pattern: at every block either
// no descendant was selected, or the selected children form a rho-maximal
// prefix under some nonincreasing order with a single active descent chain.
bool validate_efficient(const PartitionTower& tower, const RemovalPattern& pattern);

// kappa^W and g^W tables (computed from the definition, not the recursion)
// plus the covered families S_l.
struct PatternTables {
    std::vector<std::vector<int64_t>> kappa_w;  // [level+1][block]
    std::vector<std::vector<int64_t>> g_w;
    std::vector<std::vector<char>> covered;     // S_l membership flags

    int64_t kappa_w_top = 0;  // kappa^W_p(V)
    int64_t g_w_top = 0;      // g^W_p(V)
};

PatternTables pattern_functions(const PartitionTower& tower, const RemovalPattern& pattern);

enum class PrefixDominance {
    holds,
    violated,
    ratios_not_sorted,
    lambda_out_of_range,
    zero_denominator,
};

// Ratio-domination inequality behind the pattern analysis: for nonincreasing
// ratios a_j/b_j, the full average is at most any lambda-weighted prefix average.
PrefixDominance prefix_dominance(std::span<const int64_t> a, std::span<const int64_t> b,
                                 int q, const Rational& lambda);

}  // namespace mstint
