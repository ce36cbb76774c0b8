#pragma once

#include <variant>
#include <vector>

#include "mstint/graph.hpp"

namespace mstint {

struct RoundingCertificate {
    std::vector<int64_t> original_weights;
};

// Round every positive weight down to the next power of two; zero weights stay.
std::pair<Instance, RoundingCertificate> round_weights(const Instance& g);

// The rounded instance split into weight levels E_{-1}, E_0, ..., E_p with all
// standing assumptions enforced: (V, E_p) connected (via a non-interdictable
// connector tree when needed), no interdiction set disconnects the graph, and
// some interdiction set splits (V, E_{<=p-1}).
struct LevelDecomposition {
    explicit LevelDecomposition(Instance g) : instance(std::move(g)) {}

    Instance instance;
    int p = 1;
    std::vector<int> level_of;        // edge id -> level in {-1, ..., p}
    std::vector<EdgeSet> level_sets;  // E_i stored at index i + 1
    std::vector<EdgeSet> prefix_sets; // E_{<=i} stored at index i + 1
    EdgeSet removable;                // interdictable edges below the top level
    // Cheapest interdictable cut splitting a component of (V, E_{<=p-1});
    // feasible by assumption and reused as the best-of-two fallback.
    EdgeSet cheapest_split_cut;
    int64_t cheapest_split_cost = 0;

    const EdgeSet& level(int i) const { return level_sets[i + 1]; }
    const EdgeSet& prefix(int i) const { return prefix_sets[i + 1]; }
};

// The budget suffices to disconnect the graph; carries the violating cut.
struct Reject {
    EdgeSet cut;
    int64_t cut_cost = 0;
};

// No interdiction set can split (V, E_{<=p-1}) but contracting a minimum set
// of E_p edges joining its components yields an equivalent smaller instance:
//   val_input(R) = val_reduced(R) + value_offset for every interdiction set R.
struct Reduction {
    Instance reduced;
    std::vector<int> edge_map;    // reduced edge id -> input edge id
    std::vector<int> vertex_map;  // input vertex -> reduced vertex
    EdgeSet contracted;           // the contracted E_p edges (input ids)
    int64_t value_offset = 0;
};

// No feasible interdiction set changes the MST weight at all; the optimum is
// val(empty set) and the empty interdiction set attains it.
struct Frozen {
    int64_t base_value = 0;
};

using PreprocessResult = std::variant<LevelDecomposition, Reduction, Reject, Frozen>;

// Single preprocessing step on a rounded instance.
PreprocessResult preprocess(const Instance& rounded);

// Preprocessing driven to a fixed point: chases Reductions until a usable
// decomposition (or Reject/Frozen) remains. orig_edge_of maps decomposition
// edge ids back to the rounded input (-1 for connector edges added here).
struct Prepared {
    LevelDecomposition dec;
    std::vector<int> orig_edge_of;
    int reductions_applied = 0;
};

using PrepareResult = std::variant<Prepared, Reject, Frozen>;

PrepareResult prepare(const Instance& rounded);

}  // namespace mstint
