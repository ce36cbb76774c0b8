#pragma once

#include <optional>
#include <variant>

#include "mstint/solver.hpp"

namespace mstint {

// Connected graph with positive edge lengths; interdiction must never be able
// to disconnect it (same standing assumption as the spanning tree problem).
struct TspInstance {
    Instance graph;  // weights play the role of lengths

    explicit TspInstance(Instance g);
};

struct TspReport {
    EdgeSet removal;
    int64_t mst_lower = 0;   // MST weight of (V, E \ R): tour lower bound
    int64_t tour_upper = 0;  // doubled spanning tree: tour upper bound
    SolveReport mst_report;
};

using TspResult = std::variant<TspReport, Reject>;

// Black-box reduction: interdict the MST with weights := lengths; the tour
// after removal is sandwiched between the surviving MST weight and twice it.
TspResult tsp_interdict(const TspInstance& tsp);

// Exact shortest closed walk visiting every vertex: all-pairs shortest paths,
// then a Held-Karp cycle on the metric closure. Guarded to n <= 12.
std::optional<int64_t> tsp_walk_length(const TspInstance& tsp, const EdgeSet& removal);

}  // namespace mstint
