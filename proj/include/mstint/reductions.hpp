#pragma once

#include <optional>

#include "mstint/graph.hpp"

namespace mstint {

// Maximum components problem: split the graph into as many components as
// possible by removing q edges (unit costs), or a cost budget (the budgeted
// graph disconnection variant when per-edge costs are supplied).
struct McpInstance {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    int64_t removals = 1;                       // q, or the budget for BGD
    std::optional<std::vector<int64_t>> costs;  // per-edge costs for BGD
};

// All original edges become weight 0 (unit or given cost); a fresh
// non-interdictable spanning tree of weight-1 edges is appended so every
// extra component costs exactly one tree edge in any spanning tree. The
// interdiction value of R equals the component gain R achieves. The tree is
// marked with the non-interdictable flag rather than priced at budget+1;
// both encodings keep it out of every feasible removal set, but the flag
// keeps budget arithmetic free of sentinel values.
Instance mcp_to_interdiction(const McpInstance& mcp);

// The 3-vertex multigraph refuting the replacement-edge containment claim:
// u-v weights {3,4,5}, v-w weights {2,101}, u-w weights {1,6,100}, unit costs,
// budget 3. The optimum removes the weight-{1,2,6} edges for MST value 103,
// while removals restricted to the MST and its best replacements reach 10.
Instance shen_fixture();

}  // namespace mstint
