#include "mstint/tsp.hpp"

#include <algorithm>
#include <stdexcept>

namespace mstint {

TspInstance::TspInstance(Instance g) : graph(std::move(g)) {
    for (const Edge& e : graph.edges())
        if (e.weight < 1) throw std::invalid_argument("tsp edge lengths must be positive");
}

TspResult tsp_interdict(const TspInstance& tsp) {
    SolveResult inner = solve(tsp.graph);
    if (auto* rej = std::get_if<Reject>(&inner)) return *rej;

    TspReport report{EdgeSet(), 0, 0, std::get<SolveReport>(std::move(inner))};
    report.removal = report.mst_report.removal;
    report.mst_lower = report.mst_report.value_original;
    report.tour_upper = checked_mul(2, report.mst_lower);
    return report;
}

std::optional<int64_t> tsp_walk_length(const TspInstance& tsp, const EdgeSet& removal) {
    const Instance& g = tsp.graph;
    int n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("exact tour oracle is limited to 12 vertices");
    if (n == 1) return 0;

    // Metric closure of (V, E \ removal) by Floyd-Warshall.
    const int64_t kInf = int64_t(1) << 60;
    std::vector<std::vector<int64_t>> d(n, std::vector<int64_t>(n, kInf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const Edge& e : g.edges()) {
        if (removal.contains(e.id)) continue;
        d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
        d[e.v][e.u] = d[e.u][e.v];
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][j] >= kInf) return std::nullopt;

    if (n == 2) return checked_mul(2, d[0][1]);

    // Held-Karp on the closure; a closed walk in the graph is exactly a
    // Hamiltonian cycle there.
    size_t full = size_t(1) << (n - 1);  // subsets of {1..n-1}, start fixed at 0
    std::vector<std::vector<int64_t>> dp(full, std::vector<int64_t>(n, kInf));
    for (int v = 1; v < n; ++v) dp[size_t(1) << (v - 1)][v] = d[0][v];
    for (size_t mask = 1; mask < full; ++mask) {
        for (int last = 1; last < n; ++last) {
            if (!((mask >> (last - 1)) & 1)) continue;
            int64_t cur = dp[mask][last];
            if (cur >= kInf) continue;
            for (int nxt = 1; nxt < n; ++nxt) {
                if ((mask >> (nxt - 1)) & 1) continue;
                size_t nmask = mask | (size_t(1) << (nxt - 1));
                if (cur + d[last][nxt] < dp[nmask][nxt]) dp[nmask][nxt] = cur + d[last][nxt];
            }
        }
    }
    int64_t best = kInf;
    for (int last = 1; last < n; ++last)
        best = std::min(best, dp[full - 1][last] + d[last][0]);
    return best;
}

}  // namespace mstint
