#include "mstint/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mstint {

bool EdgeSet::lex_less(const EdgeSet& o) const {
    std::vector<int> a = to_vector(), b = o.to_vector();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Instance::Instance(int vertex_count, std::vector<Edge> edges, int64_t budget)
    : n_(vertex_count), edges_(std::move(edges)), budget_(budget) {
    if (n_ <= 0) throw std::invalid_argument("instance needs a positive vertex count");
    if (budget_ < 1) throw std::invalid_argument("budget must be >= 1");
    for (size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        e.id = static_cast<int>(i);
        if (e.u == e.v) throw std::invalid_argument("loop edge rejected");
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.weight < 0) throw std::invalid_argument("negative edge weight");
        if (e.interdictable && e.cost < 1)
            throw std::invalid_argument("interdiction cost must be >= 1");
    }
    by_weight_.resize(edges_.size());
    for (size_t i = 0; i < edges_.size(); ++i) by_weight_[i] = static_cast<int>(i);
    std::stable_sort(by_weight_.begin(), by_weight_.end(), [&](int a, int b) {
        return edges_[a].weight < edges_[b].weight;
    });
}

EdgeSet Instance::interdictable_edges() const {
    EdgeSet s(edge_count());
    for (const Edge& e : edges_)
        if (e.interdictable) s.insert(e.id);
    return s;
}

int64_t cost_sum(const Instance& g, const EdgeSet& s) {
    int64_t total = 0;
    s.for_each([&](int id) { total = checked_add(total, g.edge(id).cost); });
    return total;
}

int64_t weight_sum(const Instance& g, const EdgeSet& s) {
    int64_t total = 0;
    s.for_each([&](int id) { total = checked_add(total, g.edge(id).weight); });
    return total;
}

Partition components(const Instance& g, const EdgeSet& active) {
    UnionFind uf(g.vertex_count());
    active.for_each([&](int id) { uf.unite(g.edge(id).u, g.edge(id).v); });
    Partition part;
    part.block_of.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int root = uf.find(v);
        if (part.block_of[root] < 0) part.block_of[root] = part.block_count++;
        part.block_of[v] = part.block_of[root];
    }
    return part;
}

std::optional<int64_t> mst_weight(const Instance& g, const EdgeSet& active) {
    UnionFind uf(g.vertex_count());
    int64_t total = 0;
    for (int id : g.sorted_by_weight()) {
        if (!active.contains(id)) continue;
        const Edge& e = g.edge(id);
        if (uf.unite(e.u, e.v)) total = checked_add(total, e.weight);
    }
    if (uf.components() != 1) return std::nullopt;
    return total;
}

int weight_level(int64_t weight) {
    if (weight == 0) return -1;
    if (weight < 0 || (weight & (weight - 1)) != 0)
        throw std::invalid_argument("weight is not zero or a power of two");
    return 63 - __builtin_clzll(static_cast<uint64_t>(weight));
}

int64_t val(const Instance& g, const EdgeSet& removal) {
    int top = -1;
    for (const Edge& e : g.edges()) top = std::max(top, weight_level(e.weight));
    removal.for_each([&](int id) {
        const Edge& e = g.edge(id);
        if (!e.interdictable)
            throw std::invalid_argument("removal set touches a non-interdictable edge");
        if (weight_level(e.weight) >= top)
            throw std::invalid_argument("removal set touches the top weight level");
    });

    // One sweep over levels -1..top-1, adding surviving edges level by level.
    UnionFind uf(g.vertex_count());
    const std::vector<int>& order = g.sorted_by_weight();
    size_t next = 0;
    int64_t total = 0;
    for (int level = -1; level < top; ++level) {
        while (next < order.size() && weight_level(g.edge(order[next]).weight) <= level) {
            int id = order[next++];
            if (!removal.contains(id)) uf.unite(g.edge(id).u, g.edge(id).v);
        }
        int64_t sigma = uf.components();
        int64_t coeff = level < 0 ? 1 : (int64_t(1) << level);
        total = checked_add(total, checked_mul(coeff, sigma - 1));
    }
    return total;
}

namespace {

// Shore-tracking Stoer-Wagner over an aggregated capacity matrix.
MinCut stoer_wagner(const Instance& g, const EdgeSet& active, bool interdictable_only) {
    int n = g.vertex_count();
    MinCut best;
    best.edges = EdgeSet(g.edge_count());
    bool have_cut = false;

    Partition part = components(g, active);
    if (part.block_count > 1) {
        // Disconnected: an empty cut separates any component.
        MinCut cut;
        cut.edges = EdgeSet(g.edge_count());
        cut.cost = CutCost{0, 0};
        for (int v = 0; v < n; ++v)
            if (part.block_of[v] == 0) cut.side.push_back(v);
        return cut;
    }

    // merged[i] holds the original vertices currently fused into node i.
    std::vector<std::vector<int>> merged(n);
    for (int v = 0; v < n; ++v) merged[v] = {v};
    std::vector<std::vector<CutCost>> w(n, std::vector<CutCost>(n));
    active.for_each([&](int id) {
        const Edge& e = g.edge(id);
        CutCost c;
        if (interdictable_only && !e.interdictable) c.infinite = 1;
        else c.finite = e.cost;
        w[e.u][e.v].infinite += c.infinite;
        w[e.u][e.v].finite = checked_add(w[e.u][e.v].finite, c.finite);
        w[e.v][e.u] = w[e.u][e.v];
    });

    std::vector<int> nodes(n);
    for (int i = 0; i < n; ++i) nodes[i] = i;

    while (nodes.size() > 1) {
        // Maximum adjacency order; ties by node id for determinism.
        std::vector<CutCost> adj(n, CutCost{0, 0});
        std::vector<char> in_a(n, 0);
        int prev = -1, last = -1;
        for (size_t step = 0; step < nodes.size(); ++step) {
            int pick = -1;
            for (int u : nodes) {
                if (in_a[u]) continue;
                if (pick < 0 || adj[pick] < adj[u]) pick = u;
            }
            if (pick < 0) throw std::logic_error("stoer-wagner ran out of nodes");
            in_a[pick] = 1;
            prev = last;
            last = pick;
            for (int u : nodes) {
                if (in_a[u]) continue;
                adj[u].infinite += w[pick][u].infinite;
                adj[u].finite = checked_add(adj[u].finite, w[pick][u].finite);
            }
        }
        // Cut-of-the-phase: `last` alone against the rest.
        if (!have_cut || adj[last] < best.cost) {
            have_cut = true;
            best.cost = adj[last];
            best.side = merged[last];
        }
        // Merge last into prev.
        for (int u : nodes) {
            if (u == last || u == prev) continue;
            w[prev][u].infinite += w[last][u].infinite;
            w[prev][u].finite = checked_add(w[prev][u].finite, w[last][u].finite);
            w[u][prev] = w[prev][u];
        }
        merged[prev].insert(merged[prev].end(), merged[last].begin(), merged[last].end());
        nodes.erase(std::find(nodes.begin(), nodes.end(), last));
    }

    std::sort(best.side.begin(), best.side.end());
    std::vector<char> on_side(n, 0);
    for (int v : best.side) on_side[v] = 1;
    best.edges = EdgeSet(g.edge_count());
    CutCost verify;
    active.for_each([&](int id) {
        const Edge& e = g.edge(id);
        if (on_side[e.u] != on_side[e.v]) {
            best.edges.insert(id);
            if (interdictable_only && !e.interdictable) verify.infinite += 1;
            else verify.finite = checked_add(verify.finite, e.cost);
        }
    });
    best.cost = verify;
    return best;
}

}  // namespace

MinCut global_min_cut(const Instance& g, const EdgeSet& active, bool interdictable_only) {
    if (g.vertex_count() < 2) throw std::invalid_argument("min cut needs >= 2 vertices");
    return stoer_wagner(g, active, interdictable_only);
}

bool supermodularity_check(const Instance& g, const EdgeSet& a, const EdgeSet& b) {
    int64_t lhs = checked_add(val(g, a), val(g, b));
    int64_t rhs = checked_add(val(g, a | b), val(g, a & b));
    return lhs <= rhs;
}

bool sigma_supermodularity_check(const Instance& g, const EdgeSet& a, const EdgeSet& b) {
    int64_t lhs = components(g, a).block_count + components(g, b).block_count;
    int64_t rhs = components(g, a | b).block_count + components(g, a & b).block_count;
    return lhs <= rhs;
}

}  // namespace mstint
