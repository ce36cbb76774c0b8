#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "mstint/io.hpp"
#include "mstint/levels.hpp"

namespace mstint::test {

struct E {
    int u, v;
    int64_t w, c;
    bool interdictable = true;
};

inline Instance make_instance(int n, const std::vector<E>& shorthand, int64_t budget) {
    std::vector<Edge> edges;
    for (const E& e : shorthand) {
        Edge x;
        x.u = e.u;
        x.v = e.v;
        x.weight = e.w;
        x.cost = e.interdictable ? e.c : 0;
        x.interdictable = e.interdictable;
        edges.push_back(x);
    }
    return Instance(n, std::move(edges), budget);
}

inline EdgeSet set_of(const Instance& g, std::initializer_list<int> ids) {
    EdgeSet s(g.edge_count());
    for (int id : ids) s.insert(id);
    return s;
}

// Independent rank oracle: a plain recursive disjoint-set union, separate
// from the library's union-find.
class RankOracle {
public:
    explicit RankOracle(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int root(int x) { return parent_[x] == x ? x : parent_[x] = root(parent_[x]); }
    bool join(int a, int b) {
        a = root(a);
        b = root(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

inline int kruskal_rank(const Instance& g, const EdgeSet& active) {
    RankOracle dsu(g.vertex_count());
    int rank = 0;
    active.for_each([&](int id) {
        if (dsu.join(g.edge(id).u, g.edge(id).v)) ++rank;
    });
    return rank;
}

// Exhaustive bipartition oracle for the global minimum cut, n <= 7.
inline std::optional<int64_t> min_cut_by_enumeration(const Instance& g, const EdgeSet& active,
                                                     bool interdictable_only) {
    int n = g.vertex_count();
    std::optional<int64_t> best;
    for (int side = 1; side < (1 << n) - 1; side += 2) {  // vertex 0 always on side A
        int64_t cost = 0;
        bool cuttable = true;
        active.for_each([&](int id) {
            const Edge& e = g.edge(id);
            if (((side >> e.u) & 1) == ((side >> e.v) & 1)) return;
            if (interdictable_only && !e.interdictable) cuttable = false;
            else cost += e.cost;
        });
        if (!cuttable) continue;
        if (!best || cost < *best) best = cost;
    }
    return best;
}

// Deterministic random corpus of prepared decompositions.
struct CorpusItem {
    Instance raw;
    Instance rounded;
    Prepared prepared;
};

inline std::optional<CorpusItem> prepared_from_seed(uint64_t seed, const GeneratorParams& base) {
    GeneratorParams params = base;
    params.seed = seed;
    std::mt19937_64 rng(seed * 77 + 1);
    params.vertex_count = 3 + static_cast<int>(rng() % std::max(1, base.vertex_count - 2));
    int min_edges = params.vertex_count - 1;
    params.edge_count =
        std::max(min_edges, min_edges + static_cast<int>(rng() % std::max(1, base.edge_count - min_edges + 1)));
    // Budgets up to half the total cost; small fractions survive the
    // non-disconnection assumption far more often.
    params.budget_den = 2 + static_cast<int64_t>(rng() % 7);
    Instance raw = generate(params);
    auto [rounded, cert] = round_weights(raw);
    PrepareResult res = prepare(rounded);
    if (auto* prep = std::get_if<Prepared>(&res))
        return CorpusItem{std::move(raw), std::move(rounded), std::move(*prep)};
    return std::nullopt;
}

inline GeneratorParams dense_corpus_params() {
    GeneratorParams p;
    p.vertex_count = 8;   // upper bound fed to prepared_from_seed
    p.edge_count = 16;    // interdictable edge cap
    p.max_weight = 8;
    p.max_cost = 5;
    return p;
}

// Random removal set over the decomposition's removable edges; empty optional
// when the requested budget relation cannot be met.
inline std::optional<EdgeSet> random_removal(const LevelDecomposition& dec, std::mt19937_64& rng,
                                             bool over_budget) {
    std::vector<int> pool = dec.removable.to_vector();
    std::shuffle(pool.begin(), pool.end(), rng);
    EdgeSet u(dec.instance.edge_count());
    int64_t cost = 0;
    if (over_budget) {
        for (int id : pool) {
            u.insert(id);
            cost += dec.instance.edge(id).cost;
            if (cost > dec.instance.budget() && rng() % 3 == 0) break;
        }
        if (cost <= dec.instance.budget()) return std::nullopt;
        return u;
    }
    for (int id : pool)
        if (rng() % 2 == 0) u.insert(id);
    return u;
}

}  // namespace mstint::test
