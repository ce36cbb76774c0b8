#include "mstint/solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mstint {

const char* SolveReport::case_name(Case c) {
    switch (c) {
        case Case::exact_hit: return "1";
        case Case::full_removal: return "2";
        case Case::bracketed: return "3";
        default: return "frozen";
    }
}

namespace {

struct SearchBest {
    bool found = false;
    int64_t value = 0;
    EdgeSet removal;

    void offer(int64_t v, const EdgeSet& r) {
        if (!found || v > value || (v == value && r.lex_less(removal))) {
            found = true;
            value = v;
            removal = r;
        }
    }
};

// Kruskal over the non-removed edges; nullopt when disconnected.
std::optional<int64_t> mst_skipping(const Instance& g, const std::vector<char>& removed) {
    UnionFind uf(g.vertex_count());
    int64_t total = 0;
    for (int id : g.sorted_by_weight()) {
        if (removed[id]) continue;
        const Edge& e = g.edge(id);
        if (uf.unite(e.u, e.v)) total = checked_add(total, e.weight);
    }
    if (uf.components() != 1) return std::nullopt;
    return total;
}

void exact_dfs(const Instance& g, const std::vector<int>& ids, size_t idx,
               std::vector<char>& removed, EdgeSet& current, int64_t cost, SearchBest& best) {
    if (idx == ids.size()) {
        if (auto v = mst_skipping(g, removed)) best.offer(*v, current);
        return;
    }
    int id = ids[idx];
    exact_dfs(g, ids, idx + 1, removed, current, cost, best);
    if (cost + g.edge(id).cost <= g.budget()) {
        removed[id] = 1;
        current.insert(id);
        exact_dfs(g, ids, idx + 1, removed, current, cost + g.edge(id).cost, best);
        current.erase(id);
        removed[id] = 0;
    }
}

ExactResult exact_search(const Instance& g, int limit, bool parallel) {
    std::vector<int> ids = g.interdictable_edges().to_vector();
    if (static_cast<int>(ids.size()) > limit)
        throw std::invalid_argument("too many interdictable edges for exhaustive search");

    SearchBest best;
    int m = static_cast<int>(ids.size());
    int split = parallel ? std::min(m, 6) : 0;
    int prefixes = 1 << split;

    std::vector<SearchBest> parts(prefixes);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int prefix = 0; prefix < prefixes; ++prefix) {
        std::vector<char> removed(g.edge_count(), 0);
        EdgeSet current(g.edge_count());
        int64_t cost = 0;
        bool feasible = true;
        for (int j = 0; j < split; ++j) {
            if ((prefix >> j) & 1) {
                cost += g.edge(ids[j]).cost;
                removed[ids[j]] = 1;
                current.insert(ids[j]);
            }
        }
        if (cost > g.budget()) feasible = false;
        if (feasible) exact_dfs(g, ids, split, removed, current, cost, parts[prefix]);
    }
    for (const SearchBest& part : parts) {
        if (!part.found) continue;
        best.offer(part.value, part.removal);
    }
    if (!best.found) throw std::runtime_error("instance has no connected feasible state");
    return {best.removal, best.value};
}

}  // namespace

ExactResult exact_opt(const Instance& g, int limit) { return exact_search(g, limit, true); }

ExactResult exact_opt_serial(const Instance& g, int limit) { return exact_search(g, limit, false); }

EdgeSet best_of_two(const LevelDecomposition& dec, const EdgeSet& over_budget_set) {
    const Instance& g = dec.instance;
    if (cost_sum(g, over_budget_set) <= g.budget())
        throw std::invalid_argument("best_of_two expects an over-budget removal set");

    EdgeSet r1 = algorithm2(dec, over_budget_set).removal_set;
    const EdgeSet& r2 = dec.cheapest_split_cut;
    assert(dec.cheapest_split_cost <= g.budget());

    int64_t v1 = val(g, r1);
    int64_t v2 = val(g, r2);
    return v1 >= v2 ? r1 : r2;
}

EdgeSet algorithm1(const LevelDecomposition& dec, const ParetoPoint& lower,
                   const ParetoPoint& upper, const Rational& bound) {
    // First branch: val(U_1) >= nu_star / 7, compared exactly.
    if ((__int128)7 * bound.den() * lower.value >= (__int128)bound.num())
        return lower.witness;
    return best_of_two(dec, upper.witness);
}

SolveResult solve(const Instance& raw) {
    auto [rounded, cert] = round_weights(raw);

    PrepareResult prep = prepare(rounded);
    if (auto* rej = std::get_if<Reject>(&prep)) return *rej;

    SolveReport report;
    report.removal = EdgeSet(raw.edge_count());

    if (std::holds_alternative<Frozen>(prep)) {
        report.case_taken = SolveReport::Case::frozen;
    } else {
        Prepared& ready = std::get<Prepared>(prep);
        const LevelDecomposition& dec = ready.dec;
        report.reductions_applied = ready.reductions_applied;

        ParetoFront front = extreme_supported_tuples(dec);
        BudgetCase where = locate_budget(front, dec.instance.budget());

        EdgeSet chosen(dec.instance.edge_count());
        if (auto* hit = std::get_if<CaseExactHit>(&where)) {
            report.case_taken = SolveReport::Case::exact_hit;
            chosen = hit->point.witness;
        } else if (std::holds_alternative<CaseFullRemoval>(where)) {
            report.case_taken = SolveReport::Case::full_removal;
            if (cost_sum(dec.instance, dec.removable) <= dec.instance.budget())
                chosen = dec.removable;
            else
                chosen = front.points.back().witness;  // same value, within budget
        } else {
            auto& bracket = std::get<CaseBracketed>(where);
            report.case_taken = SolveReport::Case::bracketed;
            Rational bound = nu_star(bracket.lower, bracket.upper, dec.instance.budget());
            report.upper_bound = bound;
            chosen = algorithm1(dec, bracket.lower, bracket.upper, bound);

            EdgeSet wl(raw.edge_count()), wu(raw.edge_count());
            bracket.lower.witness.for_each([&](int id) { wl.insert(ready.orig_edge_of[id]); });
            bracket.upper.witness.for_each([&](int id) { wu.insert(ready.orig_edge_of[id]); });
            report.witness_lower = wl;
            report.witness_upper = wu;
        }

        assert(cost_sum(dec.instance, chosen) <= dec.instance.budget());
        chosen.for_each([&](int id) {
            assert(dec.instance.edge(id).interdictable);
            int orig = ready.orig_edge_of[id];
            if (orig < 0) throw std::logic_error("solver selected a preprocessing edge");
            report.removal.insert(orig);
        });
    }

    EdgeSet keep_raw = raw.all_edges() - report.removal;
    auto orig_value = mst_weight(raw, keep_raw);
    auto round_value = mst_weight(rounded, keep_raw);
    if (!orig_value || !round_value)
        throw std::logic_error("interdiction set disconnected the instance");
    report.value_original = *orig_value;
    report.value_rounded = *round_value;
    assert(cost_sum(raw, report.removal) <= raw.budget());
    return report;
}

}  // namespace mstint
