#include "mstint/patterns.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mstint {

namespace {

bool rho_before(const PartitionTower& t, int level, int a, int b) {
    int c = compare(t.rho(level, a), t.rho(level, b));
    if (c != 0) return c > 0;
    if (t.g(level, a) != t.g(level, b)) return t.g(level, a) > t.g(level, b);
    return t.level(level).min_vertex[a] < t.level(level).min_vertex[b];
}

}  // namespace

PartitionTower::PartitionTower(const LevelDecomposition& dec, EdgeSet removal)
    : dec_(&dec), removal_(std::move(removal)) {
    if (!removal_.is_subset_of(dec.removable))
        throw std::invalid_argument("removal set must consist of removable edges");

    const Instance& g = dec.instance;
    int n = g.vertex_count();
    int p = dec.p;
    levels_.resize(p + 2);

    UnionFind uf(n);
    for (int i = -1; i <= p; ++i) {
        dec.level(i).for_each([&](int id) {
            if (!removal_.contains(id)) uf.unite(g.edge(id).u, g.edge(id).v);
        });
        Level& lv = levels_[i + 1];
        lv.block_of.assign(n, -1);
        std::vector<int> of_root(n, -1);
        for (int v = 0; v < n; ++v) {
            int root = uf.find(v);
            if (of_root[root] < 0) {
                of_root[root] = lv.block_count++;
                lv.min_vertex.push_back(v);
            }
            lv.block_of[v] = of_root[root];
        }
    }
    assert(levels_[p + 1].block_count == 1);

    for (int i = 0; i <= p; ++i) {
        Level& fine = levels_[i];
        Level& coarse = levels_[i + 1];
        fine.parent.assign(fine.block_count, -1);
        coarse.children.assign(coarse.block_count, {});
        for (int b = 0; b < fine.block_count; ++b) {
            int par = coarse.block_of[fine.min_vertex[b]];
            fine.parent[b] = par;
            coarse.children[par].push_back(b);
        }
    }

    // kappa_i(A) = c(removal edges of U_{<=i} crossing A) + 2c(those inside A).
    for (int i = -1; i <= p; ++i) {
        Level& lv = levels_[i + 1];
        lv.kappa.assign(lv.block_count, 0);
        removal_.for_each([&](int id) {
            if (dec.level_of[id] > i) return;
            const Edge& e = g.edge(id);
            int bu = lv.block_of[e.u], bv = lv.block_of[e.v];
            if (bu == bv) {
                lv.kappa[bu] = checked_add(lv.kappa[bu], checked_mul(2, e.cost));
            } else {
                lv.kappa[bu] = checked_add(lv.kappa[bu], e.cost);
                lv.kappa[bv] = checked_add(lv.kappa[bv], e.cost);
            }
        });
    }

    // g_i(A) = 2^i + sum of children's g, counting every descendant block
    // weighted by its level.
    levels_[0].g.assign(levels_[0].block_count, 1);
    for (int i = 0; i <= p; ++i) {
        Level& lv = levels_[i + 1];
        lv.g.assign(lv.block_count, 0);
        for (int b = 0; b < lv.block_count; ++b) {
            int64_t total = int64_t(1) << i;
            for (int c : lv.children[b]) total = checked_add(total, levels_[i].g[c]);
            lv.g[b] = total;
        }
    }
}

int PartitionTower::ancestor(int from_level, int block, int to_level) const {
    int b = block;
    for (int i = from_level; i < to_level; ++i) b = levels_[i + 1].parent[b];
    return b;
}

PartitionTower build_tower(const LevelDecomposition& dec, const EdgeSet& removal) {
    return PartitionTower(dec, removal);
}

EdgeSet pattern_edges(const PartitionTower& tower, const RemovalPattern& pattern) {
    const LevelDecomposition& dec = tower.decomposition();
    const Instance& g = dec.instance;
    EdgeSet r(g.edge_count());
    tower.removal().for_each([&](int id) {
        const Edge& e = g.edge(id);
        int lv = dec.level_of[id];
        for (const PatternTuple& t : pattern.tuples) {
            if (lv > t.level) continue;
            const auto& block_of = tower.level(t.level).block_of;
            if (block_of[e.u] == t.block || block_of[e.v] == t.block) {
                r.insert(id);
                break;
            }
        }
    });
    return r;
}

Algorithm2Result algorithm2(const PartitionTower& tower) {
    const LevelDecomposition& dec = tower.decomposition();
    const Instance& g = dec.instance;
    int64_t budget = g.budget();
    if (cost_sum(g, tower.removal()) <= budget)
        throw std::invalid_argument("algorithm2 requires an over-budget removal set");

    Algorithm2Result out;
    out.removal_set = EdgeSet(g.edge_count());

    int level = tower.p() - 1;
    int parent_block = 0;  // the single block of A_p

    while (level != -2) {
        std::vector<int> order = tower.level(level + 1).children[parent_block];
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return rho_before(tower, level, a, b); });

        Algorithm2Result::Iteration it;
        it.level = level;
        it.parent_block = parent_block;
        it.sorted_children = order;
        it.pattern_before = out.pattern;
        it.removal_before = out.removal_set;

        int taken = 0;
        for (int q : order) {
            // Marginal edges: removal edges of U_{<=level} touching q, not yet in R.
            EdgeSet fresh(g.edge_count());
            int64_t marginal = 0;
            const auto& block_of = tower.level(level).block_of;
            tower.removal().for_each([&](int id) {
                if (dec.level_of[id] > level || out.removal_set.contains(id) || fresh.contains(id))
                    return;
                const Edge& e = g.edge(id);
                if (block_of[e.u] == q || block_of[e.v] == q) {
                    fresh.insert(id);
                    marginal = checked_add(marginal, e.cost);
                }
            });
            if (checked_add(out.cost, marginal) > budget) break;
            out.pattern.tuples.push_back({level, q});
            out.removal_set |= fresh;
            out.cost += marginal;
            ++taken;
        }
        it.taken = taken;
        out.trace.push_back(std::move(it));

        if (taken < static_cast<int>(order.size())) {
            parent_block = order[taken];
            --level;
        } else {
            level = -2;
        }
    }
    return out;
}

Algorithm2Result algorithm2(const LevelDecomposition& dec, const EdgeSet& removal) {
    PartitionTower tower(dec, removal);
    return algorithm2(tower);
}

OverBudgetPattern overbudget_pattern(const PartitionTower& tower, const Algorithm2Result& run) {
    const Instance& g = tower.decomposition().instance;
    int64_t budget = g.budget();

    int pick = -1;
    for (int i = 0; i < static_cast<int>(run.trace.size()); ++i) {
        const auto& it = run.trace[i];
        if (it.taken < static_cast<int>(it.sorted_children.size())) pick = i;
    }
    // Every removal edge touches some block of the full top partition, so an
    // all-affordable run would contradict c(U) > B.
    if (pick < 0) throw std::logic_error("over-budget replay requires an iteration with s < h");

    const auto& it = run.trace[pick];
    OverBudgetPattern out;
    out.pattern = it.pattern_before;
    for (int k = 0; k <= it.taken; ++k)
        out.pattern.tuples.push_back({it.level, it.sorted_children[k]});
    out.removal_set = pattern_edges(tower, out.pattern);
    out.cost = cost_sum(g, out.removal_set);
    out.boost_level = it.level;
    if (out.cost <= budget) throw std::logic_error("over-budget pattern must exceed the budget");
    return out;
}

bool validate_efficient(const PartitionTower& tower, const RemovalPattern& pattern) {
    int p = tower.p();
    for (const PatternTuple& t : pattern.tuples)
        if (t.level < -1 || t.level >= p) return false;

    // Pattern blocks must be pairwise disjoint; a block at a lower level
    // intersects a higher one exactly when it sits in its subtree.
    for (size_t x = 0; x < pattern.tuples.size(); ++x) {
        for (size_t y = x + 1; y < pattern.tuples.size(); ++y) {
            PatternTuple lo = pattern.tuples[x], hi = pattern.tuples[y];
            if (lo.level > hi.level) std::swap(lo, hi);
            if (tower.ancestor(lo.level, lo.block, hi.level) == hi.block) return false;
        }
    }

    for (int i = 0; i <= p; ++i) {
        for (int a = 0; a < tower.level(i).block_count; ++a) {
            std::vector<PatternTuple> inside, outside;
            for (const PatternTuple& t : pattern.tuples) {
                if (t.level >= i) continue;
                if (tower.ancestor(t.level, t.block, i) == a) inside.push_back(t);
                else outside.push_back(t);
            }
            if (inside.empty()) continue;      // condition (i)
            if (!outside.empty()) return false;  // every deep tuple must sit under A

            const std::vector<int>& children = tower.level(i).children[a];
            std::vector<char> selected(children.size(), 0);
            std::vector<PatternTuple> deeper;
            for (const PatternTuple& t : inside) {
                if (t.level == i - 1) {
                    auto pos = std::find(children.begin(), children.end(), t.block);
                    selected[pos - children.begin()] = 1;
                } else {
                    deeper.push_back(t);
                }
            }

            int h = static_cast<int>(children.size());
            int s = 0;
            for (char c : selected) s += c;

            if (s == h) {
                if (!deeper.empty()) return false;
                continue;
            }
            // Some nonincreasing-rho order must put the selected children first.
            for (int x = 0; x < h; ++x) {
                if (!selected[x]) continue;
                for (int y = 0; y < h; ++y) {
                    if (selected[y]) continue;
                    if (compare(tower.rho(i - 1, children[x]), tower.rho(i - 1, children[y])) < 0)
                        return false;
                }
            }
            if (!deeper.empty()) {
                // All deeper tuples descend from one unselected child placeable
                // at position s+1, i.e. rho-maximal among the unselected.
                int host = tower.ancestor(deeper.front().level, deeper.front().block, i - 1);
                auto pos = std::find(children.begin(), children.end(), host);
                if (pos == children.end() || selected[pos - children.begin()]) return false;
                for (const PatternTuple& t : deeper)
                    if (tower.ancestor(t.level, t.block, i - 1) != host) return false;
                for (int y = 0; y < h; ++y) {
                    if (selected[y] || children[y] == host) continue;
                    if (compare(tower.rho(i - 1, host), tower.rho(i - 1, children[y])) < 0)
                        return false;
                }
            }
        }
    }
    return true;
}

PatternTables pattern_functions(const PartitionTower& tower, const RemovalPattern& pattern) {
    int p = tower.p();
    PatternTables tab;
    tab.kappa_w.resize(p + 2);
    tab.g_w.resize(p + 2);
    tab.covered.resize(p + 2);
    for (int i = -1; i <= p; ++i) {
        tab.kappa_w[i + 1].assign(tower.level(i).block_count, 0);
        tab.g_w[i + 1].assign(tower.level(i).block_count, 0);
        tab.covered[i + 1].assign(tower.level(i).block_count, 0);
    }

    for (const PatternTuple& t : pattern.tuples) {
        int64_t k = tower.kappa(t.level, t.block);
        int64_t g = tower.g(t.level, t.block);
        int b = t.block;
        for (int i = t.level; i <= p; ++i) {
            tab.kappa_w[i + 1][b] = checked_add(tab.kappa_w[i + 1][b], k);
            tab.g_w[i + 1][b] = checked_add(tab.g_w[i + 1][b], g);
            if (i < p) b = tower.level(i).parent[b];
        }
        // Descendant blocks of the tuple form S_l below its level.
        std::vector<PatternTuple> stack{{t.level, t.block}};
        while (!stack.empty()) {
            PatternTuple cur = stack.back();
            stack.pop_back();
            tab.covered[cur.level + 1][cur.block] = 1;
            if (cur.level > -1)
                for (int c : tower.level(cur.level).children[cur.block])
                    stack.push_back({cur.level - 1, c});
        }
    }

    tab.kappa_w_top = tab.kappa_w[p + 1][0];
    tab.g_w_top = tab.g_w[p + 1][0];
    return tab;
}

PrefixDominance prefix_dominance(std::span<const int64_t> a, std::span<const int64_t> b,
                                 int q, const Rational& lambda) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("sequence size mismatch");
    int k = static_cast<int>(a.size());
    if (q < 1 || q > k) throw std::invalid_argument("prefix index out of range");
    for (int j = 0; j < k; ++j)
        if (a[j] < 0 || b[j] < 0) throw std::invalid_argument("sequences must be nonnegative");

    for (int j = 0; j + 1 < k; ++j)
        if (compare_ratio(a[j], b[j], a[j + 1], b[j + 1]) < 0) return PrefixDominance::ratios_not_sorted;
    if (lambda < Rational(0) || lambda > Rational(1)) return PrefixDominance::lambda_out_of_range;

    int64_t sum_a = 0, sum_b = 0, pre_a = 0, pre_b = 0;
    for (int j = 0; j < k; ++j) {
        sum_a = checked_add(sum_a, a[j]);
        sum_b = checked_add(sum_b, b[j]);
        if (j < q - 1) {
            pre_a = checked_add(pre_a, a[j]);
            pre_b = checked_add(pre_b, b[j]);
        }
    }
    // Scaled by lambda's denominator: prefix + lambda * element q.
    int64_t num = lambda.num(), den = lambda.den();
    int64_t pref_a = checked_add(checked_mul(den, pre_a), checked_mul(num, a[q - 1]));
    int64_t pref_b = checked_add(checked_mul(den, pre_b), checked_mul(num, b[q - 1]));
    if (pref_b <= 0) return PrefixDominance::zero_denominator;

    __int128 lhs = (__int128)sum_a * pref_b;
    __int128 rhs = (__int128)pref_a * sum_b;
    return lhs <= rhs ? PrefixDominance::holds : PrefixDominance::violated;
}

}  // namespace mstint
