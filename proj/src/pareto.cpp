#include "mstint/pareto.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mstint {

namespace {

// val of the removal set given by `mask` over ground positions, by one
// level-ordered union-find sweep. Scratch is per call; safe across threads.
int64_t val_by_mask(const LevelDecomposition& dec, const std::vector<int>& ground_pos,
                    uint64_t mask) {
    const Instance& g = dec.instance;
    UnionFind uf(g.vertex_count());
    const std::vector<int>& order = g.sorted_by_weight();
    size_t next = 0;
    int64_t total = 0;
    for (int level = -1; level < dec.p; ++level) {
        while (next < order.size() && dec.level_of[order[next]] <= level) {
            int id = order[next++];
            int pos = ground_pos[id];
            if (pos >= 0 && ((mask >> pos) & 1)) continue;
            uf.unite(g.edge(id).u, g.edge(id).v);
        }
        int64_t sigma = uf.components();
        int64_t coeff = level < 0 ? 1 : (int64_t(1) << level);
        total = checked_add(total, checked_mul(coeff, sigma - 1));
    }
    return total;
}

}  // namespace

SubmodularObjective::SubmodularObjective(const LevelDecomposition& dec) : dec_(&dec) {
    ground_ = dec.removable.to_vector();
    ground_pos_.assign(dec.instance.edge_count(), -1);
    for (size_t i = 0; i < ground_.size(); ++i) ground_pos_[ground_[i]] = static_cast<int>(i);
    val_empty_ = val_by_mask(dec, ground_pos_, 0);
    val_full_ = size() >= 64 ? val(dec.instance, dec.removable)
                             : val_by_mask(dec, ground_pos_, size() ? ~uint64_t(0) >> (64 - size()) : 0);

    int m = size();
    if (m > 0 && m <= kTableLimit) {
        size_t total = size_t(1) << m;
        cost_table_.assign(total, 0);
        for (size_t mask = 1; mask < total; ++mask) {
            int low = __builtin_ctzll(mask);
            cost_table_[mask] = cost_table_[mask & (mask - 1)] + dec.instance.edge(ground_[low]).cost;
        }
        val_table_.assign(total, 0);
#pragma omp parallel for schedule(static)
        for (int64_t mask = 0; mask < static_cast<int64_t>(total); ++mask)
            val_table_[mask] = val_by_mask(dec, ground_pos_, static_cast<uint64_t>(mask));
    }
}

int64_t SubmodularObjective::cost_of_mask(uint32_t mask) const {
    if (!cost_table_.empty()) return cost_table_[mask];
    int64_t c = 0;
    uint32_t bits = mask;
    while (bits) {
        int pos = __builtin_ctz(bits);
        c += dec_->instance.edge(ground_[pos]).cost;
        bits &= bits - 1;
    }
    return c;
}

int64_t SubmodularObjective::val_of_mask(uint32_t mask) const {
    if (!val_table_.empty()) return val_table_[mask];
    return val_by_mask(*dec_, ground_pos_, mask);
}

EdgeSet SubmodularObjective::mask_to_set(uint32_t mask) const {
    EdgeSet s(dec_->instance.edge_count());
    uint32_t bits = mask;
    while (bits) {
        int pos = __builtin_ctz(bits);
        s.insert(ground_[pos]);
        bits &= bits - 1;
    }
    return s;
}

uint32_t SubmodularObjective::set_to_mask(const EdgeSet& s) const {
    uint32_t mask = 0;
    s.for_each([&](int id) { mask |= uint32_t(1) << ground_pos_[id]; });
    return mask;
}

namespace {

struct ExhaustiveState {
    __int128 best;
    uint64_t and_mask;
    uint64_t or_mask;
};

SfmResult sfm_exhaustive(const SubmodularObjective& f, const Rational& lambda, bool parallel) {
    int m = f.size();
    if (m > SubmodularObjective::kExhaustiveLimit)
        throw std::invalid_argument("ground set too large for exhaustive minimization");
    int64_t num = lambda.num(), den = lambda.den();
    uint64_t total = uint64_t(1) << m;

    ExhaustiveState global{(__int128)num * f.cost_of_mask(0) - (__int128)den * f.val_of_mask(0), 0, 0};

    auto scan = [&](uint64_t lo, uint64_t hi, ExhaustiveState& st) {
        for (uint64_t mask = lo; mask < hi; ++mask) {
            __int128 v = (__int128)num * f.cost_of_mask(static_cast<uint32_t>(mask)) -
                         (__int128)den * f.val_of_mask(static_cast<uint32_t>(mask));
            if (v < st.best) {
                st.best = v;
                st.and_mask = mask;
                st.or_mask = mask;
            } else if (v == st.best) {
                st.and_mask &= mask;
                st.or_mask |= mask;
            }
        }
    };

    if (!parallel) {
        scan(0, total, global);
    } else {
#ifdef _OPENMP
        int threads = omp_get_max_threads();
#else
        int threads = 1;
#endif
        std::vector<ExhaustiveState> parts(threads, global);
#pragma omp parallel for schedule(static)
        for (int t = 0; t < threads; ++t) {
            uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
            scan(lo, hi, parts[t]);
        }
        for (const ExhaustiveState& st : parts) {
            if (st.best < global.best) global = st;
            else if (st.best == global.best) {
                global.and_mask &= st.and_mask;
                global.or_mask |= st.or_mask;
            }
        }
    }

    SfmResult res;
    res.minimal = f.mask_to_set(static_cast<uint32_t>(global.and_mask));
    res.maximal = f.mask_to_set(static_cast<uint32_t>(global.or_mask));
    res.scaled_value = static_cast<int64_t>(global.best);
    if ((__int128)res.scaled_value != global.best) throw std::overflow_error("sfm value overflow");
    res.value = Rational(res.scaled_value, den);
    return res;
}

// ---------------------------------------------------------------------------
// Min-norm-point backend (Fujishige-Wolfe over the base polytope of the
// normalized scaled objective), with exact integral certificates.

// f(T) = num*c(T) - den*(val(T | forced) - val(forced)) + size_coeff*|T|
// over `ground`. The cardinality term carves canonical minimizers out of the
// minimizer lattice.
struct GroundFunction {
    const LevelDecomposition* dec;
    std::vector<int> ground;
    EdgeSet forced;
    int64_t num = 0, den = 1;
    int64_t val_forced = 0;
    int64_t size_coeff = 0;

    int m() const { return static_cast<int>(ground.size()); }

    // f on every prefix of ground[order[0..k]], one union-find pass per level.
    std::vector<int64_t> chain(const std::vector<int>& order) const {
        const Instance& g = dec->instance;
        int k = static_cast<int>(order.size());
        std::vector<char> in_chain(g.edge_count(), 0);
        for (int pos : order) in_chain[ground[pos]] = 1;

        std::vector<int64_t> vals(k + 1, 0);
        for (int level = -1; level < dec->p; ++level) {
            UnionFind uf(g.vertex_count());
            dec->prefix(level).for_each([&](int id) {
                if (forced.contains(id) || in_chain[id]) return;
                uf.unite(g.edge(id).u, g.edge(id).v);
            });
            int64_t coeff = level < 0 ? 1 : (int64_t(1) << level);
            vals[k] = checked_add(vals[k], checked_mul(coeff, int64_t(uf.components()) - 1));
            for (int j = k - 1; j >= 0; --j) {
                int id = ground[order[j]];
                if (dec->level_of[id] <= level) uf.unite(g.edge(id).u, g.edge(id).v);
                vals[j] = checked_add(vals[j], checked_mul(coeff, int64_t(uf.components()) - 1));
            }
        }
        std::vector<int64_t> out(k);
        int64_t cost_prefix = 0;
        for (int j = 0; j < k; ++j) {
            cost_prefix = checked_add(cost_prefix, g.edge(ground[order[j]]).cost);
            out[j] = checked_add(checked_mul(num, cost_prefix),
                                 -checked_mul(den, checked_add(vals[j + 1], -val_forced)));
            out[j] = checked_add(out[j], checked_mul(size_coeff, j + 1));
        }
        return out;
    }

    int64_t eval_positions(const std::vector<int>& positions) const {
        if (positions.empty()) return 0;
        std::vector<int64_t> ch = chain(positions);
        return ch.back();
    }
};

struct MnpOutcome {
    int64_t min_value = 0;
    std::vector<int> minimizer_positions;
};

// Wolfe's algorithm. Vertices of the base polytope come from the greedy rule;
// the loop stops as soon as an exact integral certificate closes the gap:
// f is integer valued, any x in B(f) lower-bounds min f by sum(min(x_e, 0)).
MnpOutcome min_norm_point(const GroundFunction& f) {
    int m = f.m();
    MnpOutcome out;
    if (m == 0) return out;

    auto greedy_vertex = [&](const std::vector<double>& weights) {
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return weights[a] < weights[b]; });
        std::vector<int64_t> ch = f.chain(order);
        std::vector<double> v(m);
        int64_t prev = 0;
        for (int j = 0; j < m; ++j) {
            v[order[j]] = static_cast<double>(ch[j] - prev);
            prev = ch[j];
        }
        return std::pair(v, order);
    };

    // Best integral upper bound among all prefixes of the x-ascending order.
    auto certify = [&](const std::vector<double>& x, std::vector<int>& best_set) {
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
        std::vector<int64_t> ch = f.chain(order);
        int64_t best = 0;  // empty set
        int best_len = 0;
        for (int j = 0; j < m; ++j)
            if (ch[j] < best) {
                best = ch[j];
                best_len = j + 1;
            }
        best_set.assign(order.begin(), order.begin() + best_len);
        std::sort(best_set.begin(), best_set.end());
        double lower = 0;
        for (double c : x) lower += std::min(c, 0.0);
        return std::pair(best, lower);
    };

    std::vector<std::vector<double>> corral;
    std::vector<double> weights;
    auto [v0, o0] = greedy_vertex(std::vector<double>(m, 0.0));
    corral.push_back(v0);
    weights.push_back(1.0);
    std::vector<double> x = v0;

    const int max_major = 200 * m * m + 2000;
    for (int major = 0; major < max_major; ++major) {
        std::vector<int> best_set;
        auto [upper, lower] = certify(x, best_set);
        if (static_cast<double>(upper) - lower < 0.5 - 1e-7) {
            out.min_value = upper;
            out.minimizer_positions = best_set;
            return out;
        }

        auto [q, qo] = greedy_vertex(x);
        double xx = 0, xq = 0;
        for (int i = 0; i < m; ++i) {
            xx += x[i] * x[i];
            xq += x[i] * q[i];
        }
        if (xq >= xx - 1e-12 * (1.0 + std::abs(xx)))
            break;  // no improving vertex; fall through to the stall handler
        corral.push_back(q);
        weights.push_back(0.0);

        for (int minor = 0; minor < 10 * m + 100; ++minor) {
            // Affine minimization over the corral: bordered Gram system.
            int r = static_cast<int>(corral.size());
            std::vector<std::vector<double>> a(r + 1, std::vector<double>(r + 2, 0.0));
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j) {
                    double dot = 0;
                    for (int t = 0; t < m; ++t) dot += corral[i][t] * corral[j][t];
                    a[i][j] = dot;
                }
                a[i][r] = 1.0;
                a[i][r + 1] = 0.0;
            }
            for (int j = 0; j < r; ++j) a[r][j] = 1.0;
            a[r][r + 1] = 1.0;
            // Gaussian elimination with partial pivoting.
            std::vector<double> alpha(r, 0.0);
            {
                int nrow = r + 1, ncol = r + 1;
                for (int col = 0; col < ncol; ++col) {
                    int piv = col;
                    for (int row = col + 1; row < nrow; ++row)
                        if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
                    std::swap(a[col], a[piv]);
                    if (std::abs(a[col][col]) < 1e-13) { a[col][col] = 1e-13; }
                    for (int row = 0; row < nrow; ++row) {
                        if (row == col) continue;
                        double fac = a[row][col] / a[col][col];
                        for (int c2 = col; c2 <= ncol; ++c2) a[row][c2] -= fac * a[col][c2];
                    }
                }
                for (int i = 0; i < r; ++i) alpha[i] = a[i][ncol] / a[i][i];
            }

            double min_alpha = 1e30;
            for (double v : alpha) min_alpha = std::min(min_alpha, v);
            if (min_alpha > 1e-10) {
                weights = alpha;
                break;
            }
            // Step towards the affine minimizer until a weight hits zero.
            double theta = 1.0;
            for (int i = 0; i < r; ++i)
                if (alpha[i] < 1e-12 && weights[i] - alpha[i] > 1e-15)
                    theta = std::min(theta, weights[i] / (weights[i] - alpha[i]));
            for (int i = 0; i < r; ++i) weights[i] = (1 - theta) * weights[i] + theta * alpha[i];
            for (int i = r - 1; i >= 0; --i) {
                if (weights[i] <= 1e-12) {
                    corral.erase(corral.begin() + i);
                    weights.erase(weights.begin() + i);
                }
            }
        }

        x.assign(m, 0.0);
        for (size_t i = 0; i < corral.size(); ++i)
            for (int t = 0; t < m; ++t) x[t] += weights[i] * corral[i][t];
    }

    // Stalled before certifying: fall back to exhaustive search when feasible.
    if (m <= SubmodularObjective::kExhaustiveLimit) {
        int64_t best = 0;
        uint64_t best_mask = 0;
        for (uint64_t mask = 1; mask < (uint64_t(1) << m); ++mask) {
            std::vector<int> pos;
            for (int i = 0; i < m; ++i)
                if ((mask >> i) & 1) pos.push_back(i);
            int64_t v = f.eval_positions(pos);
            if (v < best) { best = v; best_mask = mask; }
        }
        out.min_value = best;
        out.minimizer_positions.clear();
        for (int i = 0; i < m; ++i)
            if ((best_mask >> i) & 1) out.minimizer_positions.push_back(i);
        return out;
    }
    throw std::runtime_error("min-norm-point failed to certify a minimizer");
}

SfmResult sfm_min_norm(const SubmodularObjective& f, const Rational& lambda) {
    const LevelDecomposition& dec = f.decomposition();
    int64_t scale = f.size() + 1;
    // With f integer valued, (m+1) f(U) + |U| has the minimal minimizer of f
    // as its unique minimizer: every f-minimizer contains it, so it is the
    // strictly smallest one. The -|U| copy isolates the maximal minimizer.
    GroundFunction minus{&dec,
                         f.ground(),
                         EdgeSet(dec.instance.edge_count()),
                         checked_mul(scale, lambda.num()),
                         checked_mul(scale, lambda.den()),
                         f.val_empty(),
                         1};
    GroundFunction plus = minus;
    plus.size_coeff = -1;

    MnpOutcome lo = min_norm_point(minus);
    MnpOutcome hi = min_norm_point(plus);

    SfmResult res;
    res.minimal = EdgeSet(dec.instance.edge_count());
    for (int p : lo.minimizer_positions) res.minimal.insert(f.ground()[p]);
    res.maximal = EdgeSet(dec.instance.edge_count());
    for (int p : hi.minimizer_positions) res.maximal.insert(f.ground()[p]);

    int64_t lo_size = static_cast<int64_t>(lo.minimizer_positions.size());
    int64_t hi_size = static_cast<int64_t>(hi.minimizer_positions.size());
    int64_t base_min = checked_add(lo.min_value, -lo_size);
    if (base_min % scale != 0 || checked_add(hi.min_value, hi_size) != base_min)
        throw std::logic_error("perturbed minimizations disagree on the base minimum");
    base_min /= scale;
    if (!res.minimal.is_subset_of(res.maximal))
        throw std::logic_error("canonical minimizers must nest");

    // Report in unnormalized form num*c - den*val.
    res.scaled_value = checked_add(base_min, -checked_mul(lambda.den(), f.val_empty()));
    res.value = Rational(res.scaled_value, lambda.den());
    return res;
}

}  // namespace

SfmResult sfm_min(const SubmodularObjective& f, const Rational& lambda, SfmBackend backend) {
    if (lambda < Rational(0)) throw std::invalid_argument("lambda must be nonnegative");
    if (backend == SfmBackend::automatic)
        backend = f.size() <= SubmodularObjective::kExhaustiveLimit ? SfmBackend::exhaustive
                                                                    : SfmBackend::min_norm_point;
    switch (backend) {
        case SfmBackend::exhaustive: return sfm_exhaustive(f, lambda, true);
        case SfmBackend::exhaustive_serial: return sfm_exhaustive(f, lambda, false);
        default: return sfm_min_norm(f, lambda);
    }
}

namespace {

struct Tuple {
    int64_t cost;
    int64_t value;
    bool operator==(const Tuple&) const = default;
    bool operator<(const Tuple& o) const { return cost < o.cost; }
};

Tuple tuple_of(const SubmodularObjective& f, const EdgeSet& witness) {
    return Tuple{cost_sum(f.decomposition().instance, witness),
                 val(f.decomposition().instance, witness)};
}

void recurse_front(const SubmodularObjective& f, const Rational& lo, Tuple tlo,
                   const Rational& hi, Tuple thi, std::map<int64_t, Tuple>& found, int depth) {
    if (depth > 4 * f.size() + 64) throw std::logic_error("pareto recursion too deep");
    found.emplace(tlo.cost, tlo);
    found.emplace(thi.cost, thi);
    if (tlo == thi) return;
    assert(tlo.cost > thi.cost && tlo.value > thi.value);

    Rational star = Rational(checked_add(tlo.value, -thi.value), checked_add(tlo.cost, -thi.cost));
    SfmResult mid = sfm_min(f, star);
    int64_t line = checked_add(checked_mul(star.num(), tlo.cost), -checked_mul(star.den(), tlo.value));
    if (mid.scaled_value == line) return;  // both endpoint tuples meet at star
    assert(mid.scaled_value < line);

    Tuple tmin = tuple_of(f, mid.minimal);
    Tuple tmax = tuple_of(f, mid.maximal);
    recurse_front(f, lo, tlo, star, tmax, found, depth + 1);
    recurse_front(f, star, tmin, hi, thi, found, depth + 1);
}

}  // namespace

ParetoFront extreme_supported_tuples(const LevelDecomposition& dec) {
    SubmodularObjective f(dec);
    ParetoFront front;

    if (f.size() == 0) {
        front.points.push_back({0, f.val_empty(), EdgeSet(dec.instance.edge_count())});
        return front;
    }

    Rational lambda_max(checked_add(f.val_full(), 1));
    SfmResult at_zero = sfm_min(f, Rational(0));
    SfmResult at_max = sfm_min(f, lambda_max);
    assert(at_max.minimal.empty() && at_max.maximal.empty());

    std::map<int64_t, Tuple> found;
    recurse_front(f, Rational(0), tuple_of(f, at_zero.minimal), lambda_max,
                  tuple_of(f, at_max.maximal), found, 0);

    std::vector<Tuple> tuples;
    for (auto& [c, t] : found) tuples.push_back(t);
    assert(static_cast<int>(tuples.size()) <= f.size() + 1);

    // Breakpoints between consecutive vertices; witness each vertex by the
    // minimal minimizer strictly inside its lambda segment.
    int beta = static_cast<int>(tuples.size());
    std::vector<Rational> breaks(beta - 1, Rational(0));
    for (int k = 0; k + 1 < beta; ++k) {
        breaks[k] = Rational(checked_add(tuples[k + 1].value, -tuples[k].value),
                             checked_add(tuples[k + 1].cost, -tuples[k].cost));
        if (k > 0) assert(breaks[k] < breaks[k - 1]);
    }
    for (int k = 0; k < beta; ++k) {
        Rational probe = Rational(0);
        if (beta == 1) probe = Rational(0);
        else if (k == 0) probe = lambda_max;
        else if (k == beta - 1) probe = Rational(0);
        else probe = (breaks[k] + breaks[k - 1]) / Rational(2);
        SfmResult at = sfm_min(f, probe);
        ParetoPoint pt{tuples[k].cost, tuples[k].value, at.minimal};
        if (cost_sum(dec.instance, pt.witness) != pt.cost ||
            val(dec.instance, pt.witness) != pt.value)
            throw std::logic_error("pareto witness does not match its tuple");
        if (k > 0 && !front.points.back().witness.is_subset_of(pt.witness))
            throw std::logic_error("pareto witnesses must be nested");
        front.points.push_back(std::move(pt));
    }
    return front;
}

BudgetCase locate_budget(const ParetoFront& front, int64_t budget) {
    if (front.points.empty() || budget < 1) throw std::invalid_argument("bad budget query");
    for (const ParetoPoint& pt : front.points)
        if (pt.cost == budget) return CaseExactHit{pt};
    if (budget > front.points.back().cost) return CaseFullRemoval{};
    for (size_t k = 0; k + 1 < front.points.size(); ++k)
        if (front.points[k].cost < budget && budget < front.points[k + 1].cost)
            return CaseBracketed{front.points[k], front.points[k + 1]};
    throw std::logic_error("budget not locatable on the front");
}

Rational nu_star(const ParetoPoint& lower, const ParetoPoint& upper, int64_t budget) {
    if (!(lower.cost < budget && budget < upper.cost))
        throw std::invalid_argument("nu_star needs a strict budget bracket");
    Rational slope(checked_add(upper.value, -lower.value), checked_add(upper.cost, -lower.cost));
    return Rational(lower.value) + Rational(checked_add(budget, -lower.cost)) * slope;
}

}  // namespace mstint
