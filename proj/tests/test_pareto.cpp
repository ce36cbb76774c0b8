#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "mstint/pareto.hpp"
#include "support.hpp"

using namespace mstint;
using namespace mstint::test;

namespace {

// Exhaustive oracle: vertex set of conv{(c(U), val(U))} + R>=0 x R<=0 over all
// 2^m removal subsets.
std::vector<std::pair<int64_t, int64_t>> hull_oracle(const LevelDecomposition& dec) {
    std::vector<int> ground = dec.removable.to_vector();
    int m = static_cast<int>(ground.size());
    REQUIRE(m <= 16);
    std::map<int64_t, int64_t> best_value;  // cost -> max val
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
        EdgeSet u(dec.instance.edge_count());
        for (int j = 0; j < m; ++j)
            if ((mask >> j) & 1) u.insert(ground[j]);
        int64_t c = cost_sum(dec.instance, u);
        int64_t v = val(dec.instance, u);
        auto [it, fresh] = best_value.emplace(c, v);
        if (!fresh && v > it->second) it->second = v;
    }
    std::vector<std::pair<int64_t, int64_t>> pts;
    for (auto [c, v] : best_value) {
        if (!pts.empty() && v <= pts.back().second) continue;  // dominated
        while (pts.size() >= 2) {
            auto [ax, ay] = pts[pts.size() - 2];
            auto [bx, by] = pts[pts.size() - 1];
            // pop b when it is on or below the chord a -> (c, v)
            __int128 orient = (__int128)(bx - ax) * (v - ay) - (__int128)(by - ay) * (c - ax);
            if (orient >= 0) pts.pop_back();
            else break;
        }
        // a dominated-but-kept predecessor can still be under the new point
        while (!pts.empty() && pts.back().second >= v) pts.pop_back();
        pts.push_back({c, v});
    }
    return pts;
}

int64_t objective_scaled(const SubmodularObjective& f, const Rational& lambda, uint32_t mask) {
    return static_cast<int64_t>(lambda.num() * f.cost_of_mask(mask) -
                                lambda.den() * f.val_of_mask(mask));
}

}  // namespace

TEST_CASE("sfm_min: extreme lambdas") {
    int checked = 0;
    for (uint64_t seed = 1; checked < 40; ++seed) {
        REQUIRE(seed < 2000);
        auto item = prepared_from_seed(seed, dense_corpus_params());
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        SubmodularObjective f(dec);
        if (f.size() == 0) continue;

        SfmResult big = sfm_min(f, Rational(checked_add(f.val_full(), 1)));
        CHECK(big.minimal.empty());
        CHECK(big.maximal.empty());
        CHECK(big.scaled_value == -f.val_empty());

        SfmResult zero = sfm_min(f, Rational(0));
        CHECK(zero.maximal == dec.removable);  // val is nondecreasing
        CHECK(zero.scaled_value == -f.val_full());
        ++checked;
    }
}

TEST_CASE("sfm_min: objective is submodular") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (uint64_t seed = 1; checked < 25; ++seed) {
        REQUIRE(seed < 2000);
        auto item = prepared_from_seed(seed, dense_corpus_params());
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        SubmodularObjective f(dec);
        if (f.size() == 0 || f.size() > 16) continue;
        Rational lambda(static_cast<int64_t>(rng() % 12), 1 + static_cast<int64_t>(rng() % 5));
        for (int t = 0; t < 20; ++t) {
            uint32_t a = static_cast<uint32_t>(rng()) & ((uint32_t(1) << f.size()) - 1);
            uint32_t b = static_cast<uint32_t>(rng()) & ((uint32_t(1) << f.size()) - 1);
            CHECK(objective_scaled(f, lambda, a) + objective_scaled(f, lambda, b) >=
                  objective_scaled(f, lambda, a | b) + objective_scaled(f, lambda, a & b));
        }
        ++checked;
    }
}

TEST_CASE("sfm_min: backends agree, including canonical minimizers") {
    std::mt19937_64 rng(43);
    int checked = 0;
    for (uint64_t seed = 1; checked < 60; ++seed) {
        REQUIRE(seed < 3000);
        GeneratorParams base = dense_corpus_params();
        base.edge_count = 12;
        auto item = prepared_from_seed(seed, base);
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        SubmodularObjective f(dec);
        if (f.size() == 0 || f.size() > 14) continue;
        Rational lambda(static_cast<int64_t>(rng() % 20), 1 + static_cast<int64_t>(rng() % 7));

        SfmResult par = sfm_min(f, lambda, SfmBackend::exhaustive);
        SfmResult ser = sfm_min(f, lambda, SfmBackend::exhaustive_serial);
        SfmResult mnp = sfm_min(f, lambda, SfmBackend::min_norm_point);

        CHECK(par.scaled_value == ser.scaled_value);
        CHECK(par.minimal == ser.minimal);
        CHECK(par.maximal == ser.maximal);
        CHECK(mnp.scaled_value == par.scaled_value);
        CHECK(mnp.minimal == par.minimal);
        CHECK(mnp.maximal == par.maximal);

        SfmResult again = sfm_min(f, lambda, SfmBackend::min_norm_point);
        CHECK(again.minimal == mnp.minimal);
        CHECK(again.maximal == mnp.maximal);
        ++checked;
    }
}

TEST_CASE("front: single interdictable edge") {
    // One cheap zero-weight edge whose removal splits the zero level while the
    // fixed top-level path keeps the graph connected.
    Instance g = make_instance(
        3, {{0, 1, 0, 2}, {1, 2, 0, 9}, {0, 1, 2, 0, false}, {1, 2, 2, 0, false}}, 2);
    auto res = preprocess(g);
    auto* dec = std::get_if<LevelDecomposition>(&res);
    REQUIRE(dec != nullptr);
    // Only edge 0 is cheap enough to ever matter; front is {} -> {0}? The
    // other zero edges are removable too, so just check hull equality.
    ParetoFront front = extreme_supported_tuples(*dec);
    auto oracle = hull_oracle(*dec);
    REQUIRE(front.points.size() == oracle.size());
    for (size_t k = 0; k < oracle.size(); ++k) {
        CHECK(front.points[k].cost == oracle[k].first);
        CHECK(front.points[k].value == oracle[k].second);
    }
}

TEST_CASE("front equals the exhaustive hull with nested witnesses") {
    int checked = 0;
    for (uint64_t seed = 1; checked < 60; ++seed) {
        REQUIRE(seed < 3000);
        auto item = prepared_from_seed(seed, dense_corpus_params());
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        if (dec.removable.count() > 14) continue;

        ParetoFront front = extreme_supported_tuples(dec);
        auto oracle = hull_oracle(dec);
        REQUIRE(front.points.size() == oracle.size());
        CHECK(static_cast<int>(front.points.size()) <= dec.removable.count() + 1);
        for (size_t k = 0; k < oracle.size(); ++k) {
            CHECK(front.points[k].cost == oracle[k].first);
            CHECK(front.points[k].value == oracle[k].second);
            CHECK(cost_sum(dec.instance, front.points[k].witness) == oracle[k].first);
            CHECK(val(dec.instance, front.points[k].witness) == oracle[k].second);
            if (k > 0) CHECK(front.points[k - 1].witness.is_subset_of(front.points[k].witness));
        }
        CHECK(front.points.front().cost == 0);
        ++checked;
    }
}

TEST_CASE("locate_budget: the three cases") {
    EdgeSet w;
    ParetoFront front;
    front.points = {{0, 0, w}, {3, 4, w}, {9, 10, w}};
    CHECK(std::holds_alternative<CaseExactHit>(locate_budget(front, 3)));
    CHECK(std::holds_alternative<CaseFullRemoval>(locate_budget(front, 10)));
    auto mid = locate_budget(front, 5);
    auto* bracket = std::get_if<CaseBracketed>(&mid);
    REQUIRE(bracket != nullptr);
    CHECK(bracket->lower.cost == 3);
    CHECK(bracket->upper.cost == 9);
}

TEST_CASE("nu_star: segment interpolation") {
    EdgeSet w;
    ParetoPoint p1{3, 4, w}, p2{9, 10, w};
    CHECK(nu_star(p1, p2, 5) == Rational(6));
    ParetoPoint flat1{3, 4, w}, flat2{9, 4, w};
    CHECK(nu_star(flat1, flat2, 5) == Rational(4));
    ParetoPoint a{0, 0, w}, b{7, 5, w};
    CHECK(nu_star(a, b, 3) == Rational(15, 7));
    CHECK_THROWS_AS((void)nu_star(p1, p2, 3), std::invalid_argument);
}

TEST_CASE("nu_star upper-bounds the exhaustive optimum") {
    int checked = 0;
    for (uint64_t seed = 1; checked < 50; ++seed) {
        REQUIRE(seed < 3000);
        auto item = prepared_from_seed(seed, dense_corpus_params());
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        if (dec.removable.count() > 14) continue;
        ParetoFront front = extreme_supported_tuples(dec);
        auto where = locate_budget(front, dec.instance.budget());
        auto* bracket = std::get_if<CaseBracketed>(&where);
        if (!bracket) continue;
        Rational bound = nu_star(bracket->lower, bracket->upper, dec.instance.budget());

        // Exhaustive optimum over the decomposition's removable edges.
        std::vector<int> ground = dec.removable.to_vector();
        int64_t opt = 0;
        for (uint32_t mask = 0; mask < (uint32_t(1) << ground.size()); ++mask) {
            EdgeSet u(dec.instance.edge_count());
            for (size_t j = 0; j < ground.size(); ++j)
                if ((mask >> j) & 1) u.insert(ground[j]);
            if (cost_sum(dec.instance, u) > dec.instance.budget()) continue;
            opt = std::max(opt, val(dec.instance, u));
        }
        CHECK(Rational(opt) <= bound);
        ++checked;
    }
}
