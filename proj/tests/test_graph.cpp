#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mstint/graph.hpp"
#include "support.hpp"

using namespace mstint;
using namespace mstint::test;

TEST_CASE("components: basics") {
    Instance g = make_instance(4, {{0, 1, 0, 1}, {1, 2, 0, 1}, {2, 0, 0, 1}}, 1);
    CHECK(components(g, EdgeSet(g.edge_count())).block_count == 4);
    CHECK(components(g, set_of(g, {0})).block_count == 3);

    Instance tri = make_instance(3, {{0, 1, 0, 1}, {1, 2, 0, 1}, {2, 0, 0, 1}}, 1);
    Partition part = components(tri, set_of(tri, {0}));
    CHECK(part.block_count == 2);
    CHECK(part.block_of[0] == part.block_of[1]);
    CHECK(part.block_of[2] != part.block_of[0]);
}

TEST_CASE("components: block count equals n minus matroid rank") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        GeneratorParams p;
        p.seed = 1000 + trial;
        p.vertex_count = 2 + static_cast<int>(rng() % 6);
        p.edge_count = p.vertex_count - 1 + static_cast<int>(rng() % 8);
        Instance g = generate(p);
        EdgeSet active(g.edge_count());
        for (int id = 0; id < g.edge_count(); ++id)
            if (rng() % 2) active.insert(id);
        CHECK(components(g, active).block_count == g.vertex_count() - kruskal_rank(g, active));
    }
}

TEST_CASE("mst_weight: triangle and disconnection") {
    Instance g = make_instance(3, {{0, 1, 0, 1}, {1, 2, 1, 1}, {2, 0, 2, 1}}, 1);
    CHECK(mst_weight(g, g.all_edges()) == 1);
    CHECK(mst_weight(g, g.all_edges() - set_of(g, {1})) == 2);
    Instance bare = make_instance(2, {{0, 1, 3, 1}}, 1);
    CHECK_FALSE(mst_weight(bare, EdgeSet(bare.edge_count())).has_value());
}

TEST_CASE("val: formula matches Kruskal on the triangle") {
    Instance g = make_instance(3, {{0, 1, 0, 1}, {1, 2, 1, 1}, {2, 0, 2, 1}}, 1);
    CHECK(val(g, EdgeSet(g.edge_count())) == mst_weight(g, g.all_edges()).value());
    CHECK(val(g, set_of(g, {1})) == 2);
    CHECK(val(g, set_of(g, {1})) == mst_weight(g, g.all_edges() - set_of(g, {1})).value());
}

TEST_CASE("val: rejects top-level and non-interdictable removals") {
    Instance g = make_instance(3, {{0, 1, 0, 1}, {1, 2, 1, 1}, {2, 0, 2, 1}}, 1);
    CHECK_THROWS_AS((void)val(g, set_of(g, {2})), std::invalid_argument);
    Instance h = make_instance(3, {{0, 1, 0, 1}, {1, 2, 0, 0, false}, {2, 0, 2, 1}}, 1);
    CHECK_THROWS_AS((void)val(h, set_of(h, {1})), std::invalid_argument);
}

TEST_CASE("val agrees with mst_weight on random prepared instances") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (uint64_t seed = 1; checked < 300; ++seed) {
        REQUIRE(seed < 6000);
        auto item = prepared_from_seed(seed, dense_corpus_params());
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        auto u = random_removal(dec, rng, false);
        int64_t lhs = val(dec.instance, *u);
        auto rhs = mst_weight(dec.instance, dec.instance.all_edges() - *u);
        REQUIRE(rhs.has_value());
        CHECK(lhs == *rhs);
        ++checked;
    }
}

TEST_CASE("global_min_cut: parallel edges aggregate") {
    Instance g = make_instance(2, {{0, 1, 0, 2}, {0, 1, 0, 3}}, 1);
    MinCut cut = global_min_cut(g, g.all_edges(), true);
    CHECK(cut.cost.finite == 5);
    CHECK(cut.edges.count() == 2);
}

TEST_CASE("global_min_cut: path picks the cheap side") {
    Instance g = make_instance(3, {{0, 1, 0, 1}, {1, 2, 0, 4}}, 1);
    MinCut cut = global_min_cut(g, g.all_edges(), true);
    CHECK(cut.cost.finite == 1);
    CHECK(cut.edges.contains(0));
    CHECK(cut.edges.count() == 1);
}

TEST_CASE("global_min_cut: disconnected graph has a free cut") {
    Instance g = make_instance(4, {{0, 1, 0, 2}, {2, 3, 0, 2}}, 1);
    MinCut cut = global_min_cut(g, g.all_edges(), true);
    CHECK(cut.cost.finite == 0);
    CHECK(cut.edges.empty());
}

TEST_CASE("global_min_cut: matches exhaustive bipartitions") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        GeneratorParams p;
        p.seed = 5000 + trial;
        p.vertex_count = 2 + static_cast<int>(rng() % 6);
        p.edge_count = p.vertex_count - 1 + static_cast<int>(rng() % 8);
        p.spanning_tree_base = trial % 2 == 0;
        Instance g = generate(p);
        MinCut cut = global_min_cut(g, g.all_edges(), true);
        auto oracle = min_cut_by_enumeration(g, g.all_edges(), true);
        REQUIRE(oracle.has_value());
        CHECK(cut.cost.is_finite());
        CHECK(cut.cost.finite == *oracle);
        // The reported edge set realizes the reported cost.
        CHECK(cost_sum(g, cut.edges) == cut.cost.finite);
    }
}

TEST_CASE("global_min_cut: non-interdictable edges block a cut") {
    Instance g = make_instance(3, {{0, 1, 0, 1}, {1, 2, 0, 0, false}, {2, 0, 0, 9}}, 1);
    MinCut cut = global_min_cut(g, g.all_edges(), true);
    // Only the cut isolating vertex 0 avoids the fixed edge.
    CHECK(cut.cost.is_finite());
    CHECK(cut.cost.finite == 10);
}

TEST_CASE("supermodularity of val and sigma") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (uint64_t seed = 1; checked < 120; ++seed) {
        REQUIRE(seed < 4000);
        auto item = prepared_from_seed(seed, dense_corpus_params());
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        auto a = random_removal(dec, rng, false);
        auto b = random_removal(dec, rng, false);
        CHECK(supermodularity_check(dec.instance, *a, *b));
        CHECK(supermodularity_check(dec.instance, *a, *a));
        CHECK(supermodularity_check(dec.instance, EdgeSet(dec.instance.edge_count()), *b));

        EdgeSet x(dec.instance.edge_count()), y(dec.instance.edge_count());
        for (int id = 0; id < dec.instance.edge_count(); ++id) {
            if (rng() % 2) x.insert(id);
            if (rng() % 2) y.insert(id);
        }
        CHECK(sigma_supermodularity_check(dec.instance, x, y));
        ++checked;
    }
}

TEST_CASE("val is nondecreasing in the removal set") {
    std::mt19937_64 rng(19);
    int checked = 0;
    for (uint64_t seed = 1; checked < 100; ++seed) {
        REQUIRE(seed < 4000);
        auto item = prepared_from_seed(seed, dense_corpus_params());
        if (!item) continue;
        const LevelDecomposition& dec = item->prepared.dec;
        auto u = random_removal(dec, rng, false);
        EdgeSet smaller = *u;
        std::vector<int> ids = smaller.to_vector();
        if (!ids.empty()) smaller.erase(ids[rng() % ids.size()]);
        CHECK(val(dec.instance, smaller) <= val(dec.instance, *u));
        ++checked;
    }
}

TEST_CASE("edge set lexicographic order") {
    Instance g = make_instance(2, {{0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}}, 1);
    EdgeSet a = set_of(g, {0, 2});
    EdgeSet b = set_of(g, {1});
    CHECK(a.lex_less(b));
    CHECK_FALSE(b.lex_less(a));
    CHECK(set_of(g, {1}).lex_less(set_of(g, {1, 2})));
    CHECK(EdgeSet(3).lex_less(a));
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) < Rational(0));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(compare_ratio(1, 0, 100, 1) > 0);
    CHECK(compare_ratio(0, 0, 1, 0) == 0);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(make_instance(2, {{0, 0, 1, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(2, {{0, 2, 1, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(2, {{0, 1, -1, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(2, {{0, 1, 1, 0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(2, {{0, 1, 1, 1}}, 0), std::invalid_argument);
}
