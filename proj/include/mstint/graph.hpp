#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mstint/rational.hpp"

namespace mstint {

// Dense bitset over edge ids. Set operations are linear in the universe size.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static EdgeSet full(int universe) {
        EdgeSet s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int universe() const { return universe_; }

    void insert(int id) {
        check_id(id);
        words_[id >> 6] |= uint64_t(1) << (id & 63);
    }
    void erase(int id) {
        check_id(id);
        words_[id >> 6] &= ~(uint64_t(1) << (id & 63));
    }
    bool contains(int id) const {
        return id >= 0 && id < universe_ && (words_[id >> 6] >> (id & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    EdgeSet& operator|=(const EdgeSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    EdgeSet& operator-=(const EdgeSet& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

    bool operator==(const EdgeSet& o) const = default;

    bool is_subset_of(const EdgeSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const EdgeSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    template <typename F>
    void for_each(F f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int id) { v.push_back(id); });
        return v;
    }

    // Lexicographic order on the sorted id sequences; the empty set is smallest.
    bool lex_less(const EdgeSet& o) const;

private:
    void check_id(int id) const {
        if (id < 0 || id >= universe_) throw std::out_of_range("edge id outside the universe");
    }
    void check_same(const EdgeSet& o) const {
        if (universe_ != o.universe_) throw std::invalid_argument("edge set universe mismatch");
    }

    int universe_ = 0;
    std::vector<uint64_t> words_;
};

// Union-find with union by rank and path compression.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), rank_(n, 0), components_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true if the two elements were in different components.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        --components_;
        return true;
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int components_;
};

struct Edge {
    int id = 0;
    int u = 0;
    int v = 0;
    int64_t weight = 0;
    int64_t cost = 0;
    bool interdictable = true;
};

// Loopless weighted multigraph with interdiction costs and a budget.
// Immutable after construction; parallel edges are distinct objects.
class Instance {
public:
    Instance(int vertex_count, std::vector<Edge> edges, int64_t budget);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int64_t budget() const { return budget_; }
    const Edge& edge(int id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }
    // Edge ids ordered by (weight, id); ties broken by id for determinism.
    const std::vector<int>& sorted_by_weight() const { return by_weight_; }

    EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
    EdgeSet interdictable_edges() const;

private:
    int n_;
    std::vector<Edge> edges_;
    int64_t budget_;
    std::vector<int> by_weight_;
};

struct Partition {
    std::vector<int> block_of;  // vertex -> block id, blocks numbered by first vertex
    int block_count = 0;
};

int64_t cost_sum(const Instance& g, const EdgeSet& s);
int64_t weight_sum(const Instance& g, const EdgeSet& s);

// Connected components of (V, active).
Partition components(const Instance& g, const EdgeSet& active);

// Kruskal MST weight of (V, active); nullopt when disconnected.
std::optional<int64_t> mst_weight(const Instance& g, const EdgeSet& active);

// MST value of (V, E \ removal) via the level formula
//   val(U) = sigma(E_{-1}\U) - 1 + sum_i 2^i (sigma(E_{<=i}\U) - 1).
// Requires a rounded instance (weights zero or powers of two); rejects
// removals touching top-level or non-interdictable edges.
int64_t val(const Instance& g, const EdgeSet& removal);

// Cut cost as a pair so that uncuttable (non-interdictable) edges never mix
// with finite budget arithmetic.
struct CutCost {
    int64_t infinite = 0;  // number of non-interdictable edges in the cut
    int64_t finite = 0;

    bool operator<(const CutCost& o) const {
        if (infinite != o.infinite) return infinite < o.infinite;
        return finite < o.finite;
    }
    bool is_finite() const { return infinite == 0; }
};

struct MinCut {
    EdgeSet edges;
    CutCost cost;
    std::vector<int> side;  // vertices on one shore of the cut
};

// Stoer-Wagner global minimum cut restricted to active edges, with parallel
// edge aggregation. Non-interdictable edges count as uncuttable when
// interdictable_only is set. A disconnected graph yields cost 0 and an empty cut.
MinCut global_min_cut(const Instance& g, const EdgeSet& active, bool interdictable_only);

// val(A) + val(B) <= val(A|B) + val(A&B); exposed as a test utility.
bool supermodularity_check(const Instance& g, const EdgeSet& a, const EdgeSet& b);

// sigma(A) + sigma(B) <= sigma(A|B) + sigma(A&B) for component counts.
bool sigma_supermodularity_check(const Instance& g, const EdgeSet& a, const EdgeSet& b);

// Level of a rounded weight: -1 for zero, otherwise log2(weight).
int weight_level(int64_t weight);

}  // namespace mstint
