#include "mstint/levels.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace mstint {

std::pair<Instance, RoundingCertificate> round_weights(const Instance& g) {
    RoundingCertificate cert;
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        cert.original_weights.push_back(e.weight);
        if (e.weight > 0) e.weight = std::bit_floor(static_cast<uint64_t>(e.weight));
    }
    return {Instance(g.vertex_count(), std::move(edges), g.budget()), std::move(cert)};
}

namespace {

int top_level(const std::vector<Edge>& edges) {
    int top = -1;
    for (const Edge& e : edges) top = std::max(top, weight_level(e.weight));
    return top;
}

// Lift weight-1 edges to weight 2. Doubles val on the affected level exactly,
// so optima are preserved while the instance gains a proper top level.
void promote_level_zero(std::vector<Edge>& edges) {
    for (Edge& e : edges)
        if (e.weight == 1) e.weight = 2;
}

struct InternalCut {
    bool found = false;
    EdgeSet edges;
    int64_t cost = 0;
};

// Cheapest interdictable cut that splits one connected component of
// (V, prefix_edges). Splitting across components is free but useless.
InternalCut cheapest_internal_cut(const Instance& g, const EdgeSet& prefix_edges) {
    Partition part = components(g, prefix_edges);
    InternalCut best;
    for (int b = 0; b < part.block_count; ++b) {
        std::vector<int> verts;
        std::vector<int> local(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (part.block_of[v] == b) {
                local[v] = static_cast<int>(verts.size());
                verts.push_back(v);
            }
        if (verts.size() < 2) continue;
        std::vector<Edge> sub;
        std::vector<int> sub_ids;
        prefix_edges.for_each([&](int id) {
            const Edge& e = g.edge(id);
            if (local[e.u] >= 0 && local[e.v] >= 0) {
                Edge copy = e;
                copy.u = local[e.u];
                copy.v = local[e.v];
                sub.push_back(copy);
                sub_ids.push_back(id);
            }
        });
        Instance induced(static_cast<int>(verts.size()), std::move(sub), 1);
        MinCut cut = global_min_cut(induced, induced.all_edges(), true);
        if (!cut.cost.is_finite()) continue;
        if (!best.found || cut.cost.finite < best.cost) {
            best.found = true;
            best.cost = cut.cost.finite;
            best.edges = EdgeSet(g.edge_count());
            cut.edges.for_each([&](int sub_id) { best.edges.insert(sub_ids[sub_id]); });
        }
    }
    return best;
}

LevelDecomposition build_decomposition(Instance inst, int p) {
    LevelDecomposition dec{std::move(inst)};
    dec.p = p;
    const Instance& g = dec.instance;
    dec.level_of.resize(g.edge_count());
    dec.level_sets.assign(p + 2, EdgeSet(g.edge_count()));
    dec.prefix_sets.assign(p + 2, EdgeSet(g.edge_count()));
    dec.removable = EdgeSet(g.edge_count());
    for (const Edge& e : g.edges()) {
        int lv = weight_level(e.weight);
        dec.level_of[e.id] = lv;
        dec.level_sets[lv + 1].insert(e.id);
        if (lv < p && e.interdictable) dec.removable.insert(e.id);
    }
    dec.prefix_sets[0] = dec.level_sets[0];
    for (int i = 0; i <= p; ++i) dec.prefix_sets[i + 1] = dec.prefix_sets[i] | dec.level_sets[i + 1];
    return dec;
}

Reduction contract_top_connectors(const Instance& g, int p, const Partition& part) {
    // Minimum-weight set of E_p edges joining the components of (V, E_{<=p-1}):
    // all candidates weigh 2^p, so any spanning set of the component graph is
    // minimal. Edge ids ascending for determinism.
    UnionFind blocks(part.block_count);
    EdgeSet contracted(g.edge_count());
    UnionFind verts(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (weight_level(e.weight) != p) continue;
        if (blocks.unite(part.block_of[e.u], part.block_of[e.v])) {
            contracted.insert(e.id);
            verts.unite(e.u, e.v);
        }
    }
    assert(blocks.components() == 1);

    std::vector<int> vertex_map(g.vertex_count(), -1);
    int next_vertex = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int root = verts.find(v);
        if (vertex_map[root] < 0) vertex_map[root] = next_vertex++;
        vertex_map[v] = vertex_map[root];
    }

    std::vector<Edge> edges;
    std::vector<int> edge_map;
    for (const Edge& e : g.edges()) {
        if (contracted.contains(e.id)) continue;
        int nu = vertex_map[e.u], nv = vertex_map[e.v];
        if (nu == nv) {
            assert(weight_level(e.weight) == p);
            continue;  // parallel top edge collapsed to a loop
        }
        Edge copy = e;
        copy.u = nu;
        copy.v = nv;
        edges.push_back(copy);
        edge_map.push_back(e.id);
    }

    Reduction red{Instance(next_vertex, std::move(edges), g.budget()),
                  std::move(edge_map), std::move(vertex_map), contracted, 0};
    red.value_offset = checked_mul(int64_t(1) << p, part.block_count - 1);
    return red;
}

}  // namespace

PreprocessResult preprocess(const Instance& rounded) {
    for (const Edge& e : rounded.edges()) weight_level(e.weight);  // must be rounded

    // Standing assumption: no interdiction set disconnects the graph.
    if (rounded.vertex_count() >= 2) {
        MinCut cut = global_min_cut(rounded, rounded.all_edges(), true);
        if (cut.cost.is_finite() && cut.cost.finite <= rounded.budget())
            return Reject{cut.edges, cut.cost.finite};
    }

    std::vector<Edge> work = rounded.edges();
    int n = rounded.vertex_count();
    int64_t budget = rounded.budget();

    for (int guard = 0; guard < 70 + n; ++guard) {
        int top = top_level(work);
        if (top == 0) {
            promote_level_zero(work);
            continue;
        }
        int p = std::max(top, 1);

        Instance stage(n, work, budget);
        EdgeSet top_edges(stage.edge_count());
        for (const Edge& e : stage.edges())
            if (weight_level(e.weight) == p) top_edges.insert(e.id);
        Partition top_part = components(stage, top_edges);
        if (top_part.block_count > 1) {
            // Non-interdictable connector tree at the top weight.
            for (int v = 1; v < n; ++v) {
                Edge conn;
                conn.u = 0;
                conn.v = v;
                conn.weight = int64_t(1) << p;
                conn.cost = 0;
                conn.interdictable = false;
                work.push_back(conn);
            }
            stage = Instance(n, work, budget);
        }

        LevelDecomposition dec = build_decomposition(std::move(stage), p);
        const Instance& g = dec.instance;

        InternalCut split = cheapest_internal_cut(g, dec.prefix(p - 1));
        if (split.found && split.cost <= budget) {
            dec.cheapest_split_cut = split.edges;
            dec.cheapest_split_cost = split.cost;
            return dec;
        }

        // No interdiction set can split (V, E_{<=p-1}).
        Partition low = components(g, dec.prefix(p - 1));
        if (low.block_count > 1)
            return contract_top_connectors(g, p, low);
        if (p >= 2) {
            // The top level is frozen for every feasible set; fold it down.
            work = g.edges();
            for (Edge& e : work)
                if (weight_level(e.weight) == p) e.weight = int64_t(1) << (p - 1);
            continue;
        }
        if (!dec.level(0).empty()) {
            work = g.edges();
            promote_level_zero(work);
            continue;
        }
        auto base = mst_weight(g, g.all_edges());
        if (!base) throw std::logic_error("preprocessed instance must be connected");
        return Frozen{*base};
    }
    throw std::logic_error("preprocessing failed to reach a fixed point");
}

PrepareResult prepare(const Instance& rounded) {
    Instance current = rounded;
    std::vector<int> current_map(rounded.edge_count());
    for (int i = 0; i < rounded.edge_count(); ++i) current_map[i] = i;
    int reductions = 0;

    for (int depth = 0; depth <= rounded.vertex_count() + 70; ++depth) {
        PreprocessResult res = preprocess(current);
        if (auto* rej = std::get_if<Reject>(&res)) {
            Reject mapped{EdgeSet(rounded.edge_count()), rej->cut_cost};
            rej->cut.for_each([&](int id) {
                if (current_map[id] >= 0) mapped.cut.insert(current_map[id]);
            });
            return mapped;
        }
        if (auto* froz = std::get_if<Frozen>(&res)) return *froz;
        if (auto* dec = std::get_if<LevelDecomposition>(&res)) {
            Prepared prep{std::move(*dec), {}, reductions};
            prep.orig_edge_of.assign(prep.dec.instance.edge_count(), -1);
            for (int i = 0; i < prep.dec.instance.edge_count(); ++i)
                if (i < static_cast<int>(current_map.size())) prep.orig_edge_of[i] = current_map[i];
            return prep;
        }
        Reduction& red = std::get<Reduction>(res);
        std::vector<int> next_map(red.reduced.edge_count(), -1);
        for (int j = 0; j < red.reduced.edge_count(); ++j) {
            int mid = red.edge_map[j];
            if (mid < static_cast<int>(current_map.size())) next_map[j] = current_map[mid];
        }
        current = std::move(red.reduced);
        current_map = std::move(next_map);
        ++reductions;
    }
    throw std::logic_error("reduction chain failed to terminate");
}

}  // namespace mstint
