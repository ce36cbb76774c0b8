#include "mstint/reductions.hpp"

#include <stdexcept>

namespace mstint {

Instance mcp_to_interdiction(const McpInstance& mcp) {
    if (mcp.vertex_count < 2) throw std::invalid_argument("mcp needs at least two vertices");
    if (mcp.removals < 1) throw std::invalid_argument("mcp needs at least one removal");
    if (mcp.costs && mcp.costs->size() != mcp.edges.size())
        throw std::invalid_argument("cost vector size mismatch");

    std::vector<Edge> edges;
    for (size_t i = 0; i < mcp.edges.size(); ++i) {
        Edge e;
        e.u = mcp.edges[i].first;
        e.v = mcp.edges[i].second;
        e.weight = 0;
        e.cost = mcp.costs ? (*mcp.costs)[i] : 1;
        edges.push_back(e);
    }
    for (int v = 1; v < mcp.vertex_count; ++v) {
        Edge t;
        t.u = 0;
        t.v = v;
        t.weight = 1;
        t.cost = 0;
        t.interdictable = false;
        edges.push_back(t);
    }
    return Instance(mcp.vertex_count, std::move(edges), mcp.removals);
}

Instance shen_fixture() {
    const int u = 0, v = 1, w = 2;
    std::vector<Edge> edges;
    auto add = [&](int a, int b, int64_t weight) {
        Edge e;
        e.u = a;
        e.v = b;
        e.weight = weight;
        e.cost = 1;
        edges.push_back(e);
    };
    add(u, w, 1);
    add(v, w, 2);
    add(u, v, 3);
    add(u, v, 4);
    add(u, v, 5);
    add(u, w, 6);
    add(u, w, 100);
    add(v, w, 101);
    return Instance(3, std::move(edges), 3);
}

}  // namespace mstint
