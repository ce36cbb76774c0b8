#include <CLI11.hpp>
#include <iostream>

#include "mstint/io.hpp"
#include "mstint/patterns.hpp"
#include "mstint/reductions.hpp"
#include "mstint/tsp.hpp"

using namespace mstint;

namespace {

int cmd_solve(const std::string& path) {
    Instance g = parse_instance_file(path);
    SolveResult res = solve(g);
    if (auto* rej = std::get_if<Reject>(&res)) {
        std::cerr << "reject: budget " << g.budget() << " can disconnect the graph; cut cost "
                  << rej->cut_cost << ", cut edges";
        rej->cut.for_each([&](int id) { std::cerr << " " << id; });
        std::cerr << "\n";
        return 2;
    }
    std::cout << serialize_report(std::get<SolveReport>(res));
    return 0;
}

int cmd_exact(const std::string& path, int limit) {
    Instance g = parse_instance_file(path);
    ExactResult opt = exact_opt(g, limit);
    std::cout << "value " << opt.value << "\nremoval";
    opt.removal.for_each([&](int id) { std::cout << " " << id; });
    std::cout << "\n";
    return 0;
}

int cmd_pareto(const std::string& path) {
    Instance g = parse_instance_file(path);
    auto [rounded, cert] = round_weights(g);
    PrepareResult prep = prepare(rounded);
    if (auto* rej = std::get_if<Reject>(&prep)) {
        std::cerr << "reject: cut cost " << rej->cut_cost << " within budget\n";
        return 2;
    }
    if (std::holds_alternative<Frozen>(prep)) {
        std::cout << "frozen\n";
        return 0;
    }
    Prepared& ready = std::get<Prepared>(prep);
    ParetoFront front = extreme_supported_tuples(ready.dec);
    for (const ParetoPoint& pt : front.points) {
        std::cout << "tuple " << pt.cost << " " << pt.value << " witness";
        pt.witness.for_each([&](int id) {
            if (ready.orig_edge_of[id] >= 0) std::cout << " " << ready.orig_edge_of[id];
        });
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, const std::vector<int>& ids) {
    Instance g = parse_instance_file(path);
    EdgeSet removal(g.edge_count());
    bool clean = true;
    for (int id : ids) {
        if (id < 0 || id >= g.edge_count()) {
            std::cerr << "edge id " << id << " out of range\n";
            return 1;
        }
        if (!g.edge(id).interdictable) clean = false;
        removal.insert(id);
    }
    int64_t cost = 0;
    removal.for_each([&](int id) { cost += g.edge(id).cost; });
    bool feasible = clean && cost <= g.budget();
    std::cout << "cost " << cost << "\nbudget " << g.budget() << "\n";
    std::cout << "interdictable_only " << (clean ? "yes" : "no") << "\n";
    std::cout << "feasible " << (feasible ? "yes" : "no") << "\n";

    auto keep = g.all_edges() - removal;
    if (auto v = mst_weight(g, keep)) std::cout << "value_original " << *v << "\n";
    else std::cout << "value_original disconnected\n";

    if (!clean) return 1;

    auto [rounded, cert] = round_weights(g);
    PrepareResult prep = prepare(rounded);
    if (std::holds_alternative<Reject>(prep)) {
        std::cout << "analysis skipped (instance rejected by preprocessing)\n";
        return feasible ? 0 : 1;
    }
    if (std::holds_alternative<Frozen>(prep)) {
        std::cout << "analysis skipped (instance frozen by preprocessing)\n";
        return feasible ? 0 : 1;
    }
    Prepared& ready = std::get<Prepared>(prep);
    const LevelDecomposition& dec = ready.dec;
    EdgeSet u(dec.instance.edge_count());
    bool mappable = true;
    std::vector<char> wanted(g.edge_count(), 0);
    removal.for_each([&](int id) { wanted[id] = 1; });
    int mapped = 0;
    for (int i = 0; i < dec.instance.edge_count(); ++i) {
        int orig = ready.orig_edge_of[i];
        if (orig >= 0 && wanted[orig]) {
            if (!dec.removable.contains(i)) mappable = false;
            else u.insert(i);
            ++mapped;
        }
    }
    if (!mappable || mapped != removal.count()) {
        std::cout << "analysis skipped (set leaves the removable range)\n";
        return feasible ? 0 : 1;
    }

    PartitionTower tower(dec, u);
    int p = tower.p();
    int64_t vu = val(dec.instance, u);
    int64_t cu = cost_sum(dec.instance, u);
    auto verdict = [](bool ok) { return ok ? "holds" : "fails"; };
    std::cout << "impact_identity "
              << verdict(tower.g(p, 0) - (int64_t(2) << p) == vu) << "\n";
    std::cout << "cost_identity " << verdict(tower.kappa(p, 0) == 2 * cu) << "\n";

    if (cu > dec.instance.budget()) {
        Algorithm2Result run = algorithm2(tower);
        PatternTables tab = pattern_functions(tower, run.pattern);
        int64_t vr = val(dec.instance, run.removal_set);
        std::cout << "pattern_cost_bound " << verdict(tab.kappa_w_top >= run.cost) << "\n";
        std::cout << "pattern_value_bound "
                  << verdict(vr >= tab.g_w_top - (int64_t(1) << (p - 1))) << "\n";
        __int128 lhs = (__int128)2 * cu * tab.g_w_top;
        __int128 rhs = (__int128)run.cost * vu - (__int128)(int64_t(2) << p) * cu;
        std::cout << "pattern_ratio_bound " << verdict(lhs >= rhs) << "\n";
    }
    return feasible ? 0 : 1;
}

int cmd_tsp(const std::string& path) {
    TspInstance tsp(parse_instance_file(path));
    TspResult res = tsp_interdict(tsp);
    if (auto* rej = std::get_if<Reject>(&res)) {
        std::cerr << "reject: cut cost " << rej->cut_cost << " within budget\n";
        return 2;
    }
    TspReport& rep = std::get<TspReport>(res);
    std::cout << "removal";
    rep.removal.for_each([&](int id) { std::cout << " " << id; });
    std::cout << "\nmst_lower " << rep.mst_lower << "\ntour_upper " << rep.tour_upper << "\n";
    return 0;
}

int cmd_reduce_mcp(const std::string& path, int64_t q, bool bgd) {
    Instance g = parse_instance_file(path);
    McpInstance mcp;
    mcp.vertex_count = g.vertex_count();
    std::vector<int64_t> costs;
    for (const Edge& e : g.edges()) {
        mcp.edges.push_back({e.u, e.v});
        costs.push_back(e.interdictable ? e.cost : 1);
    }
    mcp.removals = q;
    if (bgd) mcp.costs = costs;
    std::cout << serialize_instance(mcp_to_interdiction(mcp));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum spanning tree interdiction solver"};
    app.require_subcommand(1);

    std::string path;
    int limit = 22;
    auto* solve_cmd = app.add_subcommand("solve", "14-approximation pipeline");
    solve_cmd->add_option("file", path, "instance file, - for stdin")->required();

    auto* exact_cmd = app.add_subcommand("exact", "exhaustive interdiction optimum");
    exact_cmd->add_option("file", path)->required();
    exact_cmd->add_option("--limit", limit, "max interdictable edges");

    auto* pareto_cmd = app.add_subcommand("pareto", "extreme supported tuples");
    pareto_cmd->add_option("file", path)->required();

    std::vector<int> removal_ids;
    auto* verify_cmd = app.add_subcommand("verify", "check a removal set");
    verify_cmd->add_option("file", path)->required();
    verify_cmd->add_option("ids", removal_ids, "edge ids to remove");

    auto* tsp_cmd = app.add_subcommand("tsp", "tour interdiction via the spanning tree solver");
    tsp_cmd->add_option("file", path)->required();

    int64_t q = 1;
    bool bgd = false;
    auto* mcp_cmd = app.add_subcommand("reduce-mcp", "maximum components reduction");
    mcp_cmd->add_option("file", path)->required();
    mcp_cmd->add_option("q", q, "number of removals / budget")->required();
    mcp_cmd->add_flag("--bgd", bgd, "use file costs and treat q as a budget");

    GeneratorParams params;
    auto* gen_cmd = app.add_subcommand("gen", "seeded random instance");
    gen_cmd->add_option("--seed", params.seed);
    gen_cmd->add_option("--n", params.vertex_count);
    gen_cmd->add_option("--m", params.edge_count);
    gen_cmd->add_option("--max-weight", params.max_weight);
    gen_cmd->add_option("--max-cost", params.max_cost);
    gen_cmd->add_option("--budget", params.fixed_budget);
    gen_cmd->add_option("--budget-num", params.budget_num);
    gen_cmd->add_option("--budget-den", params.budget_den);
    gen_cmd->add_flag("--tree", params.spanning_tree_base, "start from a random spanning tree");

    std::string fixture;
    auto* fix_cmd = app.add_subcommand("fixtures", "built-in instances");
    fix_cmd->add_option("name", fixture, "fixture name (shen)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(path);
        if (exact_cmd->parsed()) return cmd_exact(path, limit);
        if (pareto_cmd->parsed()) return cmd_pareto(path);
        if (verify_cmd->parsed()) return cmd_verify(path, removal_ids);
        if (tsp_cmd->parsed()) return cmd_tsp(path);
        if (mcp_cmd->parsed()) return cmd_reduce_mcp(path, q, bgd);
        if (gen_cmd->parsed()) {
            std::cout << serialize_instance(generate(params));
            return 0;
        }
        if (fix_cmd->parsed()) {
            if (fixture != "shen") {
                std::cerr << "unknown fixture '" << fixture << "'\n";
                return 1;
            }
            std::cout << serialize_instance(shen_fixture());
            return 0;
        }
    } catch (const ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
