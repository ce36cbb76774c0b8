#include "mstint/io.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace mstint {

Instance parse_instance(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    int64_t budget = 0;
    std::vector<Edge> edges;
    int seen = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "mstint") {
            if (n >= 0) throw ParseError(line_no, "duplicate header");
            if (!(ls >> n >> m >> budget)) throw ParseError(line_no, "malformed header");
            if (n < 1) throw ParseError(line_no, "vertex count must be positive");
            if (m < 0) throw ParseError(line_no, "negative edge count");
            if (budget < 1) throw ParseError(line_no, "budget must be positive");
        } else if (tag == "e") {
            if (n < 0) throw ParseError(line_no, "edge before header");
            Edge e;
            std::string cost_field;
            if (!(ls >> e.u >> e.v >> e.weight >> cost_field))
                throw ParseError(line_no, "malformed edge line");
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw ParseError(line_no, "vertex out of range");
            if (e.u == e.v) throw ParseError(line_no, "loop edge");
            if (e.weight < 0) throw ParseError(line_no, "negative weight");
            if (cost_field == "*") {
                e.interdictable = false;
                e.cost = 0;
            } else {
                try {
                    size_t used = 0;
                    e.cost = std::stoll(cost_field, &used);
                    if (used != cost_field.size()) throw std::invalid_argument("");
                } catch (...) {
                    throw ParseError(line_no, "malformed cost");
                }
                if (e.cost < 1) throw ParseError(line_no, "cost must be positive");
            }
            edges.push_back(e);
            ++seen;
        } else {
            throw ParseError(line_no, "unknown directive '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing header");
    if (seen != m) throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                                 std::to_string(seen));
    return Instance(n, std::move(edges), budget);
}

Instance parse_instance_file(const std::string& path) {
    if (path == "-") return parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& g) {
    std::ostringstream out;
    out << "mstint " << g.vertex_count() << " " << g.edge_count() << " " << g.budget() << "\n";
    for (const Edge& e : g.edges()) {
        out << "e " << e.u << " " << e.v << " " << e.weight << " ";
        if (e.interdictable) out << e.cost;
        else out << "*";
        out << "\n";
    }
    return out.str();
}

namespace {

// Bounded draw independent of the standard library's distribution details.
int64_t draw(std::mt19937_64& rng, int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace

Instance generate(const GeneratorParams& p) {
    if (p.vertex_count < 2) throw std::invalid_argument("generator needs >= 2 vertices");
    if (p.edge_count < p.vertex_count - 1) throw std::invalid_argument("too few edges");
    std::mt19937_64 rng(p.seed);

    std::vector<Edge> edges;
    int made = 0;
    if (p.spanning_tree_base) {
        for (int v = 1; v < p.vertex_count; ++v) {
            Edge e;
            e.u = static_cast<int>(draw(rng, 0, v - 1));
            e.v = v;
            e.weight = draw(rng, 0, p.max_weight);
            e.cost = draw(rng, 1, p.max_cost);
            edges.push_back(e);
            ++made;
        }
    }
    while (made < p.edge_count) {
        int u = static_cast<int>(draw(rng, 0, p.vertex_count - 1));
        int v = static_cast<int>(draw(rng, 0, p.vertex_count - 1));
        if (u == v) continue;
        Edge e;
        e.u = u;
        e.v = v;
        e.weight = draw(rng, 0, p.max_weight);
        e.cost = draw(rng, 1, p.max_cost);
        edges.push_back(e);
        ++made;
    }

    int64_t budget = p.fixed_budget;
    if (budget <= 0) {
        int64_t total = 0;
        for (const Edge& e : edges) total += e.cost;
        budget = std::max<int64_t>(1, total * p.budget_num / p.budget_den);
    }
    return Instance(p.vertex_count, std::move(edges), budget);
}

std::string serialize_report(const SolveReport& report) {
    std::ostringstream out;
    out << "case " << SolveReport::case_name(report.case_taken) << "\n";
    out << "removal";
    report.removal.for_each([&](int id) { out << " " << id; });
    out << "\n";
    out << "value_rounded " << report.value_rounded << "\n";
    out << "value_original " << report.value_original << "\n";
    if (report.upper_bound) out << "nu_star " << report.upper_bound->str() << "\n";
    out << "reductions " << report.reductions_applied << "\n";
    out << "guarantee_rounded " << report.guarantee_rounded << "\n";
    out << "guarantee_original " << report.guarantee_original << "\n";
    return out.str();
}

ParsedReport parse_report(std::istream& in) {
    ParsedReport rep;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "case") ls >> rep.case_name;
        else if (key == "removal") {
            int id;
            while (ls >> id) rep.removal.push_back(id);
        } else if (key == "value_rounded") ls >> rep.value_rounded;
        else if (key == "value_original") ls >> rep.value_original;
        else if (key == "nu_star") ls >> rep.nu_star;
    }
    return rep;
}

}  // namespace mstint
