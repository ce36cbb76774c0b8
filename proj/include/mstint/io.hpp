#pragma once

#include <iosfwd>
#include <string>

#include "mstint/solver.hpp"

namespace mstint {

// Text format:
//   # comment
//   mstint <n> <m> <B>
//   e <u> <v> <weight> <cost>     (cost `*` marks a non-interdictable edge)
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);  // "-" reads stdin
std::string serialize_instance(const Instance& g);

struct GeneratorParams {
    uint64_t seed = 1;
    int vertex_count = 6;
    int edge_count = 10;
    int64_t max_weight = 8;
    int64_t max_cost = 5;
    // budget = max(1, floor(total cost * budget_num / budget_den)), unless fixed.
    int64_t budget_num = 1;
    int64_t budget_den = 2;
    int64_t fixed_budget = 0;  // > 0 overrides the fraction policy
    bool spanning_tree_base = false;  // first n-1 edges form a random tree
};

// Deterministic seeded multigraph: uniform endpoints with loop rejection,
// uniform weights in [0, max_weight], costs in [1, max_cost].
Instance generate(const GeneratorParams& params);

std::string serialize_report(const SolveReport& report);

// Key/value lines of serialize_report parsed back, for bit-exact round trips.
struct ParsedReport {
    std::string case_name;
    std::vector<int> removal;
    int64_t cost = 0;
    int64_t value_rounded = 0;
    int64_t value_original = 0;
    std::string nu_star;  // "num/den" or empty
};

ParsedReport parse_report(std::istream& in);

}  // namespace mstint
