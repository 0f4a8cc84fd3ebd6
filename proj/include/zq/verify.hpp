#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zq/graph.hpp"

namespace zq {

struct VerifyOptions {
    int max_graph_n = 6;       // exhaustive connected-graph theorem checks
    int max_tree_n = 10;       // tree oracle equalities
    int stalling_samples = 200;
    unsigned seed = 1;
};

struct VerifyIssue {
    std::string check;
    std::string detail;
    std::optional<Graph> counterexample;
};

struct VerifyReport {
    int checks = 0;
    std::vector<VerifyIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Cross-validation suite: closure laws, solver equivalences, the value
// chain, the published characterizations, and the tree-formula oracle
// equalities. Logs one line per check when `log` is given; failing checks
// carry a minimal counterexample.
VerifyReport run_verify(const VerifyOptions& opt, std::ostream* log = nullptr);

// Uniform random labeled tree on n vertices (sequence-decoded), test support.
Graph random_tree(int n, unsigned seed);

}  // namespace zq
