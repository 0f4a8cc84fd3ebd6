#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "zq/graph.hpp"

namespace zq {

// Histogram of z1_tree over the non-isomorphic trees on n vertices.
struct CensusRow {
    int n = 0;
    std::map<int, std::uint64_t> counts;  // k -> number of trees with Z_1 = k
    std::uint64_t total() const;
};

// Census over n = n_min..n_max; `workers` <= 0 means one thread. Output is
// deterministic regardless of the worker count.
std::vector<CensusRow> census(int n_min, int n_max, int workers = 1, int cap = 20);

// CSV: header "n,k,count", rows sorted by (n, k), plain integers.
void write_census_csv(std::ostream& os, const std::vector<CensusRow>& rows);

}  // namespace zq
