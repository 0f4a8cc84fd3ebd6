#pragma once

#include <utility>
#include <vector>

#include "zq/graph.hpp"

namespace zqt {

inline zq::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return zq::Graph::from_edges(n, e);
}

inline zq::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return zq::Graph::from_edges(n, e);
}

inline zq::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return zq::Graph::from_edges(leaves + 1, e);
}

// The worked double star with its original labels shifted to 0-based:
// centers 3 and 4, leaves 0,1,2 hang on 3 and 5,6,7 hang on 4.
inline zq::Graph double_star_labeled() {
    return zq::Graph::from_edges(8, {{3, 0}, {3, 1}, {3, 2}, {3, 4}, {4, 5}, {4, 6}, {4, 7}});
}

inline bool is_path_shape(const zq::Graph& g) {
    if (!g.is_tree()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

}  // namespace zqt
