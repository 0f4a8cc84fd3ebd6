#pragma once

#include <utility>
#include <vector>

#include "zq/vertex_set.hpp"

namespace zq {

/**
 * Immutable simple undirected graph on vertices 0..n-1, adjacency lists
 * sorted ascending. Self-loops and duplicate edges are rejected at
 * construction so data errors surface instead of being silently repaired.
 */
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check(v);
        return adj_[v];
    }
    const VertexSet& neighbor_set(int v) const {
        check(v);
        return adj_set_[v];
    }
    int degree(int v) const {
        check(v);
        return int(adj_[v].size());
    }
    bool has_edge(int u, int v) const { return neighbor_set(u).contains(v); }

    // Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    bool is_connected() const;
    bool is_tree() const { return n_ >= 1 && m_ == n_ - 1 && is_connected(); }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_set_;

    void check(int v) const {
        if (v < 0 || v >= n_) throw ContractViolation("Graph: vertex index out of range");
    }
};

}  // namespace zq
