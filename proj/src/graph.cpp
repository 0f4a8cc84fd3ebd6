#include "zq/graph.hpp"

#include <algorithm>
#include <string>

namespace zq {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw ContractViolation("Graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.adj_set_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ContractViolation("Graph: edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." + std::to_string(n - 1));
        if (u == v) throw ContractViolation("Graph: self-loop at vertex " + std::to_string(u));
        if (g.adj_set_[u].contains(v))
            throw ContractViolation("Graph: duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj_set_[u].insert(v);
        g.adj_set_[v].insert(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    VertexSet seen(n_);
    std::vector<int> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.count() == n_;
}

}  // namespace zq
