#include "zq/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace zq {

namespace {

std::vector<int> parents_from_levels(const std::vector<int>& levels) {
    int n = int(levels.size());
    std::vector<int> parent(n, -1);
    for (int i = 1; i < n; ++i)
        for (int j = i - 1; j >= 0; --j)
            if (levels[j] == levels[i] - 1) {
                parent[i] = j;
                break;
            }
    return parent;
}

Graph graph_from_parents(const std::vector<int>& parent) {
    int n = int(parent.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
    return Graph::from_edges(n, edges);
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n) : n_(n) {
    if (n < 1) throw ContractViolation("FreeTreeStream: n must be positive");
    levels_.resize(n);
    std::iota(levels_.begin(), levels_.end(), 1);  // the path, rooted at an end
}

bool FreeTreeStream::advance_() {
    // Successor of a rooted-tree level sequence: locate the last entry of
    // depth > 2, step it down, and tile the tail with the block ending just
    // before it.
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
        if (levels_[i] > 2) {
            p = i;
            break;
        }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (levels_[i] == levels_[p] - 1) {
            q = i;
            break;
        }
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    return true;
}

bool FreeTreeStream::keep_current_() const {
    if (n_ <= 2) return true;
    Graph t = build_();
    std::vector<int> cents = tree_centroids(t);
    if (std::find(cents.begin(), cents.end(), 0) == cents.end()) return false;
    if (cents.size() == 1) return true;
    int other = cents[0] == 0 ? cents[1] : cents[0];
    return rooted_canonical_code(t, 0) <= rooted_canonical_code(t, other);
}

Graph FreeTreeStream::build_() const {
    return graph_from_parents(parents_from_levels(levels_));
}

std::optional<Graph> FreeTreeStream::next() {
    while (!exhausted_) {
        if (!fresh_ && !advance_()) {
            exhausted_ = true;
            break;
        }
        fresh_ = false;
        if (keep_current_()) return build_();
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_trees(int n, int cap) {
    if (n > cap)
        throw ResourceLimitError("enumerate_trees: n=" + std::to_string(n) + " above cap " + std::to_string(cap));
    std::vector<Graph> out;
    FreeTreeStream stream(n);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

std::string rooted_canonical_code(const Graph& t, int root) {
    int n = t.vertex_count();
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    order.push_back(root);
    parent[root] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : t.neighbors(order[i]))
            if (parent[w] == -2) {
                parent[w] = order[i];
                order.push_back(w);
            }
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        for (int w : t.neighbors(v))
            if (w != parent[v]) kids.push_back(std::move(code[w]));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        s += ")";
        code[v] = std::move(s);
    }
    return code[root];
}

std::vector<int> tree_centroids(const Graph& t) {
    if (!t.is_tree()) throw ContractViolation("tree_centroids: input is not a tree");
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> parent(n, -2), order, size(n, 1);
    order.reserve(n);
    order.push_back(0);
    parent[0] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : t.neighbors(order[i]))
            if (parent[w] == -2) {
                parent[w] = order[i];
                order.push_back(w);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    std::vector<int> cents;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int w : t.neighbors(v))
            if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
        if (heaviest <= n / 2) cents.push_back(v);
    }
    std::sort(cents.begin(), cents.end());
    return cents;
}

std::string tree_canonical_code(const Graph& t) {
    std::string best;
    for (int c : tree_centroids(t)) {
        std::string code = rooted_canonical_code(t, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

namespace {

// Small-graph canonical forms: a labeled graph on n vertices is its
// edge-bitmask (pair (i<j) -> bit j*(j-1)/2 + i); the canonical form is the
// minimum over all vertex permutations.

int edge_bit(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

std::vector<std::vector<int>> edge_permutation_tables(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> tables;
    do {
        std::vector<int> tab(n * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int pi = perm[i], pj = perm[j];
                if (pi > pj) std::swap(pi, pj);
                tab[edge_bit(i, j)] = edge_bit(pi, pj);
            }
        tables.push_back(std::move(tab));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

std::uint32_t canonical_mask(std::uint32_t mask, const std::vector<std::vector<int>>& tables) {
    std::uint32_t best = ~std::uint32_t{0};
    for (const auto& tab : tables) {
        std::uint32_t m = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            m |= std::uint32_t{1} << tab[std::countr_zero(rest)];
        best = std::min(best, m);
    }
    return best;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> edge_bit(i, j)) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::vector<std::uint32_t> canonical_masks(int n) {
    if (n < 1 || n > 7) throw ResourceLimitError("graph enumeration supported for 1 <= n <= 7");
    std::vector<std::uint32_t> level{0};  // the 1-vertex graph
    for (int size = 2; size <= n; ++size) {
        auto tables = edge_permutation_tables(size);
        std::unordered_set<std::uint32_t> seen;
        for (std::uint32_t base : level) {
            for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (size - 1)); ++nb) {
                std::uint32_t mask = base;
                for (std::uint32_t rest = nb; rest; rest &= rest - 1)
                    mask |= std::uint32_t{1} << edge_bit(std::countr_zero(rest), size - 1);
                seen.insert(canonical_mask(mask, tables));
            }
        }
        level.assign(seen.begin(), seen.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
    std::vector<Graph> out;
    for (std::uint32_t mask : canonical_masks(n)) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    std::vector<Graph> out;
    for (std::uint32_t mask : canonical_masks(n)) {
        Graph g = graph_from_mask(n, mask);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace zq
