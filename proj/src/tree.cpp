#include "zq/tree.hpp"

#include <algorithm>
#include <limits>

#include "zq/closure.hpp"
#include "zq/solver.hpp"

namespace zq {

RootedTree RootedTree::rooted(const Graph& t, int root) {
    if (!t.is_tree()) throw ContractViolation("RootedTree: input is not a tree");
    if (root < 0 || root >= t.vertex_count()) throw ContractViolation("RootedTree: root out of range");
    RootedTree rt;
    rt.tree = t;
    rt.root = root;
    int n = t.vertex_count();
    rt.parent.assign(n, -1);
    rt.children.assign(n, {});
    rt.preorder.clear();
    rt.preorder.reserve(n);
    rt.preorder.push_back(root);
    for (std::size_t i = 0; i < rt.preorder.size(); ++i) {
        int v = rt.preorder[i];
        for (int w : t.neighbors(v)) {
            if (w == rt.parent[v]) continue;
            rt.parent[w] = v;
            rt.children[v].push_back(w);
            rt.preorder.push_back(w);
        }
    }
    return rt;
}

namespace {

// Bottom-up costs for the tree rooted at `root`, without copying the graph.
std::vector<int> f_values_at(const Graph& t, int root) {
    int n = t.vertex_count();
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    order.push_back(root);
    parent[root] = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : t.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    std::vector<int> f(n, 0);
    std::vector<int> kid_costs;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        kid_costs.clear();
        for (int w : t.neighbors(v))
            if (w != parent[v]) kid_costs.push_back(f[w]);
        if (kid_costs.empty()) {
            f[v] = 0;
            continue;
        }
        std::sort(kid_costs.begin(), kid_costs.end(), std::greater<int>());
        int best = 0;
        for (int i = 0; i < int(kid_costs.size()); ++i) best = std::max(best, i + kid_costs[i]);
        f[v] = best;
    }
    return f;
}

}  // namespace

FTable f_values(const RootedTree& t) {
    FTable out;
    out.root = t.root;
    out.values = f_values_at(t.tree, t.root);
    return out;
}

int z1_tree(const Graph& t) {
    if (!t.is_tree()) throw ContractViolation("z1_tree: input is not a tree");
    int n = t.vertex_count();
    if (n <= 2) return 1;
    int best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, f_values_at(t, v)[v]);
    return best;
}

namespace {

// Sum of (deg(w) - 2) along the cheapest maximal path from v inside the
// vertex set `in`, degrees supplied by `deg`. The trivial path {v} only
// counts when v has no neighbor inside `in`.
template <class Deg>
int min_path_sum(const Graph& t, const std::vector<bool>& in, int v, Deg&& deg) {
    struct Frame {
        int x, par;
    };
    // depth-first, computing min over leaf-terminated paths
    auto rec = [&](auto&& self, int x, int par) -> int {
        int val = deg(x) - 2;
        int best = std::numeric_limits<int>::max();
        for (int w : t.neighbors(x)) {
            if (w == par || !in[w]) continue;
            best = std::min(best, self(self, w, x));
        }
        return best == std::numeric_limits<int>::max() ? val : val + best;
    };
    return rec(rec, v, -1);
}

}  // namespace

int eq1_direct(const Graph& t, int cap) {
    if (!t.is_tree()) throw ContractViolation("eq1_direct: input is not a tree");
    int n = t.vertex_count();
    if (n < 3) throw ContractViolation("eq1_direct: tree must have at least 3 vertices");
    if (n > cap)
        throw ResourceLimitError("eq1_direct: subtree enumeration infeasible for " + std::to_string(n) +
                                 " vertices (cap " + std::to_string(cap) + ")");

    int best_inner = std::numeric_limits<int>::min();
    std::vector<bool> in(n);
    std::vector<int> deg_s(n);
    std::vector<int> members;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        members.clear();
        for (int v = 0; v < n; ++v) {
            in[v] = (mask >> v) & 1;
            if (in[v]) members.push_back(v);
        }
        // connectivity of the induced subgraph
        std::vector<int> stack{members[0]};
        std::vector<bool> seen(n, false);
        seen[members[0]] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(v))
                if (in[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != int(members.size())) continue;
        for (int v : members) {
            int d = 0;
            for (int w : t.neighbors(v)) d += in[w];
            deg_s[v] = d;
        }
        for (int v : members)
            best_inner = std::max(best_inner, min_path_sum(t, in, v, [&](int x) { return deg_s[x]; }));
    }
    return 2 + best_inner;
}

int leafpair_formula(const Graph& t) {
    if (!t.is_tree()) throw ContractViolation("leafpair_formula: input is not a tree");
    int n = t.vertex_count();
    if (n < 3) throw ContractViolation("leafpair_formula: tree must have at least 3 vertices");
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 1) leaves.push_back(v);
    bool path_like = true;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) > 2) path_like = false;
    if (path_like) throw ContractViolation("leafpair_formula: tree must not be a path");

    auto tree_path = [&](int a, int b) {  // vertices from a to b inclusive
        std::vector<int> par(n, -2);
        std::vector<int> queue{a};
        par[a] = -1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int w : t.neighbors(queue[i]))
                if (par[w] == -2) {
                    par[w] = queue[i];
                    queue.push_back(w);
                }
        std::vector<int> p;
        for (int x = b; x != -1; x = par[x]) p.push_back(x);
        std::reverse(p.begin(), p.end());
        return p;
    };

    int best_pair = std::numeric_limits<int>::max();
    std::vector<bool> in(n);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
            int u1 = leaves[i], u2 = leaves[j];
            std::vector<int> path = tree_path(u1, u2);
            int worst_v = std::numeric_limits<int>::min();
            for (std::size_t pi = 1; pi + 1 < path.size(); ++pi) {
                int v = path[pi];
                // S = T minus the two components of T - v holding u1 / u2
                std::fill(in.begin(), in.end(), true);
                for (int seed : {u1, u2}) {
                    std::vector<int> stack{seed};
                    in[seed] = false;
                    while (!stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        for (int w : t.neighbors(x))
                            if (w != v && in[w]) {
                                in[w] = false;
                                stack.push_back(w);
                            }
                    }
                }
                worst_v = std::max(worst_v,
                                   min_path_sum(t, in, v, [&](int x) { return t.degree(x); }));
            }
            best_pair = std::min(best_pair, worst_v);
        }
    }
    return 2 + best_pair;
}

int path_cover_number(const Graph& t) {
    if (!t.is_tree()) throw ContractViolation("path_cover_number: input is not a tree");
    int n = t.vertex_count();
    if (n == 1) return 1;
    RootedTree rt = RootedTree::rooted(t, 0);
    std::vector<int> paths(n, 0);
    std::vector<bool> open(n, false);
    for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
        int v = *it;
        int total = 0, extendable = 0;
        for (int c : rt.children[v]) {
            total += paths[c];
            extendable += open[c];
        }
        if (extendable >= 2) {
            paths[v] = total - 1;  // join two child paths through v
            open[v] = false;
        } else if (extendable == 1) {
            paths[v] = total;      // extend a child path up to v
            open[v] = true;
        } else {
            paths[v] = total + 1;  // v starts its own path
            open[v] = true;
        }
    }
    return paths[0];
}

namespace {

// Beyond this size the normalization oracle falls back from exact game
// values to a fill-minimizing heuristic.
constexpr int kExactAdversaryLimit = 18;

}  // namespace

VertexSet normalize_tree_state(const Graph& t, const VertexSet& filled) {
    if (!t.is_tree()) throw ContractViolation("normalize_tree_state: input is not a tree");
    if (filled.universe() != t.vertex_count())
        throw ContractViolation("normalize_tree_state: filled set universe mismatch");
    if (filled.empty()) throw ContractViolation("normalize_tree_state: empty filled set");

    SolverConfig cfg;
    cfg.q = QValue::finite(1);
    const bool exact = t.vertex_count() <= kExactAdversaryLimit;

    VertexSet f = closure(t, filled);
    while (!f.is_full()) {
        int busy = 0;
        f.for_each([&](int v) {
            if ((t.neighbor_set(v) - f).count() >= 2) ++busy;
        });
        if (busy <= 1) break;

        auto comps = components(t, f.complement());
        int ci = -1, cj = -1;
        for (std::size_t i = 0; i < comps.size() && ci < 0; ++i) {
            for (std::size_t j = i + 1; j < comps.size() && ci < 0; ++j) {
                bool common = false;
                for (int v = f.first(); v >= 0 && !common; v = f.next(v))
                    common = t.neighbor_set(v).intersects(comps[i]) &&
                             t.neighbor_set(v).intersects(comps[j]);
                if (!common) {
                    ci = int(i);
                    cj = int(j);
                }
            }
        }
        if (ci < 0)
            throw ContractViolation("normalize_tree_state: no valid announcement in a tree state");

        // Oracle answers adversarially among the three possible responses.
        VertexSet candidates[3] = {comps[ci], comps[cj], comps[ci] | comps[cj]};
        VertexSet best;
        long best_score = std::numeric_limits<long>::min();
        for (const VertexSet& b : candidates) {
            VertexSet nf = closure(t, induced_closure(t, f, b));
            long score = exact ? long(zq_value_from(t, nf, cfg)) * 1000 : 0;
            score += nf.complement().count();
            if (score > best_score) {
                best_score = score;
                best = nf;
            }
        }
        f = best;
    }
    return f;
}

}  // namespace zq
