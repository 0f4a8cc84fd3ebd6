#include "zq/families.hpp"

#include <algorithm>

#include "zq/closure.hpp"

namespace zq {

namespace {

std::vector<int> bfs_parents(const Graph& g, int from) {
    std::vector<int> par(g.vertex_count(), -2);
    std::vector<int> queue{from};
    par[from] = -1;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : g.neighbors(queue[i]))
            if (par[w] == -2) {
                par[w] = queue[i];
                queue.push_back(w);
            }
    return par;
}

std::vector<int> tree_path(const Graph& g, int a, int b) {
    std::vector<int> par = bfs_parents(g, a);
    std::vector<int> p;
    for (int x = b; x != -1; x = par[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
}

bool is_path_graph(const Graph& g) {
    if (!g.is_tree()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

}  // namespace

std::optional<CombDecomposition> comb_decompose(const Graph& t) {
    if (!t.is_tree()) throw ContractViolation("comb_decompose: input is not a tree");
    int n = t.vertex_count();
    std::vector<int> deg3;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) >= 4) return std::nullopt;
        if (t.degree(v) == 3) deg3.push_back(v);
    }

    CombDecomposition out;
    if (deg3.empty()) {
        // max degree <= 2 on a tree: a bare path, which is its own spine
        std::vector<int> ends;
        for (int v = 0; v < n; ++v)
            if (t.degree(v) <= 1) ends.push_back(v);
        out.spine = n == 1 ? std::vector<int>{0} : tree_path(t, ends[0], ends[1]);
    } else {
        // minimal path holding every degree-3 vertex
        int a = deg3[0], b = deg3[0];
        std::size_t best = 0;
        for (int u : deg3) {
            std::vector<int> par = bfs_parents(t, u);
            for (int v : deg3) {
                std::size_t d = 0;
                for (int x = v; x != -1; x = par[x]) ++d;
                if (d > best) {
                    best = d;
                    a = u;
                    b = v;
                }
            }
        }
        out.spine = tree_path(t, a, b);
        VertexSet on_spine(n);
        for (int v : out.spine) on_spine.insert(v);
        for (int v : deg3)
            if (!on_spine.contains(v)) return std::nullopt;
    }

    VertexSet on_spine(n);
    for (int v : out.spine) on_spine.insert(v);
    for (int w : out.spine) {
        for (int x : t.neighbors(w)) {
            if (on_spine.contains(x)) continue;
            CombDecomposition::Tooth tooth;
            tooth.attach = w;
            int prev = w, cur = x;
            while (true) {
                tooth.path.push_back(cur);
                int nxt = -1;
                for (int y : t.neighbors(cur))
                    if (y != prev) nxt = y;
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
            }
            out.teeth.push_back(std::move(tooth));
        }
    }

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> p = tree_path(t, u, v);
            VertexSet inner(n);
            for (std::size_t i = 1; i + 1 < p.size(); ++i) inner.insert(p[i]);
            bool ok = true;
            for (int d : deg3)
                if (!inner.contains(d)) {
                    ok = false;
                    break;
                }
            if (ok) out.initial_pairs.emplace_back(u, v);
        }
    }
    return out;
}

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::path: return "path";
        case GraphClass::tree_non_path: return "tree-non-path";
        case GraphClass::comb: return "comb";
        case GraphClass::zigzag: return "zigzag";
        case GraphClass::pick_comb: return "pick-comb";
        case GraphClass::other: return "other";
    }
    return "other";
}

std::string Classification::describe() const {
    std::string s = "Z_" + q.to_string() + " = " + std::to_string(zq_value) +
                    ", label: " + zq::to_string(label);
    if (z_value) s += ", Z = " + std::to_string(*z_value);
    if (comb) {
        s += "\nspine:";
        for (int v : comb->spine) s += " " + std::to_string(v);
        s += "\nteeth: " + std::to_string(comb->teeth.size());
        s += "\ninitial pairs:";
        for (auto [u, v] : comb->initial_pairs)
            s += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
    return s;
}

Classification classify(const Graph& g, QValue q, const SolverConfig& cfg_in) {
    if (!g.is_connected())
        throw ContractViolation("classify: characterizations apply to connected graphs only");
    SolverConfig cfg = cfg_in;
    cfg.q = q;
    Classification out;
    out.q = q;
    out.zq_value = zq_number(g, cfg).value;

    const bool tree = g.is_tree();
    const bool path = is_path_graph(g);

    if (out.zq_value == 1) {
        if (path)
            out.label = GraphClass::path;
        else if (tree && !q.is_infinite() && q.value() == 0)
            out.label = GraphClass::tree_non_path;
        return out;
    }
    if (out.zq_value == 2) {
        if (!q.is_infinite() && q.value() == 0) return out;  // Z_0 = 2 reported by value only
        if (tree) {
            out.comb = comb_decompose(g);
            if (out.comb && !path) out.label = GraphClass::comb;
            return out;
        }
        out.z_value = z_number(g);
        if (*out.z_value == 2)
            out.label = GraphClass::zigzag;
        else if (!q.is_infinite() && q.value() == 1)
            out.label = GraphClass::pick_comb;
        return out;
    }
    return out;
}

Graph gen_spider(int k) {
    if (k < 1) throw ContractViolation("gen_spider: k must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= k; ++i) {
        int hub = 1 + i;
        edges.emplace_back(0, hub);
        edges.emplace_back(hub, k + 2 + 2 * i);
        edges.emplace_back(hub, k + 3 + 2 * i);
    }
    return Graph::from_edges(3 * k + 4, edges);
}

Graph gen_double_star(int a, int b) {
    if (a < 1 || b < 1) throw ContractViolation("gen_double_star: leaf counts must be positive");
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int i = 0; i < a; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, 2 + a + i);
    return Graph::from_edges(2 + a + b, edges);
}

Graph gen_complete_binary(int depth) {
    if (depth < 0) throw ContractViolation("gen_complete_binary: negative depth");
    int n = (1 << (depth + 1)) - 1;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return Graph::from_edges(n, edges);
}

Graph gen_comb(const std::vector<std::vector<int>>& teeth_per_spine) {
    int s = int(teeth_per_spine.size());
    if (s < 1) throw ContractViolation("gen_comb: empty spine");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
    int next = s;
    for (int i = 0; i < s; ++i) {
        const auto& lengths = teeth_per_spine[i];
        int spine_deg = (s == 1) ? 0 : (i == 0 || i == s - 1) ? 1 : 2;
        if (spine_deg + int(lengths.size()) > 3)
            throw ContractViolation("gen_comb: spine vertex " + std::to_string(i) +
                                    " would exceed degree 3");
        for (int len : lengths) {
            if (len < 1) throw ContractViolation("gen_comb: tooth length must be positive");
            int prev = i;
            for (int j = 0; j < len; ++j) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
    }
    return Graph::from_edges(next, edges);
}

Graph gen_pick_comb(const Graph& comb, PickAttachment kind, int size,
                    std::optional<std::pair<int, int>> pair) {
    auto dec = comb_decompose(comb);
    if (!dec) throw ContractViolation("gen_pick_comb: base graph is not a comb");
    if (dec->initial_pairs.empty())
        throw ContractViolation("gen_pick_comb: comb has no initial pair");
    std::pair<int, int> uv = pair.value_or(dec->initial_pairs.front());
    if (uv.first > uv.second) std::swap(uv.first, uv.second);
    if (std::find(dec->initial_pairs.begin(), dec->initial_pairs.end(), uv) ==
        dec->initial_pairs.end())
        throw ContractViolation("gen_pick_comb: attachment pair is not an initial pair");

    int n = comb.vertex_count();
    auto edges = comb.edges();
    auto [u, v] = uv;
    if (kind == PickAttachment::path) {
        if (size < 1) throw ContractViolation("gen_pick_comb: path attachment needs >= 1 vertex");
        int prev = u;
        for (int j = 0; j < size; ++j) {
            edges.emplace_back(prev, n + j);
            prev = n + j;
        }
        edges.emplace_back(prev, v);
        return Graph::from_edges(n + size, edges);
    }
    // zigzag seed: C_{2*size} whose ending vertices are identified with (u, v)
    if (size < 2) throw ContractViolation("gen_pick_comb: zigzag seed needs size >= 2");
    if (comb.has_edge(u, v))
        throw ContractViolation("gen_pick_comb: zigzag attachment needs a non-adjacent initial pair");
    edges.emplace_back(u, v);
    int interior = 2 * size - 2;
    int prev = u;
    for (int j = 0; j < interior; ++j) {
        edges.emplace_back(prev, n + j);
        prev = n + j;
    }
    edges.emplace_back(prev, v);
    return Graph::from_edges(n + interior, edges);
}

}  // namespace zq
