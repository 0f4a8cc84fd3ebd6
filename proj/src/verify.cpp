#include "zq/verify.hpp"

#include <algorithm>
#include <random>

#include "zq/census.hpp"
#include "zq/closure.hpp"
#include "zq/enumerate.hpp"
#include "zq/families.hpp"
#include "zq/graph_io.hpp"
#include "zq/solver.hpp"
#include "zq/tree.hpp"

namespace zq {

Graph random_tree(int n, unsigned seed) {
    if (n < 1) throw ContractViolation("random_tree: n must be positive");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);
    // sequence decoding: repeatedly join the smallest leaf to the next entry
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    VertexSet used(n);
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1 && !used.contains(leaf)) {
                edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                used.insert(leaf);
                --deg[x];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (!used.contains(v)) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return Graph::from_edges(n, edges);
}

namespace {

struct Runner {
    const VerifyOptions& opt;
    VerifyReport& report;
    std::ostream* log;

    bool fail(const std::string& check, const std::string& detail, const Graph* g) {
        VerifyIssue issue{check, detail, std::nullopt};
        if (g) issue.counterexample = *g;
        report.issues.push_back(std::move(issue));
        return false;
    }

    template <class Fn>
    void check(const std::string& name, Fn&& fn) {
        ++report.checks;
        std::size_t before = report.issues.size();
        fn();
        if (log) {
            if (report.issues.size() == before) {
                *log << "[ok]   " << name << "\n";
            } else {
                const VerifyIssue& i = report.issues.back();
                *log << "[FAIL] " << name << ": " << i.detail;
                if (i.counterexample) *log << "  counterexample " << to_graph6(*i.counterexample);
                *log << "\n";
            }
            log->flush();
        }
    }
};

int solve(const Graph& g, QValue q) { return zq_number(g, q).value; }

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt, std::ostream* log) {
    VerifyReport report;
    Runner r{opt, report, log};
    std::mt19937 rng(opt.seed);

    std::vector<std::vector<Graph>> connected(opt.max_graph_n + 1);
    for (int n = 1; n <= opt.max_graph_n; ++n) connected[n] = enumerate_connected_graphs(n);

    r.check("closure confluence (random force orders)", [&] {
        std::uniform_int_distribution<int> size(2, 10);
        for (int trial = 0; trial < 60; ++trial) {
            int n = size(rng);
            Graph g = random_tree(n, rng());
            // densify a bit
            std::uniform_int_distribution<int> pick(0, n - 1);
            std::vector<std::pair<int, int>> edges = g.edges();
            for (int extra = rng() % n; extra > 0; --extra) {
                int u = pick(rng), v = pick(rng);
                std::pair<int, int> e{std::min(u, v), std::max(u, v)};
                if (u != v && !std::count(edges.begin(), edges.end(), e)) edges.push_back(e);
            }
            g = Graph::from_edges(n, edges);
            VertexSet filled(n);
            for (int v = 0; v < n; ++v)
                if (rng() & 1) filled.insert(v);
            VertexSet expect = closure(g, filled);
            for (int order = 0; order < 100; ++order) {
                VertexSet f = filled;
                while (true) {
                    auto forces = available_forces(g, f);
                    if (forces.empty()) break;
                    f.insert(forces[rng() % forces.size()].target);
                }
                if (f != expect) {
                    r.fail("closure confluence", "force order changed the fixed point", &g);
                    return;
                }
            }
        }
    });

    r.check("closure monotone + restriction identity (exhaustive)", [&] {
        for (int n = 1; n <= opt.max_graph_n; ++n) {
            for (const Graph& g : connected[n]) {
                std::vector<VertexSet> closures(std::size_t(1) << n, VertexSet(n));
                for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
                    VertexSet f(n);
                    for (std::uint32_t rest = m; rest; rest &= rest - 1)
                        f.insert(std::countr_zero(rest));
                    closures[m] = closure(g, f);
                    if (induced_closure(g, f, f.complement()) != closures[m]) {
                        r.fail("restriction identity", "induced_closure on V\\F differs from closure", &g);
                        return;
                    }
                }
                for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a)
                    for (std::uint32_t b = a;; b = (b + 1) | a) {  // all supersets of a
                        if (!closures[a].is_subset_of(closures[b])) {
                            r.fail("closure monotonicity", "closure not monotone under subset", &g);
                            return;
                        }
                        if (b == (std::uint32_t{1} << n) - 1) break;
                    }
            }
        }
    });

    r.check("value chain Z_0 <= Z_1 <= Z_2 <= Z_3 <= Z", [&] {
        for (int n = 1; n <= opt.max_graph_n; ++n)
            for (const Graph& g : connected[n]) {
                int prev = -1;
                for (int q = 0; q <= 3; ++q) {
                    int v = solve(g, QValue::finite(q));
                    if (v < prev) {
                        r.fail("value chain", "Z_" + std::to_string(q) + " dropped below Z_" + std::to_string(q - 1), &g);
                        return;
                    }
                    prev = v;
                }
                if (z_number(g) < prev) {
                    r.fail("value chain", "Z below Z_3", &g);
                    return;
                }
            }
    });

    r.check("Z_0 = zq(0), Z = zq(inf), single-step and decomposition agree", [&] {
        for (int n = 1; n <= opt.max_graph_n; ++n)
            for (const Graph& g : connected[n]) {
                if (solve(g, QValue::finite(0)) != z0_number(g))
                    { r.fail("solver equivalence", "zq(0) != z0_number", &g); return; }
                if (solve(g, QValue::infinity()) != z_number(g))
                    { r.fail("solver equivalence", "zq(inf) != z_number", &g); return; }
                for (int q = 0; q <= 2; ++q) {
                    SolverConfig single;
                    single.q = QValue::finite(q);
                    single.single_step_forces = true;
                    if (zq_number(g, single).value != solve(g, QValue::finite(q)))
                        { r.fail("solver equivalence", "single-step force enumeration disagrees", &g); return; }
                }
            }
        int cap = std::min(opt.max_graph_n, 6);
        for (int n = 2; n <= cap; ++n)
            for (const Graph& g : enumerate_graphs(n)) {
                if (g.is_connected()) continue;
                for (int q = 0; q <= 2; ++q) {
                    SolverConfig whole;
                    whole.q = QValue::finite(q);
                    whole.decompose = false;
                    if (zq_number(g, whole).value != solve(g, QValue::finite(q)))
                        { r.fail("solver equivalence", "component sum differs from whole-graph value", &g); return; }
                }
            }
    });

    r.check("theorem: Z_k <= k forces Z_k = Z; Z_k = k forces Z_{k-1} = k", [&] {
        for (int n = 1; n <= opt.max_graph_n; ++n)
            for (const Graph& g : connected[n]) {
                int z = z_number(g);
                for (int k = 1; k <= 3; ++k) {
                    int zk = solve(g, QValue::finite(k));
                    if (zk <= k && zk != z) {
                        r.fail("spend-first theorem", "Z_k <= k but Z_k != Z", &g);
                        return;
                    }
                    if (zk == k && solve(g, QValue::finite(k - 1)) != k) {
                        r.fail("spend-first corollary", "Z_k = k but Z_{k-1} != k", &g);
                        return;
                    }
                }
            }
    });

    r.check("value-1 characterization (trees and paths)", [&] {
        for (int n = 1; n <= opt.max_graph_n; ++n)
            for (const Graph& g : connected[n]) {
                bool tree = g.is_tree();
                bool path = tree;
                for (int v = 0; path && v < n; ++v) path = g.degree(v) <= 2;
                if ((solve(g, QValue::finite(0)) == 1) != tree)
                    { r.fail("value-1", "Z_0 = 1 iff tree failed", &g); return; }
                for (int q = 1; q <= 3; ++q)
                    if ((solve(g, QValue::finite(q)) == 1) != path)
                        { r.fail("value-1", "Z_q = 1 iff path failed at q=" + std::to_string(q), &g); return; }
            }
    });

    r.check("value-2 at q >= 2 iff Z = 2", [&] {
        for (int n = 1; n <= opt.max_graph_n; ++n)
            for (const Graph& g : connected[n]) {
                int z = z_number(g);
                for (int q = 2; q <= 3; ++q)
                    if ((solve(g, QValue::finite(q)) == 2) != (z == 2))
                        { r.fail("value-2", "Z_q = 2 iff Z = 2 failed at q=" + std::to_string(q), &g); return; }
            }
    });

    r.check("tree oracle equalities (algorithm vs game, closed forms)", [&] {
        for (int n = 3; n <= opt.max_tree_n; ++n)
            for (const Graph& t : enumerate_trees(n)) {
                int alg = z1_tree(t);
                if (alg != solve(t, QValue::finite(1)))
                    { r.fail("tree oracle", "z1_tree != game value at q=1", &t); return; }
                if (n <= 9 && eq1_direct(t) != alg)
                    { r.fail("tree oracle", "direct closed form != z1_tree", &t); return; }
                bool path = true;
                for (int v = 0; v < n; ++v)
                    if (t.degree(v) > 2) path = false;
                if (!path && n <= 9 && leafpair_formula(t) != alg)
                    { r.fail("tree oracle", "leaf-pair form != z1_tree", &t); return; }
                int mx = 0, mn = n;
                for (int v = 0; v < n; ++v) {
                    int fv = f_values(RootedTree::rooted(t, v)).values[v];
                    mx = std::max(mx, fv);
                    mn = std::min(mn, fv);
                }
                if (mx != mn + 1)
                    { r.fail("tree oracle", "max_v f != 1 + min_v f", &t); return; }
                if (path_cover_number(t) != z_number(t))
                    { r.fail("tree oracle", "path cover != Z on a tree", &t); return; }
                bool comb = comb_decompose(t).has_value();
                if ((alg == 2) != (comb && !path))
                    { r.fail("tree oracle", "Z_1 = 2 iff non-path comb failed", &t); return; }
            }
    });

    r.check("stalling responses never enable a force", [&] {
        std::uniform_int_distribution<int> size(2, 10), qpick(1, 3);
        int done = 0;
        while (done < opt.stalling_samples) {
            int n = size(rng);
            Graph t = random_tree(n, rng());
            int q = qpick(rng);
            int spend = 1 + int(rng() % std::min(q, n));
            VertexSet f(n);
            while (f.count() < spend) f.insert(int(rng() % n));
            f = closure(t, f);
            if (f.is_full()) continue;
            auto comps = components(t, f.complement());
            if (int(comps.size()) < q + 1) continue;
            std::vector<int> frontier;
            f.for_each([&](int v) {
                if (!(t.neighbor_set(v) - f).empty()) frontier.push_back(v);
            });
            if (int(frontier.size()) > spend) {
                r.fail("stalling", "frontier exceeds tokens spent in an oracle-free state", &t);
                return;
            }
            auto returned = stalling_response(t, frontier, comps);
            if (returned.empty()) {
                r.fail("stalling", "empty stalling response", &t);
                return;
            }
            VertexSet u(n);
            for (const VertexSet& c : returned) u |= c;
            if (induced_closure(t, f, u) != f) {
                r.fail("stalling", "stalling response allowed a force", &t);
                return;
            }
            ++done;
        }
    });

    r.check("memo value monotonicity", [&] {
        for (int n = 1; n <= opt.max_graph_n; ++n)
            for (const Graph& g : connected[n])
                for (int q = 0; q <= 3; ++q) {
                    SolverConfig cfg;
                    cfg.q = QValue::finite(q);
                    MemoTable memo;
                    zq_number_with_memo(g, cfg, memo);
                    if (!memo.value_monotone()) {
                        r.fail("value monotonicity", "memoized values not monotone under subset at q=" + std::to_string(q), &g);
                        return;
                    }
                }
    });

    return report;
}

}  // namespace zq
