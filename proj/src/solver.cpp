#include "zq/solver.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>

namespace zq {

QValue QValue::parse(const std::string& s) {
    if (s == "inf" || s == "infinity") return infinity();
    if (s.empty()) throw ContractViolation("q: empty value");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ContractViolation("q: expected a nonnegative integer or 'inf', got '" + s + "'");
    if (s.size() > 6) throw ContractViolation("q: value out of range");
    return finite(std::stoi(s));
}

std::string Move::to_string() const {
    switch (kind) {
        case Kind::none:
            return "none";
        case Kind::spend:
            return "spend " + std::to_string(vertex);
        case Kind::force:
            return "force " + std::to_string(source) + "->" + std::to_string(vertex);
        case Kind::announce: {
            std::string s = "announce";
            for (std::size_t i = 0; i < announced.size(); ++i) {
                s += i == 0 ? " {" : " + {";
                bool first = true;
                announced[i].for_each([&](int v) {
                    if (!first) s += ",";
                    s += std::to_string(v);
                    first = false;
                });
                s += "}";
            }
            return s;
        }
    }
    return "none";
}

bool MemoTable::value_monotone() const {
    for (const auto& [f1, e1] : entries)
        for (const auto& [f2, e2] : entries)
            if (f1.is_subset_of(f2) && e1.value < e2.value) return false;
    return true;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Index-list lexicographic order on announcement masks, for reporting ties.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

Graph induced_subgraph(const Graph& g, const VertexSet& verts, std::vector<int>& old_of_new) {
    old_of_new = verts.to_vector();
    std::vector<int> new_of_old(g.vertex_count(), -1);
    for (int i = 0; i < int(old_of_new.size()); ++i) new_of_old[old_of_new[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (new_of_old[u] >= 0 && new_of_old[v] >= 0)
            edges.emplace_back(new_of_old[u], new_of_old[v]);
    return Graph::from_edges(int(old_of_new.size()), edges);
}

Move remap_move(const Move& m, const std::vector<int>& old_of_new, int n_global) {
    Move out;
    out.kind = m.kind;
    if (m.vertex >= 0) out.vertex = old_of_new[m.vertex];
    if (m.source >= 0) out.source = old_of_new[m.source];
    for (const VertexSet& s : m.announced) {
        VertexSet g(n_global);
        s.for_each([&](int v) { g.insert(old_of_new[v]); });
        out.announced.push_back(std::move(g));
    }
    return out;
}

/**
 * Memoized minimax over filled sets.
 *
 * V(F) = 0 when F = V, else the minimum over
 *   - spending a token on any unfilled vertex: 1 + V(F ∪ {v}),
 *   - free forces (single-step mode) or, by default, collapsing F to its
 *     closure before any paid/oracle move (exactness of the collapse is a
 *     verified property, see the single-step equivalence tests),
 *   - announcing any >= q+1 unfilled components; the adversarial oracle
 *     answers with the worst nonempty subset B, leading to
 *     induced_closure(F, ∪B). Announcements with a zero-progress response
 *     are excluded: the oracle would pick that response, so they can never
 *     beat V(F), and excluding them keeps the recursion well-founded.
 */
class GameSearch {
public:
    GameSearch(const Graph& g, const SolverConfig& cfg)
        : g_(g), cfg_(cfg), full_(VertexSet::full(g.vertex_count())) {
        if (cfg_.announcement_limit < 1 || cfg_.announcement_limit > 31)
            throw ContractViolation("SolverConfig: announcement_limit must be in 1..31");
        if (cfg_.state_limit == 0)
            throw ContractViolation("SolverConfig: state_limit must be positive");
    }

    MemoTable memo;

    int value(const VertexSet& filled) {
        if (cfg_.single_step_forces) return value_single(filled);
        return value_closed(closure(g_, filled));
    }

    // Player wins from `filled` with free moves only (no tokens).
    bool wins_free(const VertexSet& filled) {
        VertexSet c = closure(g_, filled);
        if (c == full_) return true;
        if (auto it = win_memo_.find(c); it != win_memo_.end()) return it->second;
        if (win_memo_.size() >= cfg_.state_limit)
            throw ResourceLimitError("zq solver: win search exceeds state limit");
        bool win =
            best_announcement(c, [&](const VertexSet& s) { return wins_free(s) ? 0 : 1; }).value == 0;
        win_memo_.emplace(std::move(c), win);
        return win;
    }

    // Best move recorded at the initial state (after canonicalization).
    Move first_move() {
        VertexSet start(g_.vertex_count());
        if (!cfg_.single_step_forces) start = closure(g_, start);
        Move m;
        auto it = memo.entries.find(start);
        if (it == memo.entries.end()) return m;
        const MoveTag& t = it->second.best;
        m.kind = t.kind;
        m.vertex = t.a;
        m.source = t.b;
        if (t.kind == Move::Kind::announce) {
            auto comps = components(g_, start.complement());
            for (std::uint32_t mm = t.mask; mm; mm &= mm - 1)
                m.announced.push_back(comps[std::countr_zero(mm)]);
        }
        return m;
    }

private:
    const Graph& g_;
    SolverConfig cfg_;
    VertexSet full_;
    std::unordered_map<VertexSet, bool, VertexSetHash> win_memo_;

    struct AnnBest {
        int value = kInf;
        std::uint32_t mask = 0;
    };

    // Minimum over admissible announcements of the oracle's best (max)
    // response value; succ_value maps a post-response filled set to a value.
    template <class SuccVal>
    AnnBest best_announcement(const VertexSet& f, SuccVal&& succ_value) {
        AnnBest out;
        if (cfg_.q.is_infinite()) return out;
        int q = cfg_.q.value();
        auto comps = components(g_, f.complement());
        int k = int(comps.size());
        if (k < q + 1) return out;
        if (k > cfg_.announcement_limit)
            throw ResourceLimitError("zq solver: " + std::to_string(k) +
                                     " unfilled components exceed announcement limit " +
                                     std::to_string(cfg_.announcement_limit));

        std::vector<signed char> progress(std::size_t(1) << k, -1);
        std::vector<int> succ(std::size_t(1) << k, -1);

        auto response_state = [&](std::uint32_t bmask) {
            VertexSet u(g_.vertex_count());
            for (std::uint32_t m = bmask; m; m &= m - 1) u |= comps[std::countr_zero(m)];
            return induced_closure(g_, f, u);
        };
        auto has_progress = [&](std::uint32_t bmask) {
            signed char& p = progress[bmask];
            if (p < 0) p = response_state(bmask) != f ? 1 : 0;
            return p == 1;
        };
        auto response_value = [&](std::uint32_t bmask) {
            int& v = succ[bmask];
            if (v < 0) v = succ_value(response_state(bmask));
            return v;
        };

        const std::uint32_t all = (std::uint32_t{1} << k) - 1;
        for (std::uint32_t a = 1; a <= all; ++a) {
            if (std::popcount(a) < q + 1) continue;
            bool admissible = true;
            for (std::uint32_t b = a; b; b = (b - 1) & a)
                if (!has_progress(b)) {
                    admissible = false;
                    break;
                }
            if (!admissible) continue;
            int worst = 0;
            for (std::uint32_t b = a; b; b = (b - 1) & a)
                worst = std::max(worst, response_value(b));
            if (worst < out.value || (worst == out.value && mask_lex_less(a, out.mask)))
                out = {worst, a};
        }
        return out;
    }

    int value_closed(const VertexSet& f) {
        if (f == full_) return 0;
        if (auto it = memo.entries.find(f); it != memo.entries.end()) return it->second.value;
        if (memo.entries.size() >= cfg_.state_limit)
            throw ResourceLimitError("zq solver: memo exceeds state limit " +
                                     std::to_string(cfg_.state_limit));

        int best = kInf;
        MoveTag tag;

        auto ann = best_announcement(f, [&](const VertexSet& s) { return value_closed(closure(g_, s)); });
        if (ann.value < best) {
            best = ann.value;
            tag = {Move::Kind::announce, -1, -1, ann.mask};
        }

        VertexSet unfilled = f.complement();
        for (int v = unfilled.first(); v >= 0; v = unfilled.next(v)) {
            VertexSet nf = f;
            nf.insert(v);
            int val = 1 + value_closed(closure(g_, nf));
            if (val < best) {
                best = val;
                tag = {Move::Kind::spend, v, -1, 0};
            }
        }

        memo.entries.emplace(f, MemoEntry{best, tag});
        return best;
    }

    int value_single(const VertexSet& f) {
        if (f == full_) return 0;
        if (auto it = memo.entries.find(f); it != memo.entries.end()) return it->second.value;
        if (memo.entries.size() >= cfg_.state_limit)
            throw ResourceLimitError("zq solver: memo exceeds state limit " +
                                     std::to_string(cfg_.state_limit));

        int best = kInf;
        MoveTag tag;

        for (const Force& fr : available_forces(g_, f)) {
            VertexSet nf = f;
            nf.insert(fr.target);
            int val = value_single(nf);
            if (val < best) {
                best = val;
                tag = {Move::Kind::force, fr.target, fr.source, 0};
            }
        }

        auto ann = best_announcement(f, [&](const VertexSet& s) { return value_single(s); });
        if (ann.value < best) {
            best = ann.value;
            tag = {Move::Kind::announce, -1, -1, ann.mask};
        }

        VertexSet unfilled = f.complement();
        for (int v = unfilled.first(); v >= 0; v = unfilled.next(v)) {
            VertexSet nf = f;
            nf.insert(v);
            int val = 1 + value_single(nf);
            if (val < best) {
                best = val;
                tag = {Move::Kind::spend, v, -1, 0};
            }
        }

        memo.entries.emplace(f, MemoEntry{best, tag});
        return best;
    }
};

}  // namespace

GameResult zq_number(const Graph& g, const SolverConfig& cfg) {
    if (g.vertex_count() == 0) throw ContractViolation("zq_number: empty graph");
    auto comps = components(g, g.vertices());
    if (!cfg.decompose || comps.size() == 1) {
        GameSearch search(g, cfg);
        GameResult r;
        r.value = search.value(VertexSet(g.vertex_count()));
        r.first_move = search.first_move();
        r.states = search.memo.entries.size();
        return r;
    }
    // Disconnected: the game decomposes; value is the sum over components.
    GameResult total;
    for (const VertexSet& comp : comps) {
        std::vector<int> old_of_new;
        Graph sub = induced_subgraph(g, comp, old_of_new);
        GameSearch search(sub, cfg);
        total.value += search.value(VertexSet(sub.vertex_count()));
        total.states += search.memo.entries.size();
        if (total.first_move.kind == Move::Kind::none) {
            Move m = search.first_move();
            if (m.kind != Move::Kind::none)
                total.first_move = remap_move(m, old_of_new, g.vertex_count());
        }
    }
    return total;
}

GameResult zq_number(const Graph& g, QValue q) {
    SolverConfig cfg;
    cfg.q = q;
    return zq_number(g, cfg);
}

GameResult zq_number_with_memo(const Graph& g, const SolverConfig& cfg, MemoTable& memo_out) {
    if (g.vertex_count() == 0) throw ContractViolation("zq_number: empty graph");
    GameSearch search(g, cfg);
    GameResult r;
    r.value = search.value(VertexSet(g.vertex_count()));
    r.first_move = search.first_move();
    r.states = search.memo.entries.size();
    memo_out = std::move(search.memo);
    return r;
}

int zq_value_from(const Graph& g, const VertexSet& filled, const SolverConfig& cfg) {
    if (g.vertex_count() == 0) throw ContractViolation("zq_value_from: empty graph");
    if (filled.universe() != g.vertex_count())
        throw ContractViolation("zq_value_from: filled set universe mismatch");
    GameSearch search(g, cfg);
    return search.value(filled);
}

namespace {

template <class FillsAll>
int min_subset_size(const Graph& g, int size_cap, const char* what, FillsAll&& fills_all) {
    int n = g.vertex_count();
    if (n == 0) throw ContractViolation(std::string(what) + ": empty graph");
    if (n > size_cap || n > 63)
        throw ResourceLimitError(std::string(what) + ": graph too large for exhaustive subset search (" +
                                 std::to_string(n) + " vertices, cap " + std::to_string(size_cap) + ")");
    for (int s = 1; s <= n; ++s) {
        std::uint64_t mask = (std::uint64_t{1} << s) - 1;
        const std::uint64_t last = mask << (n - s);
        while (true) {
            VertexSet f(n);
            for (std::uint64_t m = mask; m; m &= m - 1) f.insert(std::countr_zero(m));
            if (fills_all(f)) return s;
            if (mask == last) break;
            std::uint64_t c = mask & (~mask + 1);
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return n;
}

}  // namespace

int z_number(const Graph& g, int size_cap) {
    return min_subset_size(g, size_cap, "z_number",
                           [&](const VertexSet& f) { return closure(g, f).is_full(); });
}

int z0_number(const Graph& g, int size_cap) {
    return min_subset_size(g, size_cap, "z0_number",
                           [&](const VertexSet& f) { return psd_closure(g, f).is_full(); });
}

int zq_static(const Graph& g, int q, const SolverConfig& cfg_in) {
    if (g.vertex_count() == 0) throw ContractViolation("zq_static: empty graph");
    SolverConfig cfg = cfg_in;
    cfg.q = QValue::finite(q);
    auto comps = components(g, g.vertices());
    if (cfg.decompose && comps.size() > 1) {
        int total = 0;
        for (const VertexSet& comp : comps) {
            std::vector<int> old_of_new;
            Graph sub = induced_subgraph(g, comp, old_of_new);
            total += zq_static(sub, q, cfg_in);
        }
        return total;
    }
    GameSearch search(g, cfg);
    return min_subset_size(g, 63, "zq_static",
                           [&](const VertexSet& f) { return search.wins_free(f); });
}

std::vector<VertexSet> stalling_response(const Graph& g, const std::vector<int>& frontier,
                                         const std::vector<VertexSet>& announced) {
    if (announced.empty()) throw ContractViolation("stalling_response: nothing announced");
    for (std::size_t i = 0; i < announced.size(); ++i) {
        if (announced[i].empty()) throw ContractViolation("stalling_response: empty announced component");
        for (std::size_t j = i + 1; j < announced.size(); ++j)
            if (announced[i].intersects(announced[j]))
                throw ContractViolation("stalling_response: announced components overlap");
    }
    if (announced.size() <= frontier.size())
        throw ContractViolation("stalling_response: need more announced components than frontier vertices");

    const int rows = int(frontier.size());
    const int cols = int(announced.size());
    std::vector<std::vector<bool>> adj(rows, std::vector<bool>(cols, false));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            adj[i][j] = g.neighbor_set(frontier[i]).intersects(announced[j]);

    std::vector<bool> row_alive(rows, true), col_alive(cols, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rows && !changed; ++i) {
            if (!row_alive[i]) continue;
            int hits = 0, col = -1;
            for (int j = 0; j < cols; ++j)
                if (col_alive[j] && adj[i][j]) {
                    ++hits;
                    col = j;
                }
            if (hits == 1) {
                row_alive[i] = false;
                col_alive[col] = false;
                changed = true;
            }
        }
    }

    std::vector<VertexSet> out;
    for (int j = 0; j < cols; ++j)
        if (col_alive[j]) out.push_back(announced[j]);
    return out;
}

}  // namespace zq
