#include "zq/closure.hpp"

namespace zq {

std::vector<VertexSet> components(const Graph& g, const VertexSet& active) {
    std::vector<VertexSet> out;
    VertexSet seen(g.vertex_count());
    for (int s = active.first(); s >= 0; s = active.next(s)) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.vertex_count());
        std::vector<int> stack{s};
        comp.insert(s);
        seen.insert(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (active.contains(w) && !comp.contains(w)) {
                    comp.insert(w);
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

// Shared fixed-point loop: fill from `filled`, restricted to targets in
// `active`, with neighbor visibility limited to filled ∪ active.
static VertexSet run_closure(const Graph& g, VertexSet filled, const VertexSet& active) {
    VertexSet visible = filled | active;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = filled.first(); v >= 0; v = filled.next(v)) {
            VertexSet u = g.neighbor_set(v) & visible;
            u -= filled;
            if (u.count() == 1) {
                filled.insert(u.first());
                changed = true;
            }
        }
    }
    return filled;
}

VertexSet closure(const Graph& g, const VertexSet& filled) {
    return run_closure(g, filled, filled.complement());
}

VertexSet induced_closure(const Graph& g, const VertexSet& filled, const VertexSet& active) {
    if (filled.intersects(active))
        throw ContractViolation("induced_closure: filled and active overlap");
    return run_closure(g, filled, active);
}

VertexSet psd_closure(const Graph& g, const VertexSet& filled) {
    VertexSet f = filled;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const VertexSet& comp : components(g, f.complement())) {
            for (int v = f.first(); v >= 0; v = f.next(v)) {
                VertexSet u = g.neighbor_set(v) & comp;
                if (u.count() == 1) {
                    f.insert(u.first());
                    changed = true;
                }
            }
        }
    }
    return f;
}

std::vector<Force> available_forces_induced(const Graph& g, const VertexSet& filled, const VertexSet& active) {
    VertexSet visible = filled | active;
    std::vector<Force> out;
    for (int v = filled.first(); v >= 0; v = filled.next(v)) {
        VertexSet u = g.neighbor_set(v) & visible;
        u -= filled;
        if (u.count() == 1) out.push_back({v, u.first()});
    }
    return out;
}

std::vector<Force> available_forces(const Graph& g, const VertexSet& filled) {
    return available_forces_induced(g, filled, filled.complement());
}

bool is_fort(const Graph& g, const VertexSet& w) {
    if (w.empty()) throw ContractViolation("is_fort: empty set");
    if (components(g, w).size() > 2) return false;
    VertexSet outside = w.complement();
    for (int v = outside.first(); v >= 0; v = outside.next(v))
        if ((g.neighbor_set(v) & w).count() == 1) return false;
    return true;
}

std::optional<VertexSet> find_unfilled_fort(const Graph& g, const VertexSet& filled, int search_limit) {
    int n = g.vertex_count();
    if (n > search_limit)
        throw ResourceLimitError("find_unfilled_fort: instance too large (" + std::to_string(n) + " vertices, limit " + std::to_string(search_limit) + ")");
    std::vector<int> unfilled = (filled.complement()).to_vector();
    int k = int(unfilled.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        VertexSet w(n);
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) w.insert(unfilled[i]);
        if (is_fort(g, w)) return w;
    }
    return std::nullopt;
}

}  // namespace zq
