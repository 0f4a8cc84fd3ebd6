#pragma once

#include <optional>
#include <vector>

#include "zq/graph.hpp"

namespace zq {

// Connected components of the induced subgraph g[active], ordered by their
// smallest vertex. Each component is internally connected and maximal.
std::vector<VertexSet> components(const Graph& g, const VertexSet& active);

// Filling rule to a fixed point on the whole graph: a filled vertex with
// exactly one unfilled neighbor fills it.
VertexSet closure(const Graph& g, const VertexSet& filled);

// Filling rule restricted to the induced subgraph g[filled ∪ active].
// Vertices outside filled ∪ active neither block nor enable a force.
// Requires filled ∩ active = ∅.
VertexSet induced_closure(const Graph& g, const VertexSet& filled, const VertexSet& active);

// Positive semidefinite filling: a filled vertex forces u when u is its
// unique unfilled neighbor within u's component of the unfilled subgraph.
VertexSet psd_closure(const Graph& g, const VertexSet& filled);

// A single available force: `source` (filled) has `target` as its unique
// unfilled neighbor.
struct Force {
    int source;
    int target;
};

// All forces available from `filled`, sorted by (source, target).
std::vector<Force> available_forces(const Graph& g, const VertexSet& filled);

// Forces available within the induced subgraph g[filled ∪ active].
std::vector<Force> available_forces_induced(const Graph& g, const VertexSet& filled, const VertexSet& active);

// Fort test: g[w] has at most two connected components and no vertex
// outside w has exactly one neighbor in w. Requires w nonempty.
bool is_fort(const Graph& g, const VertexSet& w);

// Exhaustive search for a fort disjoint from `filled`; test support only.
// Throws ResourceLimitError when the instance exceeds `search_limit` vertices.
std::optional<VertexSet> find_unfilled_fort(const Graph& g, const VertexSet& filled, int search_limit = 16);

}  // namespace zq
