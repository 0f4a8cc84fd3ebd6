#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zq/graph.hpp"
#include "zq/solver.hpp"

namespace zq {

// Decomposition of a tree with maximum degree three whose degree-3 vertices
// all lie on one path: the spine, the pendant paths (teeth) hanging off it,
// and every pair of initial vertices (u, v), i.e. pairs whose connecting
// path has all degree-3 vertices strictly inside it.
struct CombDecomposition {
    struct Tooth {
        int attach;              // spine vertex
        std::vector<int> path;   // pendant path, attach-side first
    };
    std::vector<int> spine;
    std::vector<Tooth> teeth;
    std::vector<std::pair<int, int>> initial_pairs;  // u < v, lexicographic
};

std::optional<CombDecomposition> comb_decompose(const Graph& t);

enum class GraphClass { path, tree_non_path, comb, zigzag, pick_comb, other };

std::string to_string(GraphClass c);

// Classification of a connected graph at a given q, with the solver values
// and structural certificates backing the label. zigzag and pick_comb are
// operational labels (via Z = 2), not structural recognitions.
struct Classification {
    GraphClass label = GraphClass::other;
    QValue q = QValue::infinity();
    int zq_value = 0;
    std::optional<int> z_value;
    std::optional<CombDecomposition> comb;
    std::string describe() const;
};

Classification classify(const Graph& g, QValue q, const SolverConfig& cfg = {});

// k+1 three-leaf stars glued on a shared leaf: 3k+4 vertices, center 0.
Graph gen_spider(int k);

// Two adjacent centers 0 and 1 with a and b pendant leaves.
Graph gen_double_star(int a, int b);

// Complete binary tree of the given depth (root depth 0), heap labeling.
Graph gen_complete_binary(int depth);

// Comb from per-spine-vertex tooth lengths; spine is 0..s-1, teeth appended
// in order. Rejects specs whose degrees could not stay <= 3.
Graph gen_comb(const std::vector<std::vector<int>>& teeth_per_spine);

enum class PickAttachment {
    path,    // interior path of `size` vertices joining the initial pair
    zigzag,  // even cycle C_{2*size} with its ending pair identified to the
             // initial pair: the edge (u,v) plus 2*size-2 interior vertices
};

// Comb plus an attachment at a pair of initial vertices (the first initial
// pair when none is given).
Graph gen_pick_comb(const Graph& comb, PickAttachment kind, int size,
                    std::optional<std::pair<int, int>> pair = std::nullopt);

}  // namespace zq
