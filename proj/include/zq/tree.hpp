#pragma once

#include <vector>

#include "zq/graph.hpp"

namespace zq {

// Rooted view of a tree: parent/children arrays consistent with the tree's
// edges, plus a preorder (parents before children) traversal order.
struct RootedTree {
    Graph tree;
    int root = 0;
    std::vector<int> parent;                 // parent[root] == -1
    std::vector<std::vector<int>> children;
    std::vector<int> preorder;

    static RootedTree rooted(const Graph& t, int root);
};

// Per-vertex token costs of the bottom-up recursion: childless vertices cost
// 0; otherwise with children's subtree costs sorted descending c0 >= c1 >= ...
// the cost is max_i (i + c_i).
struct FTable {
    int root = 0;
    std::vector<int> values;
};

FTable f_values(const RootedTree& t);

// Exact Z_1 of a tree: max over roots v of f_values at v (equivalently
// 1 + min over roots, a verified identity). Defined as 1 for |T| <= 2.
int z1_tree(const Graph& t);

// Direct evaluation of the closed form
//   2 + max_v max_{subtree S containing v} min over maximal paths P of S
//   from v of the sum of (deg_S(w) - 2) over w in P,
// by exhaustive subtree enumeration. Independent oracle for z1_tree;
// exponential, capped.
int eq1_direct(const Graph& t, int cap = 12);

// Leaf-pair form: 2 + min over distinct leaf pairs (u1, u2) of
// max over internal vertices v of the u1-u2 path of the min over maximal
// paths from v in S of the path's degree sum, where S removes the two
// components of T - v holding u1 and u2, and degrees along P are taken in T
// (only v's degree differs between S and T, by construction of S).
// Requires a tree that is not a path.
int leafpair_formula(const Graph& t);

// Minimum number of vertex-disjoint paths covering the tree.
int path_cover_number(const Graph& t);

// Plays free moves against an adversarial oracle (single-handoff announcements
// of two unfilled subtrees with no common filled neighbor) until either every
// vertex is filled or exactly one filled vertex has two or more unfilled
// neighbors and no force is available. Returns the enlarged filled set.
VertexSet normalize_tree_state(const Graph& t, const VertexSet& filled);

}  // namespace zq
