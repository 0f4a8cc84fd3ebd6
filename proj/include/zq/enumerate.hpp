#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zq/graph.hpp"

namespace zq {

/**
 * Streams exactly one representative of every isomorphism class of free
 * trees on n vertices. Rooted trees are generated by level-sequence
 * successor iteration; a rooting is kept only when its root is a centroid
 * carrying the smallest canonical code, so each free tree surfaces once.
 * Vertices are labeled in preorder of the kept rooting.
 */
class FreeTreeStream {
public:
    explicit FreeTreeStream(int n);
    std::optional<Graph> next();

private:
    int n_;
    bool exhausted_ = false;
    bool fresh_ = true;
    std::vector<int> levels_;

    bool advance_();
    bool keep_current_() const;
    Graph build_() const;
};

// Materialized stream, for tests and small n. Throws ResourceLimitError
// beyond `cap`.
std::vector<Graph> enumerate_trees(int n, int cap = 20);

// Canonical code of the tree rooted at `root` (children codes sorted);
// equal codes == isomorphic rooted trees.
std::string rooted_canonical_code(const Graph& t, int root);

// The one or two centroids of a tree, ascending.
std::vector<int> tree_centroids(const Graph& t);

// Canonical code of a free tree (rooted at its best centroid).
std::string tree_canonical_code(const Graph& t);

// All connected graphs on n vertices up to isomorphism (min-permutation
// canonical forms, grown by vertex extension). Exhaustive-verification
// support; n is capped at 7.
std::vector<Graph> enumerate_connected_graphs(int n);

// All graphs on n vertices up to isomorphism, connected or not (n <= 7).
std::vector<Graph> enumerate_graphs(int n);

}  // namespace zq
