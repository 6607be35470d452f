#pragma once

#include <string>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

// Canonical parenthesis code of the rooted tree (t, root); equal codes iff
// root-preserving isomorphic.
std::string ahu_code_rooted(const Tree& t, int root);

// Canonical code of the free tree: rooted code at the centroid, minimum over
// both centroids when the tree is bicentroidal. Equal codes iff isomorphic.
std::string ahu_code(const Tree& t);

// Centroid vertices (one or two, adjacent), sorted.
std::vector<int> tree_centroids(const Tree& t);

// One representative per isomorphism class of trees on n vertices with
// maximum degree <= Delta, sorted by canonical code. Guard: n <= 16.
std::vector<Tree> enumerate_free_trees(int n, int Delta);

}  // namespace treespan
