#pragma once

#include <utility>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

// A connected subtree T1 joined to the rest of the tree by a single edge,
// together with the pruned tree T' (T minus floor(2 eps n) leaves, all far
// from T1).
struct DecompositionResult {
  std::vector<int> t1;               // sorted
  std::pair<int, int> cut_edge;      // (a, b) with a in T1
  std::vector<int> tprime;           // sorted, contains t1
};

// Descends from root 0 into the smallest-index child branch of size >=
// floor(beta n) while the current branch holds more than Delta beta n
// vertices; the final branch is T1 (so floor(beta n) <= |T1| <= Delta beta n
// and exactly one tree edge leaves it). T' then drops floor(2 eps n) leaves,
// each step removing the leaf farthest from T1 (ties to the smallest index,
// T1 vertices never removed). Requires Delta beta + 2 eps < 1, beta n >= 1
// and max_degree(t) <= Delta.
DecompositionResult find_separable_subtree(const Tree& t, double beta, double eps, int Delta);

struct StarCenterResult {
  std::vector<int> centers;   // x1, x2, ... in selection order
  std::vector<int> skeleton;  // sorted vertex set of the minimal subtree over the centers
};

// x1 = vertex 0; then greedily the smallest-index vertex at tree-distance
// exactly 5 from the current skeleton, until none remains. Each new center
// extends the skeleton by exactly 5 vertices, so |skeleton| = 5s - 4, and on
// exit every vertex sits within distance 4 of the skeleton.
StarCenterResult select_star_centers(const Tree& t);

// Vertex set of the minimal subtree of t containing `vertices` (the union of
// all pairwise tree paths), sorted.
std::vector<int> minimal_spanning_subtree(const Tree& t, const std::vector<int>& vertices);

}  // namespace treespan
