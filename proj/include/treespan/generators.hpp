#pragma once

#include <cstdint>
#include <string>

#include "treespan/graph.hpp"

namespace treespan {

// G(n,p): every pair independently an edge with probability p.
Graph generate_binomial(int n, double p, uint64_t seed);

// Complete bipartite graph on parts {0..a-1} and {a..n-1}, a = floor(alpha n).
// Both parts must be nonempty.
Graph generate_unbalanced_bipartite(int n, double alpha);

enum class TreeFamily { kPath, kRandom, kCaterpillar, kSpider, kDary };

TreeFamily parse_tree_family(const std::string& name);
const char* family_name(TreeFamily f);

// Bounded-degree tree of the given family. path/spider/dary are deterministic;
// random attaches each new vertex to a uniform earlier vertex with residual
// capacity (no rejection), caterpillar scatters legs over the shortest
// feasible spine. Throws when the family is infeasible for (n, Delta).
Tree generate_tree(int n, TreeFamily family, int Delta, uint64_t seed);

}  // namespace treespan
