#include "treespan/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "treespan/rng.hpp"

namespace treespan {

Graph generate_binomial(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("generate_binomial: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_binomial: p outside [0,1]");
  Graph g(n);
  if (n < 2 || p == 0.0) return g;
  if (p == 1.0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  Rng rng(seed);
  // Geometric gaps over the linearized pair index; O(m) draws.
  const double log1mp = std::log1p(-p);
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  long long pos = -1;
  int u = 0;
  long long row_start = 0;  // linear index of pair (u, u+1)
  while (true) {
    double x = 1.0 - rng.unit();  // in (0, 1]
    long long gap = static_cast<long long>(std::floor(std::log(x) / log1mp));
    pos += 1 + gap;
    if (pos >= total) break;
    while (pos - row_start >= n - 1 - u) {
      row_start += n - 1 - u;
      ++u;
    }
    int v = u + 1 + static_cast<int>(pos - row_start);
    g.add_edge(u, v);
  }
  return g;
}

Graph generate_unbalanced_bipartite(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("generate_unbalanced_bipartite: n must be >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("generate_unbalanced_bipartite: alpha outside (0,1)");
  int a = static_cast<int>(std::floor(alpha * n));
  if (a == 0 || a == n)
    throw std::invalid_argument("generate_unbalanced_bipartite: a part would be empty");
  Graph g(n);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < n; ++v) g.add_edge(u, v);
  return g;
}

TreeFamily parse_tree_family(const std::string& name) {
  if (name == "path") return TreeFamily::kPath;
  if (name == "random") return TreeFamily::kRandom;
  if (name == "caterpillar") return TreeFamily::kCaterpillar;
  if (name == "spider") return TreeFamily::kSpider;
  if (name == "dary") return TreeFamily::kDary;
  throw std::invalid_argument("unknown tree family \"" + name +
                              "\" (path|random|caterpillar|spider|dary)");
}

const char* family_name(TreeFamily f) {
  switch (f) {
    case TreeFamily::kPath: return "path";
    case TreeFamily::kRandom: return "random";
    case TreeFamily::kCaterpillar: return "caterpillar";
    case TreeFamily::kSpider: return "spider";
    case TreeFamily::kDary: return "dary";
  }
  return "?";
}

namespace {

[[noreturn]] void infeasible(const char* family, int n, int Delta) {
  throw std::invalid_argument(std::string("generate_tree: ") + family + " infeasible for n=" +
                              std::to_string(n) + ", Delta=" + std::to_string(Delta));
}

Tree make_path(int n, int Delta) {
  if (n >= 3 && Delta < 2) infeasible("path", n, Delta);
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return Tree::from_graph(std::move(g), 0);
}

Tree make_random(int n, int Delta, uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  std::vector<int> deg(n, 0);
  std::vector<int> avail;  // vertices with residual capacity
  avail.push_back(0);
  for (int i = 1; i < n; ++i) {
    if (avail.empty()) infeasible("random", n, Delta);
    size_t idx = rng.below(avail.size());
    int j = avail[idx];
    g.add_edge(j, i);
    if (++deg[j] == Delta) {
      avail[idx] = avail.back();
      avail.pop_back();
    }
    deg[i] = 1;
    if (Delta > 1) avail.push_back(i);
  }
  return Tree::from_graph(std::move(g), 0);
}

Tree make_caterpillar(int n, int Delta, uint64_t seed) {
  if (n <= 2 || Delta == 2) return make_path(n, Delta);
  if (Delta < 2) infeasible("caterpillar", n, Delta);
  // Shortest spine whose ends (capacity Delta-1) and inner vertices
  // (capacity Delta-2) can hold the remaining legs.
  int m = -1;
  for (int cand = 2; cand <= n; ++cand) {
    long long cap = 2LL * (Delta - 1) + static_cast<long long>(cand - 2) * (Delta - 2);
    if (n - cand <= cap) {
      m = cand;
      break;
    }
  }
  if (m < 0) infeasible("caterpillar", n, Delta);
  Rng rng(seed);
  Graph g(n);
  std::vector<int> cap(m);
  for (int i = 0; i < m; ++i) {
    if (i + 1 < m) g.add_edge(i, i + 1);
    cap[i] = (i == 0 || i == m - 1) ? Delta - 1 : Delta - 2;
  }
  std::vector<int> avail;
  for (int i = 0; i < m; ++i)
    if (cap[i] > 0) avail.push_back(i);
  for (int leg = m; leg < n; ++leg) {
    size_t idx = rng.below(avail.size());
    int s = avail[idx];
    g.add_edge(s, leg);
    if (--cap[s] == 0) {
      avail[idx] = avail.back();
      avail.pop_back();
    }
  }
  return Tree::from_graph(std::move(g), 0);
}

Tree make_spider(int n, int Delta) {
  if (n == 1) return Tree::from_graph(Graph(1), 0);
  int legs = std::min(Delta, n - 1);
  if (n - 1 > legs && Delta < 2) infeasible("spider", n, Delta);
  Graph g(n);
  // n-1 vertices split into `legs` paths hanging off vertex 0, sizes as even
  // as possible.
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int len = (n - 1) / legs + (l < (n - 1) % legs ? 1 : 0);
    int prev = 0;
    for (int j = 0; j < len; ++j) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return Tree::from_graph(std::move(g), 0);
}

Tree make_dary(int n, int Delta) {
  int b = Delta - 1;
  if (b == 0) {
    if (n == 1) return Tree::from_graph(Graph(1), 0);
    infeasible("dary", n, Delta);
  }
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge((i - 1) / b, i);
  return Tree::from_graph(std::move(g), 0);
}

}  // namespace

Tree generate_tree(int n, TreeFamily family, int Delta, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_tree: n must be >= 1");
  if (Delta < 1 && n > 1) throw std::invalid_argument("generate_tree: Delta must be >= 1");
  switch (family) {
    case TreeFamily::kPath: return make_path(n, Delta);
    case TreeFamily::kRandom: return make_random(n, Delta, seed);
    case TreeFamily::kCaterpillar: return make_caterpillar(n, Delta, seed);
    case TreeFamily::kSpider: return make_spider(n, Delta);
    case TreeFamily::kDary: return make_dary(n, Delta);
  }
  throw std::invalid_argument("generate_tree: bad family");
}

}  // namespace treespan
