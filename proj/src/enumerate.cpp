#include "treespan/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace treespan {

namespace {

std::string ahu_below(const Tree& t, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : t.neighbors(v))
    if (w != parent) child_codes.push_back(ahu_below(t, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto& c : child_codes) out += c;
  out += ")";
  return out;
}

std::vector<int> subtree_sizes(const Tree& t, int root, std::vector<int>* parent_out) {
  int n = t.n();
  std::vector<int> order, parent(n, -1), size(n, 1);
  order.reserve(n);
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : t.neighbors(v))
      if (w != parent[v]) {
        parent[w] = v;
        order.push_back(w);
      }
  }
  for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  if (parent_out) *parent_out = std::move(parent);
  return size;
}

}  // namespace

std::string ahu_code_rooted(const Tree& t, int root) {
  t.graph().check_vertex(root);
  return ahu_below(t, root, -1);
}

std::vector<int> tree_centroids(const Tree& t) {
  int n = t.n();
  std::vector<int> parent;
  std::vector<int> size = subtree_sizes(t, 0, &parent);
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];  // component through the parent
    for (int w : t.neighbors(v))
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    if (heaviest <= n / 2) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ahu_code(const Tree& t) {
  auto cs = tree_centroids(t);
  std::string best = ahu_code_rooted(t, cs[0]);
  for (size_t i = 1; i < cs.size(); ++i) best = std::min(best, ahu_code_rooted(t, cs[i]));
  return best;
}

std::vector<Tree> enumerate_free_trees(int n, int Delta) {
  if (n < 1) throw std::invalid_argument("enumerate_free_trees: n must be >= 1");
  if (n > 16) throw std::invalid_argument("enumerate_free_trees: n > 16 not supported");
  if (Delta < 0) throw std::invalid_argument("enumerate_free_trees: negative Delta");

  // Grow representatives level by level: every degree-bounded tree on k+1
  // vertices is a degree-bounded tree on k vertices plus one leaf.
  std::vector<Tree> level;
  level.push_back(Tree::from_graph(Graph(1)));
  for (int k = 1; k < n; ++k) {
    std::vector<Tree> next;
    std::vector<std::string> codes;
    std::unordered_set<std::string> seen;
    for (const Tree& t : level) {
      if (Delta < 1) continue;
      for (int v = 0; v < k; ++v) {
        if (t.degree(v) >= Delta) continue;
        Graph g(k + 1);
        for (auto [a, b] : t.edges()) g.add_edge(a, b);
        g.add_edge(v, k);
        Tree grown = Tree::from_graph(std::move(g));
        std::string code = ahu_code(grown);
        if (seen.insert(code).second) {
          next.push_back(std::move(grown));
          codes.push_back(std::move(code));
        }
      }
    }
    std::vector<int> idx(next.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return codes[a] < codes[b]; });
    std::vector<Tree> sorted;
    sorted.reserve(next.size());
    for (int i : idx) sorted.push_back(std::move(next[i]));
    level = std::move(sorted);
  }
  return level;
}

}  // namespace treespan
