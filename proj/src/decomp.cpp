#include "treespan/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace treespan {

namespace {

// Subtree sizes below each vertex when rooted at `root`.
std::vector<int> sizes_below(const Tree& t, int root, std::vector<int>* parent_out) {
  std::vector<int> dist;
  bfs(t.graph(), {root}, &dist, parent_out);
  std::vector<int> order(t.n());
  for (int v = 0; v < t.n(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] > dist[b]; });
  std::vector<int> size(t.n(), 1);
  for (int v : order)
    if (v != root) size[(*parent_out)[v]] += size[v];
  return size;
}

}  // namespace

DecompositionResult find_separable_subtree(const Tree& t, double beta, double eps, int Delta) {
  const int n = t.n();
  auto bad = [](const std::string& msg) {
    throw std::invalid_argument("find_separable_subtree: " + msg);
  };
  if (Delta < 1) bad("Delta must be >= 1");
  if (beta <= 0.0) bad("beta must be positive");
  if (eps < 0.0) bad("eps must be nonnegative");
  if (t.max_degree() > Delta)
    bad("tree max degree " + std::to_string(t.max_degree()) + " exceeds Delta = " +
        std::to_string(Delta));
  if (Delta * beta + 2.0 * eps >= 1.0)
    bad("Delta*beta + 2*eps = " + std::to_string(Delta * beta + 2.0 * eps) + " must be < 1");
  if (beta * n < 1.0)
    bad("beta*n = " + std::to_string(beta * n) + " must be >= 1 (n >= 1/beta)");

  const long long lower = static_cast<long long>(std::floor(beta * n));
  const double upper = static_cast<double>(Delta) * beta * n;

  std::vector<int> parent;
  std::vector<int> size = sizes_below(t, 0, &parent);

  // The proof's descent. While the current branch exceeds Delta beta n, some
  // child branch holds at least a Delta-th of it minus the branch vertex,
  // hence at least floor(beta n); enter the smallest-index such child.
  int v = 0;
  long long cur = n;
  int cut_child = -1;
  while (static_cast<double>(cur) > upper) {
    int pick = -1;
    for (int w : t.neighbors(v)) {
      if (parent[w] != v) continue;
      if (size[w] >= lower && (pick == -1 || w < pick)) pick = w;
    }
    if (pick == -1)
      throw std::logic_error("find_separable_subtree: descent stuck at vertex " +
                             std::to_string(v));
    v = pick;
    cur = size[v];
    cut_child = v;
  }

  DecompositionResult res;
  res.cut_edge = {cut_child, parent[cut_child]};

  // T1 = the branch below cut_child.
  std::vector<char> in_t1(n, 0);
  std::queue<int> q;
  q.push(cut_child);
  in_t1[cut_child] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : t.neighbors(u))
      if (w != parent[u] && !in_t1[w]) {
        in_t1[w] = 1;
        q.push(w);
      }
  }
  for (int u = 0; u < n; ++u)
    if (in_t1[u]) res.t1.push_back(u);

  // Trim floor(2 eps n) leaves farthest from T1.
  long long drop = static_cast<long long>(std::floor(2.0 * eps * n));
  std::vector<int> dist_t1;
  bfs(t.graph(), res.t1, &dist_t1);
  std::vector<int> deg(n);
  for (int u = 0; u < n; ++u) deg[u] = t.degree(u);
  std::vector<char> removed(n, 0);
  // Max-heap on (distance, -index): farthest first, ties to smallest index.
  std::priority_queue<std::pair<int, int>> heap;
  for (int u = 0; u < n; ++u)
    if (deg[u] <= 1 && !in_t1[u]) heap.emplace(dist_t1[u], -u);
  for (long long i = 0; i < drop; ++i) {
    int u = -1;
    while (!heap.empty()) {
      int cand = -heap.top().second;
      // Entries go stale when a deletion turns their neighbor into a leaf.
      if (!removed[cand] && deg[cand] <= 1) {
        u = cand;
        break;
      }
      heap.pop();
    }
    if (u == -1)
      throw std::logic_error("find_separable_subtree: ran out of removable leaves");
    heap.pop();
    removed[u] = 1;
    for (int w : t.neighbors(u)) {
      if (removed[w]) continue;
      if (--deg[w] == 1 && !in_t1[w]) heap.emplace(dist_t1[w], -w);
    }
  }
  for (int u = 0; u < n; ++u)
    if (!removed[u]) res.tprime.push_back(u);
  return res;
}

std::vector<int> minimal_spanning_subtree(const Tree& t, const std::vector<int>& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("minimal_spanning_subtree: empty vertex set");
  for (int v : vertices) t.graph().check_vertex(v);
  std::vector<int> dist, parent;
  bfs(t.graph(), {vertices[0]}, &dist, &parent);
  std::vector<char> in(t.n(), 0);
  in[vertices[0]] = 1;
  for (int v : vertices)
    for (int u = v; !in[u]; u = parent[u]) in[u] = 1;
  std::vector<int> out;
  for (int v = 0; v < t.n(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

StarCenterResult select_star_centers(const Tree& t) {
  const int n = t.n();
  StarCenterResult res;
  res.centers.push_back(0);
  std::vector<char> in_skel(n, 0);
  in_skel[0] = 1;
  std::vector<int> skel{0};

  while (true) {
    std::vector<int> dist, parent;
    bfs(t.graph(), skel, &dist, &parent);
    int next = -1;
    for (int v = 0; v < n; ++v)
      if (dist[v] == 5) {
        next = v;
        break;
      }
    if (next == -1) break;
    res.centers.push_back(next);
    // Walk the 5-edge path back to the skeleton; exactly 5 new vertices.
    for (int u = next; !in_skel[u]; u = parent[u]) {
      in_skel[u] = 1;
      skel.push_back(u);
    }
  }
  std::sort(skel.begin(), skel.end());
  res.skeleton = std::move(skel);
  return res;
}

}  // namespace treespan
