#include "treespan/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace treespan {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n()) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (n() == 0) return 0;
  int d = n();
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("graph_union: vertex counts differ (" +
                                std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
  Graph out = a;
  for (int u = 0; u < b.n(); ++u)
    for (int v : b.neighbors(u))
      if (u < v) out.add_edge(u, v);
  return out;
}

std::vector<boost::dynamic_bitset<>> adjacency_bitsets(const Graph& g) {
  std::vector<boost::dynamic_bitset<>> rows(g.n(), boost::dynamic_bitset<>(g.n()));
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) rows[u].set(v);
  return rows;
}

void bfs(const Graph& g, const std::vector<int>& sources, std::vector<int>* dist,
         std::vector<int>* parent) {
  dist->assign(g.n(), -1);
  if (parent) parent->assign(g.n(), -1);
  std::deque<int> q;
  for (int s : sources) {
    g.check_vertex(s);
    if ((*dist)[s] == 0) continue;
    (*dist)[s] = 0;
    q.push_back(s);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u)) {
      if ((*dist)[v] != -1) continue;
      (*dist)[v] = (*dist)[u] + 1;
      if (parent) (*parent)[v] = u;
      q.push_back(v);
    }
  }
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<int> dist;
  bfs(g, {0}, &dist);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == -1; });
}

Tree Tree::from_graph(Graph g, std::optional<int> root) {
  if (g.n() < 1) throw std::invalid_argument("Tree: needs at least one vertex");
  if (g.m() != g.n() - 1)
    throw std::invalid_argument("Tree: " + std::to_string(g.m()) + " edges for " +
                                std::to_string(g.n()) + " vertices, expected n-1");
  if (!is_connected(g)) throw std::invalid_argument("Tree: graph is disconnected");
  Tree t;
  t.g_ = std::move(g);
  if (root) t.set_root(*root);
  return t;
}

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                      std::optional<int> root) {
  return from_graph(Graph::from_edges(n, edges), root);
}

void Tree::set_root(int r) {
  g_.check_vertex(r);
  root_ = r;
}

Embedding::Embedding(int tree_n, int host_n) {
  if (tree_n < 0 || host_n < 0) throw std::invalid_argument("Embedding: negative size");
  fwd_.assign(tree_n, -1);
  inv_.assign(host_n, -1);
}

bool Embedding::defined(int t) const {
  if (t < 0 || t >= tree_n()) throw std::out_of_range("Embedding: tree vertex out of range");
  return fwd_[t] != -1;
}

int Embedding::at(int t) const {
  if (!defined(t)) throw std::logic_error("Embedding: vertex " + std::to_string(t) + " unmapped");
  return fwd_[t];
}

std::optional<int> Embedding::preimage(int h) const {
  if (h < 0 || h >= host_n()) throw std::out_of_range("Embedding: host vertex out of range");
  if (inv_[h] == -1) return std::nullopt;
  return inv_[h];
}

void Embedding::set(int t, int h) {
  if (defined(t)) throw std::logic_error("Embedding: vertex " + std::to_string(t) + " already mapped");
  if (preimage(h))
    throw std::logic_error("Embedding: host vertex " + std::to_string(h) + " already occupied");
  fwd_[t] = h;
  inv_[h] = t;
  ++mapped_;
}

void Embedding::move(int t, int new_h) {
  int old = at(t);
  if (preimage(new_h))
    throw std::logic_error("Embedding: host vertex " + std::to_string(new_h) + " already occupied");
  inv_[old] = -1;
  fwd_[t] = new_h;
  inv_[new_h] = t;
}

void Embedding::erase(int t) {
  int h = at(t);
  fwd_[t] = -1;
  inv_[h] = -1;
  --mapped_;
}

std::vector<std::pair<int, int>> Embedding::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(mapped_);
  for (int t = 0; t < tree_n(); ++t)
    if (fwd_[t] != -1) out.emplace_back(t, fwd_[t]);
  return out;
}

VerifyResult verify_embedding(const Tree& t, const Graph& host, const Embedding& f) {
  if (f.tree_n() != t.n() || f.host_n() != host.n())
    return {false, "embedding sized for different tree or host"};
  for (int v = 0; v < t.n(); ++v)
    if (!f.defined(v)) return {false, "tree vertex " + std::to_string(v) + " unmapped"};
  // fwd/inv consistency makes the map injective; cross-check anyway.
  std::vector<char> seen(host.n(), 0);
  for (int v = 0; v < t.n(); ++v) {
    int h = f.at(v);
    if (seen[h])
      return {false, "host vertex " + std::to_string(h) + " used twice"};
    seen[h] = 1;
  }
  for (auto [u, v] : t.edges()) {
    if (!host.has_edge(f.at(u), f.at(v)))
      return {false, "tree edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") maps to non-edge (" + std::to_string(f.at(u)) + "," +
                         std::to_string(f.at(v)) + ")"};
  }
  return {};
}

}  // namespace treespan
