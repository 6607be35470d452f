#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace treespan {

// Undirected simple graph on vertices 0..n-1. Adjacency lists stay sorted;
// no loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  long long m() const { return m_; }

  // Inserting an edge that is already present is a no-op.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;

  // Canonical edge list: u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  void check_vertex(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  long long m_ = 0;
};

// Union keeps the common vertex set; throws if sizes differ.
Graph graph_union(const Graph& a, const Graph& b);

std::vector<boost::dynamic_bitset<>> adjacency_bitsets(const Graph& g);

// Multi-source BFS. dist[v] = -1 when unreachable, parent[v] = -1 for sources
// and unreachable vertices. Sources are seeded in the given order and
// adjacency lists are sorted, so the parent forest is deterministic.
void bfs(const Graph& g, const std::vector<int>& sources, std::vector<int>* dist,
         std::vector<int>* parent = nullptr);

bool is_connected(const Graph& g);

// Tree on vertices 0..n-1: connected with exactly n-1 edges, checked at
// construction. The root is optional metadata used by rooted algorithms.
class Tree {
 public:
  Tree() = default;

  static Tree from_graph(Graph g, std::optional<int> root = std::nullopt);
  static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                         std::optional<int> root = std::nullopt);

  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }
  const std::vector<int>& neighbors(int v) const { return g_.neighbors(v); }
  int degree(int v) const { return g_.degree(v); }
  int max_degree() const { return g_.max_degree(); }
  std::vector<std::pair<int, int>> edges() const { return g_.edges(); }

  std::optional<int> root() const { return root_; }
  void set_root(int r);

  bool operator==(const Tree&) const = default;

 private:
  Graph g_;
  std::optional<int> root_;
};

// Partial injective map from tree vertices to host vertices.
class Embedding {
 public:
  Embedding() = default;
  Embedding(int tree_n, int host_n);

  int tree_n() const { return static_cast<int>(fwd_.size()); }
  int host_n() const { return static_cast<int>(inv_.size()); }
  int size() const { return mapped_; }

  bool defined(int t) const;
  int at(int t) const;  // throws when undefined
  std::optional<int> preimage(int h) const;

  void set(int t, int h);      // throws when t is mapped or h is occupied
  void move(int t, int new_h); // remap t onto a free host vertex
  void erase(int t);

  // Pairs (t, h) sorted by t.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Embedding&) const = default;

 private:
  std::vector<int> fwd_;  // tree -> host, -1 unset
  std::vector<int> inv_;  // host -> tree, -1 unset
  int mapped_ = 0;
};

struct VerifyResult {
  bool ok = true;
  std::string message;  // first violation
};

// Checks that every tree vertex is mapped injectively into the host and every
// tree edge lands on a host edge. When |T| = |V(host)| this makes the map a
// bijection, i.e. a spanning embedding.
VerifyResult verify_embedding(const Tree& t, const Graph& host, const Embedding& f);

}  // namespace treespan
