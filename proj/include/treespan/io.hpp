#pragma once

#include <iosfwd>
#include <string>

#include "treespan/graph.hpp"

namespace treespan {

// Graph and tree files share one format:
//   n m
//   u v        (m lines, written with u < v; readers accept either order)
// An embedding file is
//   k
//   t h        (k lines, tree vertex -> host vertex)
// Malformed input throws std::runtime_error naming the offending line.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const Tree& t);
void write_tree_file(const std::string& path, const Tree& t);

Embedding read_embedding(std::istream& in, int tree_n, int host_n);
Embedding read_embedding_file(const std::string& path, int tree_n, int host_n);
void write_embedding(std::ostream& out, const Embedding& f);
void write_embedding_file(const std::string& path, const Embedding& f);

}  // namespace treespan
