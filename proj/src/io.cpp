#include "treespan/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treespan {

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

// Reads the next non-empty line; returns false on clean EOF.
bool next_line(std::istream& in, std::string* out, int* line_no) {
  std::string s;
  while (std::getline(in, s)) {
    ++*line_no;
    if (s.find_first_not_of(" \t\r") != std::string::npos) {
      *out = s;
      return true;
    }
  }
  return false;
}

std::pair<long long, long long> parse_int_pair(const std::string& s, int line) {
  std::istringstream iss(s);
  long long a, b;
  if (!(iss >> a >> b)) fail("expected two integers, got \"" + s + "\"", line);
  std::string rest;
  if (iss >> rest) fail("trailing tokens in \"" + s + "\"", line);
  return {a, b};
}

Graph read_graph_impl(std::istream& in) {
  int line_no = 0;
  std::string s;
  if (!next_line(in, &s, &line_no)) fail("empty input, expected \"n m\" header", line_no + 1);
  auto [n, m] = parse_int_pair(s, line_no);
  if (n < 0 || m < 0) fail("negative count in header", line_no);
  if (n > 50'000'000) fail("vertex count implausibly large", line_no);
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, &s, &line_no))
      fail("expected " + std::to_string(m) + " edges, file ended after " + std::to_string(i),
           line_no + 1);
    auto [u, v] = parse_int_pair(s, line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("edge endpoint out of range in \"" + s + "\"", line_no);
    if (u == v) fail("loop at vertex " + std::to_string(u), line_no);
    int a = static_cast<int>(u), b = static_cast<int>(v);
    if (g.has_edge(a, b)) fail("duplicate edge in \"" + s + "\"", line_no);
    g.add_edge(a, b);
  }
  if (next_line(in, &s, &line_no)) fail("trailing content \"" + s + "\" after edge list", line_no);
  return g;
}

}  // namespace

Graph read_graph(std::istream& in) { return read_graph_impl(in); }

Tree read_tree(std::istream& in) {
  Graph g = read_graph_impl(in);
  try {
    return Tree::from_graph(std::move(g));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("not a tree: ") + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_tree(std::ostream& out, const Tree& t) { write_graph(out, t.graph()); }

Embedding read_embedding(std::istream& in, int tree_n, int host_n) {
  int line_no = 0;
  std::string s;
  if (!next_line(in, &s, &line_no)) fail("empty input, expected pair count header", line_no + 1);
  std::istringstream iss(s);
  long long k;
  if (!(iss >> k) || k < 0) fail("expected nonnegative pair count, got \"" + s + "\"", line_no);
  Embedding f(tree_n, host_n);
  for (long long i = 0; i < k; ++i) {
    if (!next_line(in, &s, &line_no))
      fail("expected " + std::to_string(k) + " pairs, file ended after " + std::to_string(i),
           line_no + 1);
    auto [t, h] = parse_int_pair(s, line_no);
    if (t < 0 || t >= tree_n) fail("tree vertex out of range in \"" + s + "\"", line_no);
    if (h < 0 || h >= host_n) fail("host vertex out of range in \"" + s + "\"", line_no);
    if (f.defined(static_cast<int>(t))) fail("tree vertex mapped twice in \"" + s + "\"", line_no);
    if (f.preimage(static_cast<int>(h)))
      fail("host vertex used twice in \"" + s + "\"", line_no);
    f.set(static_cast<int>(t), static_cast<int>(h));
  }
  if (next_line(in, &s, &line_no)) fail("trailing content \"" + s + "\" after pairs", line_no);
  return f;
}

void write_embedding(std::ostream& out, const Embedding& f) {
  auto ps = f.pairs();
  out << ps.size() << '\n';
  for (auto [t, h] : ps) out << t << ' ' << h << '\n';
}

namespace {

template <typename F>
auto with_input_file(const std::string& path, F fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return fn(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

template <typename F>
void with_output_file(const std::string& path, F fn) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  fn(out);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

Graph read_graph_file(const std::string& path) {
  return with_input_file(path, [](std::istream& in) { return read_graph(in); });
}

Tree read_tree_file(const std::string& path) {
  return with_input_file(path, [](std::istream& in) { return read_tree(in); });
}

Embedding read_embedding_file(const std::string& path, int tree_n, int host_n) {
  return with_input_file(path,
                         [&](std::istream& in) { return read_embedding(in, tree_n, host_n); });
}

void write_graph_file(const std::string& path, const Graph& g) {
  with_output_file(path, [&](std::ostream& out) { write_graph(out, g); });
}

void write_tree_file(const std::string& path, const Tree& t) {
  with_output_file(path, [&](std::ostream& out) { write_tree(out, t); });
}

void write_embedding_file(const std::string& path, const Embedding& f) {
  with_output_file(path, [&](std::ostream& out) { write_embedding(out, f); });
}

}  // namespace treespan
