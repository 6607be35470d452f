#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "treespan/decomp.hpp"
#include "treespan/enumerate.hpp"
#include "treespan/generators.hpp"

using namespace treespan;

namespace {

// Crossing edges between S and the rest of t.
int cut_size(const Tree& t, const std::vector<int>& s) {
  std::set<int> in(s.begin(), s.end());
  int cut = 0;
  for (auto [u, v] : t.edges()) cut += in.count(u) != in.count(v);
  return cut;
}

bool induced_connected(const Tree& t, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::set<int> in(s.begin(), s.end());
  std::set<int> seen{s[0]};
  std::vector<int> stack{s[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(u))
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == s.size();
}

void check_decomposition(const Tree& t, double beta, double eps, int Delta) {
  const int n = t.n();
  auto res = find_separable_subtree(t, beta, eps, Delta);
  CAPTURE(n);
  CAPTURE(beta);
  CAPTURE(eps);

  long long lower = static_cast<long long>(std::floor(beta * n));
  CHECK(static_cast<long long>(res.t1.size()) >= lower);
  CHECK(static_cast<double>(res.t1.size()) <= Delta * beta * n);
  CHECK(induced_connected(t, res.t1));
  CHECK(cut_size(t, res.t1) == 1);

  CHECK(std::binary_search(res.t1.begin(), res.t1.end(), res.cut_edge.first));
  CHECK(!std::binary_search(res.t1.begin(), res.t1.end(), res.cut_edge.second));
  CHECK(t.graph().has_edge(res.cut_edge.first, res.cut_edge.second));

  CHECK(std::includes(res.tprime.begin(), res.tprime.end(), res.t1.begin(), res.t1.end()));
  CHECK(induced_connected(t, res.tprime));
  long long dropped = n - static_cast<long long>(res.tprime.size());
  CHECK(dropped == static_cast<long long>(std::floor(2.0 * eps * n)));

  auto again = find_separable_subtree(t, beta, eps, Delta);
  CHECK(again.t1 == res.t1);
  CHECK(again.cut_edge == res.cut_edge);
  CHECK(again.tprime == res.tprime);
}

}  // namespace

TEST_CASE("separable subtree on the path") {
  Tree p10 = generate_tree(10, TreeFamily::kPath, 2, 0);
  auto res = find_separable_subtree(p10, 0.2, 0.05, 2);
  CHECK(res.t1 == std::vector<int>{6, 7, 8, 9});
  CHECK(res.cut_edge == std::pair<int, int>{6, 5});
  // One leaf is trimmed; vertex 0 is the unique vertex farthest from T1.
  CHECK(res.tprime == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("separable subtree on a star") {
  Tree star = generate_tree(4, TreeFamily::kSpider, 3, 0);  // K_{1,3} centered at 0
  auto res = find_separable_subtree(star, 0.25, 0.05, 3);
  CHECK(res.t1 == std::vector<int>{1});
  CHECK(res.cut_edge == std::pair<int, int>{1, 0});
  CHECK(res.tprime.size() == 4);
}

TEST_CASE("separable subtree preconditions") {
  Tree p10 = generate_tree(10, TreeFamily::kPath, 2, 0);
  auto rejects = [&](double beta, double eps, int Delta, const std::string& needle) {
    try {
      find_separable_subtree(p10, beta, eps, Delta);
      CHECK_MESSAGE(false, "expected rejection");
    } catch (const std::invalid_argument& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
    }
  };
  rejects(0.4, 0.2, 2, "must be < 1");   // 0.8 + 0.4
  rejects(0.05, 0.01, 2, ">= 1");        // beta n = 0.5
  rejects(0.2, 0.05, 1, "exceeds Delta");
}

TEST_CASE("separable subtree across enumerated trees") {
  for (int n : {6, 8, 9}) {
    for (const Tree& t : enumerate_free_trees(n, 4)) {
      int Delta = std::max(t.max_degree(), 1);
      for (double beta : {1.2 / n, 2.0 / n}) {
        for (double eps : {0.0, 0.6 / n}) {
          if (Delta * beta + 2 * eps >= 1.0) continue;
          check_decomposition(t, beta, eps, Delta);
        }
      }
    }
  }
}

TEST_CASE("separable subtree on larger random trees") {
  for (uint64_t s = 0; s < 10; ++s) {
    Tree t = generate_tree(200, TreeFamily::kRandom, 3, s);
    check_decomposition(t, 0.04, 0.02, 3);
    check_decomposition(t, 0.01, 0.1, 3);
  }
}

TEST_CASE("minimal spanning subtree") {
  Tree p5 = generate_tree(5, TreeFamily::kPath, 2, 0);
  CHECK(minimal_spanning_subtree(p5, {2}) == std::vector<int>{2});
  CHECK(minimal_spanning_subtree(p5, {0, 4}) == std::vector<int>{0, 1, 2, 3, 4});
  Tree star = generate_tree(4, TreeFamily::kSpider, 3, 0);
  CHECK(minimal_spanning_subtree(star, {1, 3}) == std::vector<int>{0, 1, 3});
  CHECK_THROWS_AS(minimal_spanning_subtree(p5, {}), std::invalid_argument);

  // Oracle: union of pairwise shortest paths.
  for (uint64_t s = 0; s < 10; ++s) {
    Tree t = generate_tree(15, TreeFamily::kRandom, 4, s);
    auto fw = ts_test::floyd_warshall(t.graph());
    std::vector<int> targets{1, 4, 9, 12};
    std::set<int> want;
    for (int a : targets)
      for (int b : targets)
        for (int v = 0; v < t.n(); ++v)
          if (fw[a][v] + fw[v][b] == fw[a][b]) want.insert(v);
    auto got = minimal_spanning_subtree(t, targets);
    CHECK(got == std::vector<int>(want.begin(), want.end()));
  }
}

TEST_CASE("star centers on the 11-path") {
  Tree p11 = generate_tree(11, TreeFamily::kPath, 2, 0);
  auto res = select_star_centers(p11);
  CHECK(res.centers == std::vector<int>{0, 5, 10});
  CHECK(res.skeleton.size() == 11);
}

TEST_CASE("star centers on tiny trees") {
  for (int n : {1, 2, 5}) {
    Tree t = generate_tree(n, TreeFamily::kPath, 2, 0);
    auto res = select_star_centers(t);
    CHECK(res.centers == std::vector<int>{0});
    CHECK(res.skeleton == std::vector<int>{0});
  }
}

namespace {

void check_star_centers(const Tree& t) {
  auto res = select_star_centers(t);
  auto fw = ts_test::floyd_warshall(t.graph());
  const int s = static_cast<int>(res.centers.size());

  CHECK(res.centers[0] == 0);
  CHECK(static_cast<int>(res.skeleton.size()) == 5 * s - 4);

  // Each later center sits at distance exactly 5 from the skeleton so far.
  for (int i = 1; i < s; ++i) {
    auto skel = minimal_spanning_subtree(
        t, std::vector<int>(res.centers.begin(), res.centers.begin() + i));
    int d = t.n();
    for (int v : skel) d = std::min(d, fw[res.centers[i]][v]);
    CHECK(d == 5);
  }

  // Everyone is within distance 4 of the full skeleton.
  for (int v = 0; v < t.n(); ++v) {
    int d = t.n();
    for (int u : res.skeleton) d = std::min(d, fw[v][u]);
    CHECK(d <= 4);
  }

  // Count bounds from the maximum degree.
  if (t.n() > 1) {
    long long d4 = 1;
    for (int i = 0; i < 4; ++i) d4 *= t.max_degree();
    CHECK(s >= (t.n() + 5 * d4 - 1) / (5 * d4));
    CHECK(s <= (t.n() + 4) / 5);
  }

  CHECK(minimal_spanning_subtree(t, res.centers) == res.skeleton);
}

}  // namespace

TEST_CASE("star centers satisfy the structural guarantees") {
  check_star_centers(generate_tree(63, TreeFamily::kDary, 3, 0));  // complete binary
  check_star_centers(generate_tree(40, TreeFamily::kCaterpillar, 4, 5));
  check_star_centers(generate_tree(57, TreeFamily::kSpider, 4, 0));
  for (uint64_t s = 0; s < 10; ++s)
    check_star_centers(generate_tree(45, TreeFamily::kRandom, 3, s));
  for (const Tree& t : enumerate_free_trees(9, 3)) check_star_centers(t);
}
