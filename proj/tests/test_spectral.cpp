#include <cmath>
#include <numeric>

#include "doctest.h"
#include "treespan/expansion.hpp"

using namespace treespan;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer pentagon
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

}  // namespace

TEST_CASE("spectra of the classical examples") {
  // K_n spectrum {n-1, -1 x (n-1)}; C_4 is {2, 0, 0, -2}; Petersen {3, 1 x 5, -2 x 4}.
  auto k4 = spectral_certificate(complete(4));
  REQUIRE(k4.regular);
  CHECK(k4.d == 3);
  CHECK(k4.lambda == doctest::Approx(1.0).epsilon(1e-8));

  auto c4 = spectral_certificate(cycle(4));
  REQUIRE(c4.regular);
  CHECK(c4.d == 2);
  CHECK(c4.lambda == doctest::Approx(2.0).epsilon(1e-8));

  auto pet = spectral_certificate(petersen());
  REQUIRE(pet.regular);
  CHECK(pet.d == 3);
  CHECK(pet.lambda == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("trace and top eigenvalue checks") {
  for (const Graph& g : {complete(4), cycle(4), cycle(7), petersen(), complete(9)}) {
    auto res = spectral_certificate(g);
    REQUIRE(res.regular);
    double trace = std::accumulate(res.eigenvalues.begin(), res.eigenvalues.end(), 0.0);
    CHECK(std::abs(trace) < 1e-6);
    CHECK(res.eigenvalues.back() == doctest::Approx(static_cast<double>(res.d)).epsilon(1e-8));
  }
}

TEST_CASE("disconnected regular graphs have lambda = d") {
  Graph two_triangles(6);
  for (int b : {0, 3})
    for (int i = 0; i < 3; ++i) two_triangles.add_edge(b + i, b + (i + 1) % 3);
  auto res = spectral_certificate(two_triangles);
  REQUIRE(res.regular);
  CHECK(res.d == 2);
  CHECK(res.lambda == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("refusals and guards") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto res = spectral_certificate(p3);
  CHECK(!res.regular);
  CHECK(res.refusal.find("degree") != std::string::npos);

  auto k1 = spectral_certificate(Graph(1));
  REQUIRE(k1.regular);
  CHECK(k1.d == 0);
  CHECK(k1.lambda == 0.0);

  CHECK_THROWS_AS(spectral_certificate(Graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(spectral_certificate(Graph(2001)), std::invalid_argument);
}

TEST_CASE("mixing lemma on certified graphs") {
  struct Case {
    Graph g;
    double d, lambda;
  };
  for (const auto& [g, d, lambda] :
       {Case{complete(4), 3, 1}, Case{cycle(4), 2, 2}, Case{petersen(), 3, 2}}) {
    auto res = mixing_lemma_check(g, d, lambda);
    CHECK(res.pass);
    CHECK(res.worst.ratio <= lambda + 1e-9);
    // The reported worst pair reproduces its own numbers.
    long long e = edge_count_between(g, res.worst.A, res.worst.B);
    double dev = std::abs(static_cast<double>(e) -
                          d / static_cast<double>(g.n()) * res.worst.A.size() * res.worst.B.size());
    CHECK(dev == doctest::Approx(res.worst.deviation).epsilon(1e-9));
    CHECK(res.worst.bound ==
          doctest::Approx(lambda * std::sqrt(static_cast<double>(res.worst.A.size()) *
                                             res.worst.B.size())));
  }
}

TEST_CASE("mixing lemma rejects an understated lambda") {
  auto res = mixing_lemma_check(complete(4), 3.0, 0.0);
  CHECK(!res.pass);
  CHECK(res.worst.ratio > 0.0);
  CHECK(!res.worst.A.empty());
  CHECK(!res.worst.B.empty());
  CHECK_THROWS_AS(mixing_lemma_check(Graph(17), 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("spectral lambda is tight for the mixing check") {
  // lambda from the certificate passes; shaving it below the worst ratio fails.
  for (const Graph& g : {complete(4), cycle(4), petersen()}) {
    auto spec = spectral_certificate(g);
    REQUIRE(spec.regular);
    auto ok = mixing_lemma_check(g, spec.d, spec.lambda);
    CHECK(ok.pass);
    auto bad = mixing_lemma_check(g, spec.d, ok.worst.ratio - 1e-6);
    CHECK(!bad.pass);
  }
}
