#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "treespan/expansion.hpp"

namespace treespan {

SpectralResult spectral_certificate(const Graph& g) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("spectral_certificate: empty graph");
  if (n > 2000) throw std::invalid_argument("spectral_certificate: n > 2000");

  SpectralResult res;
  int lo = 0, hi = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(lo)) lo = v;
    if (g.degree(v) > g.degree(hi)) hi = v;
  }
  if (g.degree(lo) != g.degree(hi)) {
    res.regular = false;
    res.refusal = "not regular: vertex " + std::to_string(lo) + " has degree " +
                  std::to_string(g.degree(lo)) + ", vertex " + std::to_string(hi) +
                  " has degree " + std::to_string(g.degree(hi));
    return res;
  }
  res.regular = true;
  res.d = g.degree(0);

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.compute(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectral_certificate: eigensolver did not converge");

  res.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  // Drop one copy of the top eigenvalue (d for connected regular graphs); the
  // remaining extremes bound every other |eigenvalue|.
  if (n >= 2) res.lambda = std::max(std::abs(res.eigenvalues[0]), std::abs(res.eigenvalues[n - 2]));
  return res;
}

MixingResult mixing_lemma_check(const Graph& g, double d, double lambda) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("mixing_lemma_check: empty graph");
  if (n > 16) throw std::invalid_argument("mixing_lemma_check: n > 16");

  const uint32_t full = (n == 32 ? ~0u : (1u << n)) - 1;
  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v] |= 1u << w;

  std::vector<double> sqrt_tab(static_cast<size_t>(n) * n + 1);
  for (size_t i = 0; i < sqrt_tab.size(); ++i) sqrt_tab[i] = std::sqrt(static_cast<double>(i));

  const double density = d / n;
  std::vector<int> cnt(n);
  std::vector<int> f(static_cast<size_t>(full) + 1, 0);

  MixingResult res;
  res.worst.ratio = -1.0;
  uint32_t worst_a = 0, worst_b = 0;

  for (uint32_t b = 1; b <= full; ++b) {
    for (int v = 0; v < n; ++v) cnt[v] = std::popcount(adj[v] & b);
    const int pb = std::popcount(b);
    // f[A] = e(A, B) built by peeling A's lowest vertex.
    for (uint32_t a = 1; a <= full; ++a) {
      f[a] = f[a & (a - 1)] + cnt[std::countr_zero(a)];
      const int pa = std::popcount(a);
      double dev = std::abs(static_cast<double>(f[a]) - density * pa * pb);
      double ratio = dev / sqrt_tab[static_cast<size_t>(pa) * pb];
      if (ratio > res.worst.ratio) {
        res.worst.ratio = ratio;
        res.worst.deviation = dev;
        worst_a = a;
        worst_b = b;
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    if (worst_a & (1u << v)) res.worst.A.push_back(v);
    if (worst_b & (1u << v)) res.worst.B.push_back(v);
  }
  res.worst.bound = lambda * sqrt_tab[res.worst.A.size() * res.worst.B.size()];
  res.pass = res.worst.ratio <= lambda + 1e-9;
  return res;
}

}  // namespace treespan
