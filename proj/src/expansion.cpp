#include "treespan/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "treespan/rng.hpp"

namespace treespan {

namespace {

constexpr double kSlack = 1e-9;  // absolute float slack on density comparisons

std::vector<char> membership(const Graph& g, const std::vector<int>& vs, const char* name) {
  std::vector<char> in(g.n(), 0);
  for (int v : vs) {
    g.check_vertex(v);
    if (in[v]) throw std::invalid_argument(std::string(name) + " contains vertex " +
                                           std::to_string(v) + " twice");
    in[v] = 1;
  }
  return in;
}

}  // namespace

long long edge_count_between(const Graph& g, const std::vector<int>& U,
                             const std::vector<int>& W) {
  std::vector<char> in_u = membership(g, U, "U");
  membership(g, W, "W");
  long long count = 0;
  for (int w : W)
    for (int v : g.neighbors(w))
      if (in_u[v]) ++count;
  return count;
}

std::string format_certificate(const ExpansionCertificate& c) {
  std::ostringstream out;
  out << "mode: " << (c.mode == CertMode::kExact ? "exact" : "sampled") << '\n';
  out << "verdict: " << (c.pass ? "pass" : "fail") << '\n';
  out << "p: " << c.p << '\n' << "eps: " << c.eps << '\n' << "C: " << c.C << '\n';
  if (c.mode == CertMode::kSampled) out << "trials: " << c.trials << '\n' << "seed: " << c.seed << '\n';
  if (c.degree_witness)
    out << "degree_witness: vertex " << c.degree_witness->first << " degree "
        << c.degree_witness->second << '\n';
  if (c.witness) {
    out << "witness_U:";
    for (int v : c.witness->U) out << ' ' << v;
    out << '\n' << "witness_W:";
    for (int v : c.witness->W) out << ' ' << v;
    out << '\n' << "edges: " << c.witness->edges << '\n'
        << "required: " << c.witness->required << '\n';
  }
  if (!c.detail.empty()) out << "detail: " << c.detail << '\n';
  return out.str();
}

namespace {

std::optional<std::pair<int, int>> degree_violation(const Graph& g, double p, double C) {
  double cap = C * p * g.n();
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > cap + kSlack) return std::make_pair(v, g.degree(v));
  return std::nullopt;
}

std::vector<int> mask_vertices(uint32_t mask) {
  std::vector<int> out;
  for (uint32_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

ExpansionCertificate verify_expander_exact(const Graph& g, double p, double eps, double C) {
  const int n = g.n();
  if (n > 24) throw std::invalid_argument("verify_expander_exact: n > 24");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("verify_expander_exact: p outside [0,1]");
  if (eps < 0.0) throw std::invalid_argument("verify_expander_exact: negative eps");
  if (C <= 0.0) throw std::invalid_argument("verify_expander_exact: C must be positive");

  ExpansionCertificate cert;
  cert.mode = CertMode::kExact;
  cert.p = p;
  cert.eps = eps;
  cert.C = C;

  if (auto dv = degree_violation(g, p, C)) {
    cert.pass = false;
    cert.degree_witness = dv;
    cert.detail = "max degree exceeds C p n = " + std::to_string(C * p * n);
    return cert;
  }

  const int lo = std::max(1, static_cast<int>(std::ceil(eps * n)));
  if (lo > n) {
    cert.pass = true;
    cert.detail = "no vertex sets of size >= " + std::to_string(lo);
    return cert;
  }

  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v] |= 1u << w;

  const double rate = p / C;
  std::vector<int> scores(n), order(n);
  std::vector<long long> prefix(n + 1, 0);

  // U sizes ascending, then W sizes ascending: the first violation found is
  // minimal in |U| and, for its U, minimal in |W|. For fixed U the cheapest W
  // of each size is the one built from the smallest per-vertex scores.
  for (int su = lo; su <= n; ++su) {
    std::optional<DensityWitness> best;
    uint32_t mask = (su == 32 ? ~0u : (1u << su) - 1);
    const uint32_t limit = (n == 32 ? ~0u : (1u << n));
    while (mask < limit) {
      for (int w = 0; w < n; ++w) scores[w] = std::popcount(adj[w] & mask);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return scores[a] < scores[b]; });
      for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + scores[order[i]];
      for (int sw = lo; sw <= n; ++sw) {
        double required = rate * su * sw;
        if (static_cast<double>(prefix[sw]) < required - kSlack) {
          if (!best || sw < static_cast<int>(best->W.size())) {
            DensityWitness wit;
            wit.U = mask_vertices(mask);
            wit.W.assign(order.begin(), order.begin() + sw);
            std::sort(wit.W.begin(), wit.W.end());
            wit.edges = prefix[sw];
            wit.required = required;
            best = std::move(wit);
          }
          break;  // larger W for this U cannot shrink the witness
        }
      }
      // Gosper's hack: next su-subset mask in increasing numeric order.
      uint32_t c = mask & -mask;
      uint32_t r = mask + c;
      if (r >= limit) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    if (best) {
      cert.pass = false;
      cert.witness = std::move(best);
      cert.detail = "density bound violated";
      return cert;
    }
  }
  cert.pass = true;
  cert.detail = "all pairs with |U|,|W| >= " + std::to_string(lo) + " meet the density bound";
  return cert;
}

ExpansionCertificate verify_expander_sampled(const Graph& g, double p, double eps, double C,
                                             long long trials, uint64_t seed) {
  const int n = g.n();
  if (trials < 1) throw std::invalid_argument("verify_expander_sampled: trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("verify_expander_sampled: p outside [0,1]");
  if (eps < 0.0) throw std::invalid_argument("verify_expander_sampled: negative eps");
  if (C <= 0.0) throw std::invalid_argument("verify_expander_sampled: C must be positive");

  ExpansionCertificate cert;
  cert.mode = CertMode::kSampled;
  cert.p = p;
  cert.eps = eps;
  cert.C = C;
  cert.trials = trials;
  cert.seed = seed;

  if (auto dv = degree_violation(g, p, C)) {
    cert.pass = false;
    cert.degree_witness = dv;
    cert.detail = "max degree exceeds C p n = " + std::to_string(C * p * n);
    return cert;
  }

  const int m = std::max(1, static_cast<int>(std::ceil(eps * n)));
  if (m > n) {
    cert.pass = true;
    cert.detail = "no vertex sets of size >= " + std::to_string(m);
    return cert;
  }

  auto rows = adjacency_bitsets(g);
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  const double required = (p / C) * m * m;

  for (long long t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<uint64_t>(t)));
    std::vector<int> U = rng.sample(vertices, m);
    std::vector<int> W = rng.sample(vertices, m);
    boost::dynamic_bitset<> ub(n);
    for (int v : U) ub.set(v);
    long long e = 0;
    for (int w : W) e += static_cast<long long>((rows[w] & ub).count());
    if (static_cast<double>(e) < required - kSlack) {
      cert.pass = false;
      std::sort(U.begin(), U.end());
      std::sort(W.begin(), W.end());
      cert.witness = DensityWitness{std::move(U), std::move(W), e, required};
      cert.detail = "violation at trial " + std::to_string(t);
      return cert;
    }
  }
  cert.pass = true;
  cert.detail = "no violation in " + std::to_string(trials) + " sampled pairs (not a proof)";
  return cert;
}

Graph prune_to_expander(const Graph& g, double D, double C) {
  if (C < 2.0) throw std::invalid_argument("prune_to_expander: C must be >= 2");
  if (D <= 0.0) throw std::invalid_argument("prune_to_expander: D must be positive");
  const double cap = C * D;
  std::vector<char> over(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) over[v] = g.degree(v) > cap + kSlack;
  Graph out(g.n());
  for (auto [u, v] : g.edges())
    if (!over[u] && !over[v]) out.add_edge(u, v);
  return out;
}

}  // namespace treespan
