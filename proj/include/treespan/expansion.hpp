#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

// e(U, W): edges with one end in U and one in W; edges inside U cap W count
// twice. Equals sum over w in W of |N(w) cap U|.
long long edge_count_between(const Graph& g, const std::vector<int>& U,
                             const std::vector<int>& W);

enum class CertMode { kExact, kSampled };

// A density violation: e(U, W) < (p/C) |U| |W| with |U|, |W| >= ceil(eps n).
struct DensityWitness {
  std::vector<int> U, W;
  long long edges = 0;
  double required = 0.0;
};

struct ExpansionCertificate {
  CertMode mode = CertMode::kExact;
  bool pass = false;
  double p = 0.0, eps = 0.0, C = 0.0;
  long long trials = 0;  // sampled mode
  uint64_t seed = 0;     // sampled mode
  std::optional<DensityWitness> witness;
  // Set when the max-degree condition fails: (vertex, degree).
  std::optional<std::pair<int, int>> degree_witness;
  std::string detail;
};

std::string format_certificate(const ExpansionCertificate& c);

// Full membership check: Delta(g) <= C p n and every pair (U, W) with
// |U|, |W| >= ceil(eps n) satisfies e(U, W) >= (p/C)|U||W|. Fail carries a
// witness minimal in |U|, then |W|. Guard: n <= 24; the density bound is not
// monotone in set size, so every size is enumerated.
ExpansionCertificate verify_expander_exact(const Graph& g, double p, double eps, double C);

// Degree condition checked exactly; density bound checked on `trials` sampled
// pairs with |U| = |W| = ceil(eps n). One-sided: a fail is a real witness, a
// pass proves nothing. Trials draw independent seeds, so order is immaterial.
ExpansionCertificate verify_expander_sampled(const Graph& g, double p, double eps, double C,
                                             long long trials, uint64_t seed);

// Drops every edge incident to a vertex whose degree in g exceeds C*D.
// Degrees are read from g once, so the result has Delta <= C*D and pruning
// again changes nothing.
Graph prune_to_expander(const Graph& g, double D, double C);

// Adjacency spectrum of a d-regular graph. `regular` false means refusal;
// `refusal` then names two vertices with unequal degrees.
struct SpectralResult {
  bool regular = false;
  int d = 0;
  double lambda = 0.0;                // max |eigenvalue| excluding one copy of d
  std::vector<double> eigenvalues;    // ascending
  std::string refusal;
};

// Dense symmetric eigendecomposition, guard n <= 2000.
SpectralResult spectral_certificate(const Graph& g);

struct MixingWitness {
  std::vector<int> A, B;
  double deviation = 0.0;  // |e(A,B) - (d/n)|A||B||
  double bound = 0.0;      // lambda sqrt(|A||B|)
  double ratio = 0.0;      // deviation / sqrt(|A||B|)
};

struct MixingResult {
  bool pass = false;
  MixingWitness worst;  // pair maximizing ratio
};

// Checks |e(A,B) - (d/n)|A||B|| <= lambda sqrt(|A||B|) for all nonempty
// A, B. Guard: n <= 16 (the scan is Theta(4^n)).
MixingResult mixing_lemma_check(const Graph& g, double d, double lambda);

}  // namespace treespan
