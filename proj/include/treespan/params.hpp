#pragma once

#include <optional>

namespace treespan {

// Embedding parameters. alpha, Delta, C, D are the primitive knobs; the rest
// derive from them unless overridden. The derived eps_prime is astronomically
// small for realistic alpha/Delta/C, so experiment configs override eps_prime,
// eps and the two thresholds to keep desk-scale runs meaningful. paper_exact
// switches the strict preconditions and derived thresholds back on.
struct Params {
  double alpha = 0.3;
  int Delta = 3;
  double C = 2.0;
  double D = 0.0;  // 0 means "use d0()"

  std::optional<double> eps_prime_ov;
  std::optional<double> eps_ov;
  std::optional<double> beta_ov;
  std::optional<long long> star_threshold_ov;
  std::optional<long long> reservoir_threshold_ov;

  bool paper_exact = false;

  int retries = 50;             // phase-1 placement attempts
  long long budget_factor = 50; // phase-2 cap: budget_factor * |tree|

  double eps_prime() const;  // alpha^(Delta+2) * C^(-2 Delta) * 2^(-Delta-8) * Delta^(-7)
  double eps() const;        // min(alpha/(3 Delta), eps_prime()/(2 Delta))
  double beta() const;       // alpha / (2 Delta)^2
  double d0() const;         // 2 C Delta / alpha
  double d() const;          // D or d0()

  long long k(long long n) const;         // floor(eps n) - 1
  long long leftover(long long n) const;  // floor(2 eps_prime n), dropped before phase 2

  // Audit floor for phase 1, ceil(2 (Delta+3) eps_prime n) unless overridden.
  long long star_threshold(long long n) const;
  long long reservoir_threshold(long long n) const;

  void validate() const;  // throws std::invalid_argument naming the bad field
};

}  // namespace treespan
