#include "treespan/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace treespan {

double Params::eps_prime() const {
  if (eps_prime_ov) return *eps_prime_ov;
  return std::pow(alpha, Delta + 2) * std::pow(C, -2.0 * Delta) *
         std::pow(2.0, -(Delta + 8.0)) * std::pow(static_cast<double>(Delta), -7.0);
}

double Params::eps() const {
  if (eps_ov) return *eps_ov;
  return std::min(alpha / (3.0 * Delta), eps_prime() / (2.0 * Delta));
}

double Params::beta() const {
  if (beta_ov) return *beta_ov;
  return alpha / (4.0 * Delta * Delta);
}

double Params::d0() const { return 2.0 * C * Delta / alpha; }

double Params::d() const { return D > 0.0 ? D : d0(); }

long long Params::k(long long n) const {
  return static_cast<long long>(std::floor(eps() * static_cast<double>(n))) - 1;
}

long long Params::leftover(long long n) const {
  return static_cast<long long>(std::floor(2.0 * eps_prime() * static_cast<double>(n)));
}

long long Params::star_threshold(long long n) const {
  if (star_threshold_ov) return *star_threshold_ov;
  if (!paper_exact) return 0;
  return static_cast<long long>(std::ceil(2.0 * (Delta + 3) * eps_prime() * static_cast<double>(n)));
}

long long Params::reservoir_threshold(long long n) const {
  if (reservoir_threshold_ov) return *reservoir_threshold_ov;
  if (!paper_exact) return 0;
  return static_cast<long long>(std::ceil(2.0 * (Delta + 3) * eps_prime() * static_cast<double>(n)));
}

void Params::validate() const {
  auto bad = [](const std::string& msg) { throw std::invalid_argument("Params: " + msg); };
  if (!(alpha > 0.0 && alpha < 1.0)) bad("alpha must lie in (0,1)");
  if (Delta < 1) bad("Delta must be >= 1");
  if (C < 1.0) bad("C must be >= 1");
  if (D < 0.0) bad("D must be nonnegative");
  if (eps_prime() <= 0.0) bad("eps_prime must be positive");
  if (eps() <= 0.0) bad("eps must be positive");
  if (beta() <= 0.0) bad("beta must be positive");
  if (paper_exact && D > 0.0 && D < d0())
    bad("paper-exact mode needs D >= 2 C Delta / alpha = " + std::to_string(d0()));
  if (retries < 1) bad("retries must be >= 1");
  if (budget_factor < 1) bad("budget_factor must be >= 1");
}

}  // namespace treespan
