#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace treespan {

// Bit mixer used for deriving independent seeds from a master seed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t derive_seed(uint64_t master, uint64_t salt) {
  return splitmix64(master ^ splitmix64(salt));
}

// mt19937_64 engine with hand-rolled draws. The standard pins the engine but
// not the distributions, and records must replay byte-identically, so no
// std::*_distribution here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Unbiased integer in [0, bound).
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound = 0");
    uint64_t min = (0 - bound) % bound;
    uint64_t x;
    do {
      x = next();
    } while (x < min);
    return x % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return unit() < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct elements of v, uniform over k-subsets. Order is a side effect
  // of the draw, callers that need canonical order sort the result.
  template <typename T>
  std::vector<T> sample(const std::vector<T>& v, size_t k) {
    if (k > v.size()) throw std::invalid_argument("Rng::sample: k > population");
    std::vector<T> pool = v;
    std::vector<T> out;
    out.reserve(k);
    for (size_t i = 0; i < k; ++i) {
      size_t j = i + below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace treespan
