#pragma once

#include <cstdint>
#include <random>

namespace sublin {

// splitmix64 finalizer; decent avalanche, cheap.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stateless counter-based hash: value of the (counter+1)-th splitmix64 output
// seeded with `seed`. Used for per-vertex hashes and seed fan-out so results
// do not depend on draw order.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Maps a 64-bit word to (0,1] as (h+1)/2^64, rounded to double.
inline double unit_from_u64(std::uint64_t h) {
  return (static_cast<double>(h) + 1.0) * 0x1p-64;
}

inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return counter_hash(master_seed, trial_index);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // uniform in [0,1)
  double real() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * real(); }

  // uniform in [0, n)
  std::uint64_t index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
  }

  bool bernoulli(double p) { return real() < p; }

  std::uint64_t binomial(std::uint64_t n, double p) {
    if (n == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    return std::binomial_distribution<std::uint64_t>(n, p)(eng_);
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sublin
