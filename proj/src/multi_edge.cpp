#include "sublin/multi_edge.hpp"

#include <algorithm>

namespace sublin {

std::vector<std::uint64_t> wor_from_universe(std::uint64_t universe, std::uint64_t k, Rng& rng) {
  if (k > universe) throw DomainError("cannot sample more elements than the universe holds");
  if (k == 0) return {};
  if (k == universe) {
    std::vector<std::uint64_t> all(universe);
    for (std::uint64_t i = 0; i < universe; ++i) all[i] = i;
    return all;
  }
  bool complement = k > universe / 2;
  std::uint64_t want = complement ? universe - k : k;
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(want * 2);
  while (picked.size() < want) picked.insert(rng.index(universe));
  std::vector<std::uint64_t> out;
  out.reserve(k);
  if (complement) {
    for (std::uint64_t i = 0; i < universe; ++i)
      if (!picked.contains(i)) out.push_back(i);
  } else {
    out.assign(picked.begin(), picked.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::uint64_t binomial_at_least_one(std::uint64_t n, double p, Rng& rng) {
  if (n == 0) throw DomainError("binomial_at_least_one needs n >= 1");
  if (p >= 1.0) return n;
  if (p <= 0.0) throw DomainError("binomial_at_least_one needs p > 0");
  const double np = static_cast<double>(n) * p;
  if (np > 30.0) {
    // P(X=0) = (1-p)^n < 1e-13; plain rejection
    for (;;) {
      std::uint64_t x = rng.binomial(n, p);
      if (x >= 1) return x;
    }
  }
  // inverse CDF walk over the conditional distribution
  const double p0 = std::exp(static_cast<double>(n) * std::log1p(-p));
  double u = p0 + (1.0 - p0) * rng.real();
  double pmf = p0;
  double cdf = p0;
  std::uint64_t i = 0;
  const double ratio = p / (1.0 - p);
  while (i < n) {
    pmf *= static_cast<double>(n - i) / static_cast<double>(i + 1) * ratio;
    ++i;
    cdf += pmf;
    if (u <= cdf) return i;
  }
  return n;
}

}  // namespace sublin
