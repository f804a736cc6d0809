#include "sublin/triangle_count.hpp"

#include <cmath>

#include "sublin/edge_count.hpp"
#include "sublin/hash_order_sim.hpp"
#include "sublin/oracle.hpp"

namespace sublin {

namespace {

constexpr std::uint32_t kExactReadThreshold = 4096;

// Rough per-run query cost of one Alg 14 invocation; used only to decide when
// reading the whole graph is cheaper.
double projected_queries(double n, double m, double t_advice, double eps) {
  double ln_n = std::log(n);
  if (t_advice >= std::pow(m, 3) / (std::pow(n, 3) * std::pow(ln_n, 6)))
    return 3.0 * 138.0 * m / (eps * eps * std::pow(t_advice, 2.0 / 3.0));
  double theta = std::sqrt(m * t_advice / n);
  double p1 = std::min(1.0, 16.0 * ln_n / std::sqrt(theta));
  double p2 = std::min(1.0, 100.0 * std::sqrt(ln_n) * theta / (eps * eps * t_advice));
  double p3 = std::min(1.0, theta * ln_n / t_advice);
  double p4 = std::min(1.0, theta * ln_n / (eps * eps * t_advice));
  double bern = std::min(1.0, eps * eps * t_advice * t_advice / std::pow(theta, 3));
  double k = 432.0 * m * (ln_n + 2.0) / (eps * eps * theta);
  return n * (p1 + p2 + p3 + p4) + m * p2 * p2 * (1.0 + bern) + 3.0 * k;
}

}  // namespace

TriangleEstimate count_triangles(Oracle& oracle, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must be in (0,1)");
  const std::uint32_t n = oracle.n();
  NeighborhoodCache<Oracle> cache(oracle);

  auto exact_path = [&]() {
    TriangleEstimate r;
    r.estimate = static_cast<double>(exact_triangle_total(cache));
    r.branch = "exact";
    return r;
  };

  if (n <= kExactReadThreshold) return exact_path();

  HashOrderSimulator sim(oracle, oracle.rng().u64());
  const double m_hat = count_by_sampling(sim, 0.2, 0.05);
  if (m_hat < 1.0) {
    TriangleEstimate r;
    r.branch = "exact";
    return r;  // (near-)edgeless graph has no triangles
  }

  auto edges_for = [&](std::uint64_t count) -> EdgeSource {
    if (oracle.model().random_edge)
      return [&oracle]() { return oracle.random_edge(); };
    auto batch = std::make_shared<std::vector<DirectedEdge>>(
        sample_with_replacement(sim, count, 1.0 / 12.0));
    auto pos = std::make_shared<std::size_t>(0);
    return [batch, pos]() {
      if (*pos >= batch->size()) throw ContractError("edge source exhausted");
      return (*batch)[(*pos)++];
    };
  };

  const std::uint32_t reps = advice_removal_repetitions(n);
  const double overshoot = 3.0;  // Markov on the unbiased estimator
  double advice = std::pow(static_cast<double>(n), 3);
  TriangleEstimate result;
  std::vector<double> vals(reps);
  while (advice >= 1.0) {
    if (projected_queries(n, m_hat, advice, eps) * reps >= static_cast<double>(n))
      return exact_path();
    for (std::uint32_t i = 0; i < reps; ++i) {
      TriangleEstimate est =
          tri_count_vertex_sampling(cache, edges_for, eps, advice, m_hat);
      vals[i] = est.estimate;
      result.clamped = result.clamped || est.clamped;
      ++result.rounds;
    }
    std::nth_element(vals.begin(), vals.begin() + reps / 2, vals.end());
    double median = vals[reps / 2];
    if (median >= overshoot * advice) {
      result.estimate = median;
      result.branch = "vertex-sampling";
      return result;
    }
    advice /= 2.0;
  }
  return exact_path();
}

}  // namespace sublin
