#include "sublin/edge_count.hpp"

#include <algorithm>
#include <limits>

#include "sublin/hash_order_sim.hpp"
#include "sublin/oracle.hpp"

namespace sublin {

std::uint32_t advice_removal_repetitions(std::uint64_t n) {
  double lnln = std::log(std::log(static_cast<double>(std::max<std::uint64_t>(n, 16))));
  return std::max<std::uint32_t>(9, static_cast<std::uint32_t>(std::ceil(24.0 * lnln)));
}

AdviceRemoval remove_advice(const std::function<std::optional<double>(double)>& run,
                            double advice_max, double overshoot_factor,
                            std::uint32_t repetitions) {
  if (!(advice_max >= 1.0)) throw ParameterError("advice_max must be >= 1");
  if (!(overshoot_factor > 1.0)) throw ParameterError("overshoot factor must exceed 1");

  AdviceRemoval out;
  double advice = advice_max;
  std::vector<double> vals(repetitions);
  double median = 0;
  for (;;) {
    ++out.rounds;
    for (std::uint32_t i = 0; i < repetitions; ++i) {
      std::optional<double> v = run(advice);
      vals[i] = v ? *v : std::numeric_limits<double>::infinity();
      ++out.estimator_runs;
    }
    std::nth_element(vals.begin(), vals.begin() + repetitions / 2, vals.end());
    median = vals[repetitions / 2];
    if (median >= overshoot_factor * advice) {
      out.estimate = median;
      out.low_confidence = !std::isfinite(median);
      out.final_advice = advice;
      return out;
    }
    advice /= 2.0;
    if (advice < 1.0) {
      out.estimate = median;
      out.low_confidence = true;
      out.final_advice = advice;
      return out;
    }
  }
}

double count_edges_sampling(Oracle& oracle, double eps, double delta) {
  if (oracle.model().kind == ModelKind::hash_ordered_neighbor)
    return count_by_sampling(oracle, eps, delta);
  HashOrderSimulator sim(oracle, oracle.rng().u64());
  return count_by_sampling(sim, eps, delta);
}

AdviceRemoval count_edges_direct_auto(Oracle& oracle, double eps) {
  double n = std::max<double>(oracle.n(), 2);
  auto runner = [&](double advice) -> std::optional<double> {
    return count_direct(oracle, eps, advice);
  };
  auto runner_sim = [&](double advice) -> std::optional<double> {
    HashOrderSimulator sim(oracle, oracle.rng().u64());
    return count_direct(sim, eps, advice);
  };
  std::uint32_t reps = advice_removal_repetitions(oracle.n());
  if (oracle.model().kind == ModelKind::hash_ordered_neighbor)
    return remove_advice(runner, n * n, 8.0, reps);
  return remove_advice(runner_sim, n * n, 8.0, reps);
}

AdviceRemoval count_edges_pairs_auto(Oracle& oracle, double eps) {
  double n = std::max<double>(oracle.n(), 2);
  auto runner = [&](double advice) -> std::optional<double> {
    return count_pair_queries(oracle, eps, advice);
  };
  return remove_advice(runner, n * n, 7.0, advice_removal_repetitions(oracle.n()));
}

}  // namespace sublin
