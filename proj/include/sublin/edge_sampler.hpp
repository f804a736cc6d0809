#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "sublin/errors.hpp"
#include "sublin/graph.hpp"

namespace sublin {

class Oracle;

// Parameters of the constrained random walk. A vertex is heavy when
// d(v) >= theta; the walk's first vertex must be light and every later
// intermediate vertex heavy.
struct WalkParams {
  std::uint32_t theta = 1;    // ceil(sqrt(2*m_advice))
  std::uint32_t max_len = 3;  // ceil(lg(1/eps)) + 2
  double eps = 0.5;

  // requires 0 < eps <= 1/2 and m_advice >= 1 with m <= m_advice
  static WalkParams for_accuracy(double eps, double m_advice) {
    if (!(eps > 0.0 && eps <= 0.5)) throw ParameterError("eps must be in (0, 1/2]");
    if (!(m_advice >= 1.0)) throw ParameterError("edge-count advice must be >= 1");
    WalkParams wp;
    wp.eps = eps;
    wp.theta = static_cast<std::uint32_t>(std::ceil(std::sqrt(2.0 * m_advice)));
    wp.max_len = static_cast<std::uint32_t>(std::ceil(std::log2(1.0 / eps))) + 2;
    return wp;
  }
};

struct AttemptResult {
  bool success = false;
  DirectedEdge edge{0, 0};
};

// One walk attempt of length k (failure is a normal outcome).
template <class Access>
AttemptResult sampling_attempt(Access& acc, std::uint32_t k, const WalkParams& wp) {
  if (acc.n() == 0) throw EmptyGraphError("sampling_attempt on empty graph");
  if (k < 1 || k > wp.max_len) throw ParameterError("walk length out of [1, max_len]");

  Vertex prev = acc.random_vertex();
  std::uint32_t d0 = acc.degree(prev);
  if (d0 >= wp.theta) return {};  // heavy start
  std::uint64_t j = acc.rng().index(wp.theta) + 1;
  if (d0 < j) return {};
  Vertex cur = acc.ith_neighbor(prev, static_cast<std::uint32_t>(j));

  for (std::uint32_t i = 2; i <= k; ++i) {
    std::uint32_t d = acc.degree(cur);
    if (d < wp.theta) return {};  // intermediate vertex must be heavy
    Vertex nxt = acc.ith_neighbor(cur, static_cast<std::uint32_t>(acc.rng().index(d)) + 1);
    prev = cur;
    cur = nxt;
  }
  return {true, {prev, cur}};
}

struct SampleEdgeOptions {
  std::uint64_t attempt_cap = 1'000'000'000;  // guards pathological advice
};

struct SampledEdge {
  DirectedEdge edge;
  std::uint64_t attempts = 0;  // attempts spent, for complexity regression tests
};

// Repeats (k ~ U[max_len], one attempt) until success. The output distribution
// is pointwise eps-close to uniform over the 2m directed edges provided
// m <= m_advice.
template <class Access>
SampledEdge sample_edge_with_advice(Access& acc, double eps, double m_advice,
                                    const SampleEdgeOptions& opt = {}) {
  WalkParams wp = WalkParams::for_accuracy(eps, m_advice);
  for (std::uint64_t a = 1; a <= opt.attempt_cap; ++a) {
    std::uint32_t k = static_cast<std::uint32_t>(acc.rng().index(wp.max_len)) + 1;
    AttemptResult r = sampling_attempt(acc, k, wp);
    if (r.success) return {r.edge, a};
  }
  throw UnsatisfiableError("sample_edge: attempt cap exhausted; advice may exceed any valid bound "
                           "or the graph may be edgeless");
}

// Advice-free entry point: obtains a constant-factor edge count via the
// Bernoulli counting estimator (over simulated hash order when the model has
// no hashes), then samples.
SampledEdge sample_edge(Oracle& oracle, double eps, std::optional<double> m_advice = {},
                        const SampleEdgeOptions& opt = {});

}  // namespace sublin
