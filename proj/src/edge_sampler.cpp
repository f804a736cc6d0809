#include "sublin/edge_sampler.hpp"

#include "sublin/edge_count.hpp"
#include "sublin/hash_order_sim.hpp"
#include "sublin/oracle.hpp"

namespace sublin {

SampledEdge sample_edge(Oracle& oracle, double eps, std::optional<double> m_advice,
                        const SampleEdgeOptions& opt) {
  if (oracle.n() == 0) throw EmptyGraphError("sample_edge on empty graph");
  double advice;
  if (m_advice) {
    if (*m_advice < 1.0) throw EmptyGraphError("edge-count advice below 1");
    advice = *m_advice;
  } else {
    // constant-factor edge count; doubled so that m <= advice holds w.h.p.
    double estimate = count_edges_sampling(oracle, 0.5, 1.0 / 8.0);
    if (estimate < 0.5) throw EmptyGraphError("graph appears edgeless");
    advice = 2.0 * estimate;
  }
  return sample_edge_with_advice(oracle, eps, advice, opt);
}

}  // namespace sublin
