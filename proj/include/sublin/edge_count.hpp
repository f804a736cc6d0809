#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sublin/biased_sampler.hpp"
#include "sublin/errors.hpp"
#include "sublin/multi_edge.hpp"

namespace sublin {

class Oracle;

// (degree, id) lexicographic vertex order; edges are oriented low -> high,
// which caps every out-degree at sqrt(2m).
inline bool vertex_precedes(std::uint32_t du, Vertex u, std::uint32_t dv, Vertex v) {
  if (du != dv) return du < dv;
  return u < v;
}

// Alg 10: doubling search over the Bernoulli inclusion rate; accept once the
// sample is large enough, return |S|/(2p). P(|m_hat - m| > eps*m) < delta.
template <class Access>
double count_by_sampling(Access& acc, double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must be in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must be in (0,1)");
  const std::uint32_t n = acc.n();
  if (n < 2) return 0.0;

  const double lgn = std::log2(static_cast<double>(n));
  const double accept = 6.0 * (std::log(1.0 / delta) + std::log(8.0 * lgn)) / (eps * eps);
  double p = 1.0 / (static_cast<double>(n) * n);
  for (;;) {
    double pc = std::min(1.0, p);
    std::vector<DirectedEdge> sample =
        bernoulli_samples(acc, pc, 1, delta / (8.0 * lgn))[0].edges;
    if (static_cast<double>(sample.size()) >= accept)
      return static_cast<double>(sample.size()) / (2.0 * pc);
    if (pc >= 1.0)  // sample is the whole directed edge set; exact
      return static_cast<double>(sample.size()) / 2.0;
    p *= 2.0;
  }
}

// Alg 11: Horvitz-Thompson estimate over a uniform light sample plus one
// biased heavy sample. P(m_hat >= 8m) <= 1/3 for any advice; if additionally
// m_advice <= m then |m_hat - m| <= eps*m with probability >= 2/3.
template <class Access>
double count_direct(Access& acc, double eps, double m_advice) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must be in (0,1)");
  if (!(m_advice >= 1.0)) throw ParameterError("edge-count advice must be >= 1");
  const std::uint32_t n = acc.n();
  if (n < 2) throw ParameterError("count_direct needs n >= 2");

  const double ln_n = std::log(static_cast<double>(n));
  const double logterm = ln_n + std::log(12.0);
  const double theta =
      std::min(eps * std::sqrt(m_advice * logterm / 32.0), eps * eps * n / (64.0 * ln_n));
  if (!(theta > 0)) throw ParameterError("degenerate threshold");

  const std::uint64_t k = static_cast<std::uint64_t>(std::ceil(2.0 * n * logterm / theta));
  double light_sum = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    Vertex v = acc.random_vertex();
    std::uint32_t d = acc.degree(v);
    if (static_cast<double>(d) < theta) light_sum += d;
  }

  BiasedSampler<Access> sampler(acc, theta, 1.0 / 12.0, m_advice);
  const double p_n = n / (m_advice * ln_n);
  double heavy_sum = 0;
  for (Vertex v : sampler.draw(p_n)) {
    std::uint32_t d = sampler.degree_of(v);
    heavy_sum += d / inclusion_probability(d, theta, p_n);
  }
  return n * light_sum / (2.0 * static_cast<double>(k)) + 0.5 * heavy_sum;
}

enum class DegreeClass { light, heavy };

// Classifies vertices by out-degree against a threshold theta by sampling
// uniform neighbors w and testing v < w in the orientation order. Guarantees
// (each with probability >= 1 - 1/n^3): d+(v) >= 2*theta -> heavy,
// d+(v) <= theta/2 -> light. Decisions are memoized.
template <class Access>
class OutDegreeClassifier {
 public:
  // Chernoff-backed constants; see the heavy/light guarantee above.
  static constexpr double kAdaptiveHits = 48.0;   // successes demanded by the adaptive rule
  static constexpr double kBudgetFactor = 18.0;   // fixed-budget samples per (d/theta)*ln n

  OutDegreeClassifier(Access& acc, double theta) : acc_(acc), theta_(theta) {
    ln_n_ = std::log(std::max<double>(acc.n(), 2));
  }

  // Sequential rule with cost O(d(v) log n / d+(v)): heavy iff the H-th
  // success arrives within H*d/theta draws.
  DegreeClass classify_adaptive(Vertex v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    DegreeClass c = adaptive(v);
    memo_.emplace(v, c);
    return c;
  }

  // Fixed budget of kBudgetFactor*(d/theta)*ln n draws, heavy iff at least
  // kBudgetFactor*ln n successes.
  DegreeClass classify_budgeted(Vertex v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    DegreeClass c = budgeted(v);
    memo_.emplace(v, c);
    return c;
  }

 private:
  bool sample_out_step(Vertex v, std::uint32_t d) {
    Vertex w = acc_.ith_neighbor(v, static_cast<std::uint32_t>(acc_.rng().index(d)) + 1);
    std::uint32_t dw = acc_.degree(w);
    return vertex_precedes(d, v, dw, w);
  }

  DegreeClass adaptive(Vertex v) {
    std::uint32_t d = acc_.degree(v);
    if (d == 0) return DegreeClass::light;
    const std::uint64_t hits_needed = static_cast<std::uint64_t>(std::ceil(kAdaptiveHits * ln_n_));
    const std::uint64_t budget = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(hits_needed) * d / theta_));
    std::uint64_t hits = 0;
    for (std::uint64_t draws = 1; draws <= budget; ++draws) {
      if (sample_out_step(v, d)) ++hits;
      if (hits >= hits_needed) return DegreeClass::heavy;
    }
    return DegreeClass::light;
  }

  DegreeClass budgeted(Vertex v) {
    std::uint32_t d = acc_.degree(v);
    if (d == 0) return DegreeClass::light;
    const std::uint64_t budget = static_cast<std::uint64_t>(
        std::ceil(kBudgetFactor * d * ln_n_ / theta_));
    const double need = kBudgetFactor * ln_n_;
    std::uint64_t hits = 0;
    for (std::uint64_t draws = 0; draws < budget; ++draws)
      if (sample_out_step(v, d)) ++hits;
    return static_cast<double>(hits) >= need ? DegreeClass::heavy : DegreeClass::light;
  }

  Access& acc_;
  double theta_;
  double ln_n_;
  std::unordered_map<Vertex, DegreeClass> memo_;
};

// Alg 12: edge counting with pair queries. Returns nullopt ("failure") when
// the phase-2 sample-size gate trips, which signals advice likely too small.
// P(m_hat > 7m) <= 1/3 for any advice; if m <= m_advice <= 2m then
// |m_hat - m| <= eps*m with probability >= 2/3.
template <class Access>
std::optional<double> count_pair_queries(Access& acc, double eps, double m_advice) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must be in (0,1)");
  if (!(m_advice >= 1.0)) throw ParameterError("edge-count advice must be >= 1");
  const std::uint32_t n = acc.n();
  if (n < 2) throw ParameterError("count_pair_queries needs n >= 2");

  const double m_up = m_advice / 2.0;
  const double m_down = 2.0 * m_advice;
  const double theta = eps * std::sqrt(m_down);
  const double tau = std::sqrt(m_down / (8.0 * eps));
  const double ln_n = std::log(static_cast<double>(n));

  OutDegreeClassifier<Access> classifier(acc, theta);
  std::unordered_map<Vertex, std::uint32_t> deg;
  auto degree_of = [&](Vertex v) {
    auto it = deg.find(v);
    if (it != deg.end()) return it->second;
    std::uint32_t d = acc.degree(v);
    deg.emplace(v, d);
    return d;
  };

  // phase 1: light out-degree mass
  const std::uint64_t k1 =
      static_cast<std::uint64_t>(std::ceil(432.0 * theta * n / (eps * eps * m_up)));
  double a1 = 0;
  for (std::uint64_t i = 0; i < k1; ++i) {
    Vertex v = acc.random_vertex();
    std::uint32_t d = degree_of(v);
    if (d == 0) continue;
    Vertex w = acc.ith_neighbor(v, static_cast<std::uint32_t>(acc.rng().index(d)) + 1);
    std::uint32_t dw = degree_of(w);
    if (vertex_precedes(d, v, dw, w) && classifier.classify_adaptive(v) == DegreeClass::light)
      a1 += d;
  }
  const double light_estimate = static_cast<double>(n) * a1 / static_cast<double>(k1);

  // phase 2: heavy out-degree mass via Horvitz-Thompson over marked vertices
  const std::uint64_t s_size =
      static_cast<std::uint64_t>(std::ceil(48.0 * n * ln_n / theta));
  std::vector<Vertex> s_heavy;  // multiset of sampled vertices with degree >= theta
  double s_heavy_degree = 0;
  for (std::uint64_t i = 0; i < s_size; ++i) {
    Vertex v = acc.random_vertex();
    std::uint32_t d = degree_of(v);
    if (static_cast<double>(d) >= theta) {
      s_heavy.push_back(v);
      s_heavy_degree += d;
    }
  }
  if (static_cast<double>(s_heavy.size()) > 576.0 * m_down * ln_n / (theta * theta) ||
      s_heavy_degree > 1152.0 * m_down * ln_n / theta)
    return std::nullopt;

  std::vector<Vertex> s_distinct(s_heavy);
  std::sort(s_distinct.begin(), s_distinct.end());
  s_distinct.erase(std::unique(s_distinct.begin(), s_distinct.end()), s_distinct.end());
  std::unordered_map<Vertex, std::uint64_t> s_mult;
  for (Vertex v : s_heavy) ++s_mult[v];

  // r(v) = |N(v) ∩ S'| counted with multiplicity; one pair query per distinct member
  std::unordered_map<Vertex, std::uint64_t> r_memo;
  auto r_of = [&](Vertex v) {
    auto it = r_memo.find(v);
    if (it != r_memo.end()) return it->second;
    std::uint64_t r = 0;
    for (Vertex u : s_distinct)
      if (acc.pair(v, u)) r += s_mult[u];
    r_memo.emplace(v, r);
    return r;
  };

  const double p = std::min(1.0, theta / m_up);
  const std::uint64_t k2 = static_cast<std::uint64_t>(std::ceil(468.0 / (eps * eps)));
  double a2_total = 0;
  for (std::uint64_t round = 0; round < k2; ++round) {
    // sample each directed edge out of S' (per copy) with probability p
    std::vector<Vertex> marked;
    std::unordered_set<Vertex> seen;
    for (Vertex u : s_heavy) {
      std::uint32_t d = degree_of(u);
      std::uint64_t take = acc.rng().binomial(d, p);
      for (std::uint64_t idx : wor_from_universe(d, take, acc.rng())) {
        Vertex x = acc.ith_neighbor(u, static_cast<std::uint32_t>(idx) + 1);
        if (seen.insert(x).second) marked.push_back(x);
      }
    }
    double a2 = 0;
    for (Vertex v : marked) {
      std::uint32_t d = degree_of(v);
      if (static_cast<double>(d) > tau) continue;
      if (classifier.classify_budgeted(v) != DegreeClass::heavy) continue;
      if (d == 0) continue;
      Vertex w = acc.ith_neighbor(v, static_cast<std::uint32_t>(acc.rng().index(d)) + 1);
      std::uint32_t dw = degree_of(w);
      if (!vertex_precedes(d, v, dw, w)) continue;
      double marked_prob = -std::expm1(static_cast<double>(r_of(v)) * std::log1p(-p));
      a2 += d / marked_prob;
    }
    a2_total += a2;
  }
  const double heavy_estimate = a2_total / static_cast<double>(k2);
  return light_estimate + heavy_estimate;
}

// Advice removal (geometric halving with median amplification). `run` returns
// nullopt on estimator failure, which enters the median as +infinity.
struct AdviceRemoval {
  double estimate = 0;
  bool low_confidence = false;
  std::uint32_t rounds = 0;
  std::uint64_t estimator_runs = 0;
  double final_advice = 0;
};

std::uint32_t advice_removal_repetitions(std::uint64_t n);

AdviceRemoval remove_advice(const std::function<std::optional<double>(double)>& run,
                            double advice_max, double overshoot_factor,
                            std::uint32_t repetitions);

// Oracle-facing wrappers used by the CLI: build the hash-order simulation when
// the model lacks native hashes, then run the advice-free composition.
double count_edges_sampling(Oracle& oracle, double eps, double delta);
AdviceRemoval count_edges_direct_auto(Oracle& oracle, double eps);
AdviceRemoval count_edges_pairs_auto(Oracle& oracle, double eps);

}  // namespace sublin
