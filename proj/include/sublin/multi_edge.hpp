#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "sublin/biased_sampler.hpp"
#include "sublin/errors.hpp"
#include "sublin/graph.hpp"
#include "sublin/rng.hpp"

namespace sublin {

enum class Provenance { light, heavy, merged };

struct EdgeSampleSet {
  std::vector<DirectedEdge> edges;
  Provenance provenance = Provenance::merged;
};

// Uniform k-subset of [0, universe), expected O(k) time. Rejection sampling,
// switching to the complement when k > universe/2.
std::vector<std::uint64_t> wor_from_universe(std::uint64_t universe, std::uint64_t k, Rng& rng);

// k ~ (Bin(n, p) | k >= 1). Exact CDF walk for small n*p, rejection otherwise.
std::uint64_t binomial_at_least_one(std::uint64_t n, double p, Rng& rng);

// Alg 6: each directed edge with light source included independently with
// probability p. Draws k ~ Bin(n*ceil(theta), p) distinct (vertex, slot) pairs
// by rejection and keeps the pairs that name an edge.
template <class Access>
EdgeSampleSet sample_light_edges(Access& acc, double theta, double p) {
  if (p > 0.9) throw ContractError("light-edge sampler requires p <= 0.9 (use the dense path)");
  EdgeSampleSet out;
  out.provenance = Provenance::light;
  const std::uint64_t n = acc.n();
  if (n == 0 || p <= 0.0) return out;

  const std::uint64_t slots = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(theta)));
  if (slots > (1ULL << 62) / std::max<std::uint64_t>(n, 1))
    throw ParameterError("light-edge pair universe overflows");
  const std::uint64_t universe = n * slots;
  const std::uint64_t k = acc.rng().binomial(universe, p);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(k * 2);
  for (std::uint64_t c = 0; c < k; ++c) {
    Vertex v;
    std::uint64_t slot;
    std::uint64_t key;
    do {
      v = acc.random_vertex();
      slot = acc.rng().index(slots) + 1;
      key = static_cast<std::uint64_t>(v) * slots + (slot - 1);
    } while (seen.contains(key));
    seen.insert(key);
    std::uint32_t d = acc.degree(v);
    if (static_cast<double>(d) < theta && slot <= d)
      out.edges.push_back({v, acc.ith_neighbor(v, static_cast<std::uint32_t>(slot))});
  }
  return out;
}

// Alg 7: each directed edge with heavy source included independently with
// probability p, via one biased draw with p_n = min(1, 2*theta*p).
template <class Access>
EdgeSampleSet sample_heavy_edges(BiasedSampler<Access>& sampler, Access& acc, double theta,
                                 double p) {
  if (p > 0.9) throw ContractError("heavy-edge sampler requires p <= 0.9 (use the dense path)");
  EdgeSampleSet out;
  out.provenance = Provenance::heavy;
  if (p <= 0.0) return out;

  const double p_n = std::min(1.0, 2.0 * theta * p);
  std::vector<Vertex> sample = sampler.draw(p_n);
  for (Vertex v : sample) {
    std::uint32_t d = sampler.degree_of(v);
    if (static_cast<double>(d) < theta) continue;
    double hit = -std::expm1(static_cast<double>(d) * std::log1p(-p));  // 1-(1-p)^d
    double keep = hit / inclusion_probability(d, theta, p_n);
    if (keep > 1.0 + 1e-9)
      throw ContractError("heavy-edge rejection ratio exceeded 1");
    if (!acc.rng().bernoulli(std::min(keep, 1.0))) continue;
    std::uint64_t take = binomial_at_least_one(d, p, acc.rng());
    for (std::uint64_t idx : wor_from_universe(d, take, acc.rng()))
      out.edges.push_back({v, acc.ith_neighbor(v, static_cast<std::uint32_t>(idx) + 1)});
  }
  return out;
}

// Whole directed edge set by brute enumeration (dense path of Alg 5).
template <class Access>
std::vector<DirectedEdge> read_all_directed_edges(Access& acc) {
  std::vector<DirectedEdge> all;
  const std::uint32_t n = acc.n();
  for (Vertex v = 0; v < n; ++v) {
    std::uint32_t d = acc.degree(v);
    for (std::uint32_t i = 1; i <= d; ++i) all.push_back({v, acc.ith_neighbor(v, i)});
  }
  return all;
}

// Alg 5: t Bernoulli samples over the 2m directed edges, one preprocessing
// pass shared by all t rounds. With probability >= 1-delta every directed edge
// appears in each set independently with probability p, jointly across sets.
template <class Access>
std::vector<EdgeSampleSet> bernoulli_samples(Access& acc, double p, std::uint64_t t,
                                             double delta) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("p must be in (0,1]");
  if (t < 1) throw ParameterError("t must be >= 1");
  std::vector<EdgeSampleSet> out;
  out.reserve(t);

  if (p > 0.9) {
    std::vector<DirectedEdge> all = read_all_directed_edges(acc);
    for (std::uint64_t i = 0; i < t; ++i) {
      EdgeSampleSet s;
      s.provenance = Provenance::merged;
      for (const DirectedEdge& e : all)
        if (acc.rng().bernoulli(p)) s.edges.push_back(e);
      out.push_back(std::move(s));
    }
    return out;
  }

  const double n = std::max<double>(acc.n(), 2);
  const double theta = std::sqrt(std::log(n) * std::log(n / delta) / (p * static_cast<double>(t)));
  BiasedSampler<Access> sampler(acc, theta, delta);
  for (std::uint64_t i = 0; i < t; ++i) {
    EdgeSampleSet light = sample_light_edges(acc, theta, p);
    EdgeSampleSet heavy = sample_heavy_edges(sampler, acc, theta, p);
    EdgeSampleSet merged;
    merged.provenance = Provenance::merged;
    merged.edges = std::move(light.edges);
    merged.edges.insert(merged.edges.end(), heavy.edges.begin(), heavy.edges.end());
    out.push_back(std::move(merged));
  }
  return out;
}

// Alg 8: s directed edges uniformly without replacement (per the theorem's
// guarantee, with probability >= 1-delta). Throws UnsatisfiableError when
// s > 2m, detectable once the escalation reaches p = 1.
template <class Access>
std::vector<DirectedEdge> sample_without_replacement(Access& acc, std::uint64_t s, double delta) {
  if (s == 0) return {};
  const std::uint32_t n = acc.n();
  if (n < 2) throw UnsatisfiableError("graph has no edges");
  const double lgn = std::log2(static_cast<double>(n));
  double p = 1.0 / (static_cast<double>(n) * n);
  for (;;) {
    double pc = std::min(1.0, p);
    std::vector<DirectedEdge> sample =
        bernoulli_samples(acc, pc, 1, delta / (3.0 * lgn))[0].edges;
    if (sample.size() >= s) {
      std::vector<DirectedEdge> out;
      out.reserve(s);
      for (std::uint64_t idx : wor_from_universe(sample.size(), s, acc.rng()))
        out.push_back(sample[idx]);
      return out;
    }
    if (pc >= 1.0)
      throw UnsatisfiableError("requested " + std::to_string(s) + " edges without replacement but only " +
                               std::to_string(sample.size()) + " directed edges exist");
    p *= 2.0;
  }
}

// Alg 9: s directed edges with replacement (i.i.d. uniform with probability
// >= 1-delta). Throws EmptyGraphError on edgeless graphs.
template <class Access>
std::vector<DirectedEdge> sample_with_replacement(Access& acc, std::uint64_t s, double delta) {
  if (s == 0) return {};
  const std::uint32_t n = acc.n();
  if (n < 2) throw EmptyGraphError("sample_with_replacement on edgeless graph");
  const double lgn = std::log2(static_cast<double>(n));
  double p = 1.0 / (static_cast<double>(n) * n);
  for (;;) {
    double pc = std::min(1.0, p);
    std::vector<EdgeSampleSet> sets = bernoulli_samples(acc, pc, 2 * s, delta / (3.0 * lgn));
    std::vector<DirectedEdge> picked;
    picked.reserve(2 * s);
    for (const EdgeSampleSet& set : sets)
      if (!set.edges.empty()) picked.push_back(set.edges[acc.rng().index(set.edges.size())]);
    if (picked.size() >= s) {
      std::vector<DirectedEdge> out;
      out.reserve(s);
      for (std::uint64_t idx : wor_from_universe(picked.size(), s, acc.rng()))
        out.push_back(picked[idx]);
      return out;
    }
    if (pc >= 1.0 && picked.empty()) throw EmptyGraphError("sample_with_replacement on edgeless graph");
    p *= 2.0;
  }
}

}  // namespace sublin
