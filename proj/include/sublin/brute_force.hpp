#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sublin/graph.hpp"

namespace sublin {

// Exact per-edge triangle counts t(e), assignment counts t+(e) (each triangle
// assigned to its (t, edge-id)-minimal edge), and the total T. For
// verification only; never used by estimators.
struct TriangleStats {
  std::uint64_t total = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // canonical u<v, sorted
  std::vector<std::uint64_t> t;
  std::vector<std::uint64_t> t_plus;

  std::size_t edge_index(Vertex u, Vertex v) const;
  std::uint64_t t_of(Vertex u, Vertex v) const { return t[edge_index(u, v)]; }
  std::uint64_t t_plus_of(Vertex u, Vertex v) const { return t_plus[edge_index(u, v)]; }

  // e1 strictly precedes e2 in the (t, canonical pair id) order
  bool precedes(std::size_t e1, std::size_t e2) const {
    if (t[e1] != t[e2]) return t[e1] < t[e2];
    return edges[e1] < edges[e2];
  }
};

TriangleStats exact_triangle_stats(const Graph& g);

// Independent O(n^3) triangle count; cross-checks exact_triangle_stats.
std::uint64_t triangle_count_cubic(const Graph& g);

// h_{v,i} for heavy v (d(v) >= theta): h_{v,1} = d_H(v)/d(v),
// h_{v,i} = (1/d(v)) * sum_{w in N_H(v)} h_{w,i-1}.
struct HeavyFractionTable {
  double theta = 0;
  std::uint32_t depth = 0;
  std::unordered_map<Vertex, std::vector<double>> h;  // h[v][i-1] = h_{v,i}

  double of(Vertex v, std::uint32_t i) const { return h.at(v)[i - 1]; }
  bool is_heavy(Vertex v) const { return h.count(v) != 0; }
};

HeavyFractionTable heavy_fraction_table(const Graph& g, double theta, std::uint32_t depth);

// Exact per-directed-edge probability of one walk attempt with k ~ U[ell]:
// light edge 1/(ell*n*theta), heavy edge (v,w): (1-h_{v,ell-1})/(ell*n*theta).
// Indexing follows Graph::directed_edge.
struct AttemptDistribution {
  std::vector<double> edge_prob;
  double success_prob = 0;
};

AttemptDistribution exact_attempt_distribution(const Graph& g, std::uint32_t theta,
                                               std::uint32_t ell);

// Compares empirical outcome counts against analytic probabilities.
// `trials` is the total number of experiments; probs may sum to < 1, in which
// case the remainder is treated as one implicit extra outcome.
struct DistributionCheck {
  bool pass = false;
  double max_abs_z = 0;
  std::size_t worst_outcome = 0;
  double ratio_lo = 0;   // min over outcomes of empirical/analytic
  double ratio_hi = 0;   // max
  double tv = 0;         // total variation distance
  std::string note;
};

DistributionCheck distribution_check(std::span<const std::uint64_t> counts,
                                     std::span<const double> probs, double sigma_mult,
                                     std::uint64_t trials);

// --- small statistics helpers shared by tests and the verify CLI ---

// one-sample Kolmogorov-Smirnov statistic against U(0,1]
double ks_statistic_uniform(std::vector<double> values);
// asymptotic critical value at significance alpha
double ks_critical(std::size_t n, double alpha);

double chi_square_stat(std::span<const std::uint64_t> counts, std::span<const double> probs,
                       std::uint64_t trials);
// Wilson-Hilferty approximation of the chi-square quantile
double chi_square_quantile(double dof, double p);

// |count/trials - prob| <= mult * sqrt(prob*(1-prob)/trials)
bool freq_within(double count, std::uint64_t trials, double prob, double mult);

}  // namespace sublin
