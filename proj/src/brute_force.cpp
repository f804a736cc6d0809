#include "sublin/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sublin/errors.hpp"

namespace sublin {

std::size_t TriangleStats::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v))
    throw DomainError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  return static_cast<std::size_t>(std::distance(edges.begin(), it));
}

namespace {

std::uint64_t sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::uint64_t c = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++c; ++i; ++j; }
  }
  return c;
}

}  // namespace

TriangleStats exact_triangle_stats(const Graph& g) {
  TriangleStats s;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) s.edges.emplace_back(u, v);
  std::sort(s.edges.begin(), s.edges.end());
  s.t.assign(s.edges.size(), 0);
  s.t_plus.assign(s.edges.size(), 0);

  for (std::size_t e = 0; e < s.edges.size(); ++e)
    s.t[e] = sorted_intersection_size(g.neighbors(s.edges[e].first), g.neighbors(s.edges[e].second));

  // enumerate each triangle once via u < v < w
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    auto [u, v] = s.edges[e];
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) ++i;
      else if (nv[j] < nu[i]) ++j;
      else {
        Vertex w = nu[i];
        if (w > v) {
          ++s.total;
          std::size_t uv = e;
          std::size_t uw = s.edge_index(u, w);
          std::size_t vw = s.edge_index(v, w);
          std::size_t best = uv;
          if (s.precedes(uw, best)) best = uw;
          if (s.precedes(vw, best)) best = vw;
          ++s.t_plus[best];
        }
        ++i; ++j;
      }
    }
  }
  return s;
}

std::uint64_t triangle_count_cubic(const Graph& g) {
  const std::uint32_t n = g.n();
  std::uint64_t count = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (g.has_edge(a, c) && g.has_edge(b, c)) ++count;
    }
  return count;
}

HeavyFractionTable heavy_fraction_table(const Graph& g, double theta, std::uint32_t depth) {
  HeavyFractionTable tbl;
  tbl.theta = theta;
  tbl.depth = depth;
  std::vector<Vertex> heavy;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) >= theta) heavy.push_back(v);
  for (Vertex v : heavy) tbl.h[v].assign(depth, 0.0);

  for (Vertex v : heavy) {
    std::uint64_t dh = 0;
    for (Vertex w : g.neighbors(v))
      if (g.degree(w) >= theta) ++dh;
    tbl.h[v][0] = static_cast<double>(dh) / g.degree(v);
  }
  for (std::uint32_t i = 2; i <= depth; ++i)
    for (Vertex v : heavy) {
      double sum = 0;
      for (Vertex w : g.neighbors(v))
        if (g.degree(w) >= theta) sum += tbl.h[w][i - 2];
      tbl.h[v][i - 1] = sum / g.degree(v);
    }
  return tbl;
}

AttemptDistribution exact_attempt_distribution(const Graph& g, std::uint32_t theta,
                                               std::uint32_t ell) {
  if (ell < 2) throw ParameterError("attempt distribution needs ell >= 2");
  AttemptDistribution out;
  out.edge_prob.assign(g.directed_edge_count(), 0.0);
  if (g.n() == 0) return out;
  HeavyFractionTable tbl = heavy_fraction_table(g, theta, ell - 1);
  const double base = 1.0 / (static_cast<double>(ell) * g.n() * theta);
  for (std::uint64_t i = 0; i < g.directed_edge_count(); ++i) {
    DirectedEdge e = g.directed_edge(i);
    double p;
    if (g.degree(e.from) < theta)
      p = base;
    else
      p = (1.0 - tbl.of(e.from, ell - 1)) * base;
    out.edge_prob[i] = p;
    out.success_prob += p;
  }
  return out;
}

DistributionCheck distribution_check(std::span<const std::uint64_t> counts,
                                     std::span<const double> probs, double sigma_mult,
                                     std::uint64_t trials) {
  DistributionCheck r;
  if (counts.size() != probs.size()) throw ParameterError("counts/probs size mismatch");
  double psum = 0;
  std::uint64_t csum = 0;
  for (double p : probs) {
    if (p < 0) throw ParameterError("negative probability");
    psum += p;
  }
  for (auto c : counts) csum += c;
  if (psum > 1.0 + 1e-9) throw ParameterError("probabilities sum to more than 1");
  if (csum > trials) throw ParameterError("counts exceed trials");

  r.pass = true;
  r.ratio_lo = std::numeric_limits<double>::infinity();
  r.ratio_hi = 0.0;
  const double N = static_cast<double>(trials);

  auto check_outcome = [&](std::size_t idx, double c, double p) {
    if (p <= 0.0) {
      if (c > 0) {
        r.pass = false;
        r.max_abs_z = std::numeric_limits<double>::infinity();
        r.worst_outcome = idx;
        r.note = "outcome " + std::to_string(idx) + " has zero analytic mass but nonzero count";
      }
      return;
    }
    double sigma = std::sqrt(N * p * (1.0 - p));
    double z = sigma > 0 ? (c - N * p) / sigma : (c == N * p ? 0.0 : std::numeric_limits<double>::infinity());
    if (std::abs(z) > r.max_abs_z) {
      r.max_abs_z = std::abs(z);
      r.worst_outcome = idx;
    }
    if (std::abs(z) > sigma_mult) r.pass = false;
  };

  for (std::size_t i = 0; i < counts.size(); ++i) {
    check_outcome(i, static_cast<double>(counts[i]), probs[i]);
    if (probs[i] > 0) {
      double ratio = (static_cast<double>(counts[i]) / N) / probs[i];
      r.ratio_lo = std::min(r.ratio_lo, ratio);
      r.ratio_hi = std::max(r.ratio_hi, ratio);
    }
    r.tv += std::abs(static_cast<double>(counts[i]) / N - probs[i]);
  }
  double prest = 1.0 - psum;
  double crest = N - static_cast<double>(csum);
  if (prest > 1e-12 || crest > 0) {
    check_outcome(counts.size(), crest, std::max(prest, 0.0));
    r.tv += std::abs(crest / N - std::max(prest, 0.0));
  }
  r.tv *= 0.5;
  if (!std::isfinite(r.ratio_lo)) r.ratio_lo = 0.0;
  if (r.pass && r.note.empty()) r.note = "ok";
  return r;
}

double ks_statistic_uniform(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double f = values[i];  // CDF of U(0,1]
    d = std::max(d, (i + 1) / n - f);
    d = std::max(d, f - i / n);
  }
  return d;
}

double ks_critical(std::size_t n, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

double chi_square_stat(std::span<const std::uint64_t> counts, std::span<const double> probs,
                       std::uint64_t trials) {
  double stat = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double e = probs[i] * static_cast<double>(trials);
    if (e <= 0) throw ParameterError("chi-square expected count must be positive");
    double d = static_cast<double>(counts[i]) - e;
    stat += d * d / e;
  }
  return stat;
}

double chi_square_quantile(double dof, double p) {
  // Wilson-Hilferty; z via Acklam-style rational approximation of probit
  auto probit = [](double q) {
    // Beasley-Springer-Moro
    static const double a[] = {-39.69683028665376, 220.9460984245205, -275.9285104469687,
                               138.3577518672690, -30.66479806614716, 2.506628277459239};
    static const double b[] = {-54.47609879822406, 161.5858368580409, -155.6989798598866,
                               66.80131188771972, -13.28068155288572};
    static const double c[] = {-0.007784894002430293, -0.3223964580411365, -2.400758277161838,
                               -2.549732539343734, 4.374664141464968, 2.938163982698783};
    static const double d[] = {0.007784695709041462, 0.3224671290700398, 2.445134137142996,
                               3.754408661907416};
    double lo = 0.02425, hi = 1 - lo;
    if (q < lo) {
      double t = std::sqrt(-2 * std::log(q));
      return (((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) /
             ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1);
    }
    if (q > hi) {
      double t = std::sqrt(-2 * std::log(1 - q));
      return -(((((c[0] * t + c[1]) * t + c[2]) * t + c[3]) * t + c[4]) * t + c[5]) /
             ((((d[0] * t + d[1]) * t + d[2]) * t + d[3]) * t + 1);
    }
    double t = q - 0.5, s = t * t;
    return (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * t /
           (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1);
  };
  double z = probit(p);
  double k = dof;
  double t = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
  return k * t * t * t;
}

bool freq_within(double count, std::uint64_t trials, double prob, double mult) {
  double N = static_cast<double>(trials);
  double sigma = std::sqrt(prob * (1.0 - prob) / N);
  return std::abs(count / N - prob) <= mult * sigma;
}

}  // namespace sublin
