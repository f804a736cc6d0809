#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sublin/errors.hpp"
#include "sublin/graph.hpp"
#include "sublin/multi_edge.hpp"

namespace sublin {

class Oracle;

// Caches whole neighborhoods so each vertex is queried at most once.
// Works over any access type exposing full_neighborhood() (the native
// full-neighborhood oracle or a hash-order simulator's scanned view).
template <class Access>
class NeighborhoodCache {
 public:
  explicit NeighborhoodCache(Access& acc) : acc_(acc) {}

  const std::vector<Vertex>& neighborhood(Vertex v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    auto s = acc_.full_neighborhood(v);
    std::vector<Vertex> nb(s.begin(), s.end());
    std::sort(nb.begin(), nb.end());
    return cache_.emplace(v, std::move(nb)).first->second;
  }

  bool cached(Vertex v) const { return cache_.contains(v); }
  std::uint32_t degree(Vertex v) { return static_cast<std::uint32_t>(neighborhood(v).size()); }
  bool adjacent(Vertex u, Vertex v) {
    const auto& nb = neighborhood(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // t(e) = |N(u) ∩ N(v)|; at most two new queries
  std::uint64_t triangles_on_edge(Vertex u, Vertex v) {
    const auto& a = neighborhood(u);
    const auto& b = neighborhood(v);
    std::uint64_t c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) ++i;
      else if (b[j] < a[i]) ++j;
      else { ++c; ++i; ++j; }
    }
    return c;
  }

  std::vector<Vertex> common_neighbors(Vertex u, Vertex v) {
    const auto& a = neighborhood(u);
    const auto& b = neighborhood(v);
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Access& access() { return acc_; }

 private:
  Access& acc_;
  std::unordered_map<Vertex, std::vector<Vertex>> cache_;
};

// Exact triangle count per edge, full-neighborhood semantics.
template <class Access>
std::uint64_t edge_triangle_count(NeighborhoodCache<Access>& cache, Vertex u, Vertex v) {
  if (!cache.adjacent(u, v)) throw DomainError("edge_triangle_count on a non-edge");
  return cache.triangles_on_edge(u, v);
}

// Edge order: e1 < e2 iff (t(e1), canonical pair) < (t(e2), canonical pair).
inline std::pair<Vertex, Vertex> canonical_edge(Vertex a, Vertex b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

template <class Access>
bool edge_precedes(NeighborhoodCache<Access>& cache, Vertex a1, Vertex b1, Vertex a2, Vertex b2) {
  std::uint64_t t1 = cache.triangles_on_edge(a1, b1);
  std::uint64_t t2 = cache.triangles_on_edge(a2, b2);
  if (t1 != t2) return t1 < t2;
  return canonical_edge(a1, b1) < canonical_edge(a2, b2);
}

// whether the triangle uvw is assigned to edge uv (uv minimal among its edges)
template <class Access>
bool triangle_assigned_to(NeighborhoodCache<Access>& cache, Vertex u, Vertex v, Vertex w) {
  return edge_precedes(cache, u, v, u, w) && edge_precedes(cache, u, v, v, w);
}

// t+_S(uv): assigned triangles of uv whose third vertex lies in S \ {u,v}.
// Requires the neighborhoods of u, v and every vertex of S to be cached
// already; performs no new queries.
template <class Access>
std::uint64_t assigned_count_restricted(NeighborhoodCache<Access>& cache, Vertex u, Vertex v,
                                        std::span<const Vertex> sample) {
  if (!cache.cached(u) || !cache.cached(v))
    throw ContractError("assigned_count_restricted requires cached endpoints");
  std::uint64_t c = 0;
  for (Vertex w : sample) {
    if (w == u || w == v) continue;
    if (!cache.cached(w)) throw ContractError("assigned_count_restricted requires cached sample");
    const auto& nu = cache.neighborhood(u);
    if (!std::binary_search(nu.begin(), nu.end(), w)) continue;
    const auto& nv = cache.neighborhood(v);
    if (!std::binary_search(nv.begin(), nv.end(), w)) continue;
    if (triangle_assigned_to(cache, u, v, w)) ++c;
  }
  return c;
}

// heavy w.r.t. S: sum over u in S ∩ N(v) of t(uv) >= 8*sqrt(theta)*log n.
// Zero extra queries once S and v are cached.
template <class Access>
bool heavy_wrt(NeighborhoodCache<Access>& cache, Vertex v, std::span<const Vertex> sample,
               double theta, double ln_n) {
  const double bar = 8.0 * std::sqrt(theta) * ln_n;
  double sum = 0;
  const auto& nv = cache.neighborhood(v);
  for (Vertex u : sample) {
    if (u == v) continue;
    if (!std::binary_search(nv.begin(), nv.end(), u)) continue;
    sum += static_cast<double>(cache.triangles_on_edge(u, v));
    if (sum >= bar) return true;
  }
  return sum >= bar;
}

using EdgeSource = std::function<DirectedEdge()>;

struct TriangleEstimate {
  double estimate = 0;
  std::string branch;        // "edge-sampling" | "vertex-sampling" | "exact"
  bool clamped = false;      // some Bernoulli/sampling parameter clamped to 1
  bool low_confidence = false;
  std::uint64_t rounds = 0;
};

// Alg 13: wedge sampling over uniform edges. Unbiased for T when `edges` is
// uniform and m_edges is the true edge count; if t_advice <= T then
// |estimate - T| <= eps*T with probability >= 2/3.
template <class Access>
TriangleEstimate tri_count_edge_sampling(NeighborhoodCache<Access>& cache, const EdgeSource& edges,
                                         double eps, double t_advice, double m_edges) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must be in (0,1)");
  if (!(t_advice >= 1.0)) throw ParameterError("triangle advice must be >= 1");
  if (!(m_edges >= 1.0)) throw ParameterError("edge count must be >= 1");

  const std::uint64_t k = static_cast<std::uint64_t>(
      std::ceil(138.0 * m_edges / (eps * eps * std::pow(t_advice, 2.0 / 3.0))));
  double a = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    DirectedEdge e = edges();
    std::uint64_t t = cache.triangles_on_edge(e.from, e.to);
    if (t == 0) continue;
    std::vector<Vertex> common = cache.common_neighbors(e.from, e.to);
    Vertex w = common[cache.access().rng().index(common.size())];
    if (triangle_assigned_to(cache, e.from, e.to, w)) a += static_cast<double>(t);
  }
  TriangleEstimate out;
  out.estimate = m_edges * a / static_cast<double>(k);
  out.branch = "edge-sampling";
  out.rounds = k;
  return out;
}

struct VertexSamplingOptions {
  bool force_vertex_path = false;  // skip the delegation branch (tests)
  double wr_delta = 1.0 / 12.0;    // failure budget when edges come from the WR sampler
  double assigned_gate_factor = 162.0;  // branch split: t+_St(uv) < factor*ln n/eps^2
};

// Alg 14: vertex sampling with an edge-sampled heavy part. Delegates to
// Alg 13 when t_advice >= m^3/(n^3 ln^6 n). Unbiased; if t_advice <= T then
// |estimate - T| <= eps*T with probability >= 2/3.
template <class Access>
TriangleEstimate tri_count_vertex_sampling(NeighborhoodCache<Access>& cache,
                                           const std::function<EdgeSource(std::uint64_t)>& edges_for,
                                           double eps, double t_advice, double m_edges,
                                           const VertexSamplingOptions& opt = {}) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must be in (0,1)");
  if (!(t_advice >= 1.0)) throw ParameterError("triangle advice must be >= 1");
  Access& acc = cache.access();
  const std::uint32_t n = acc.n();
  if (n < 2) throw ParameterError("vertex sampling needs n >= 2");
  const double ln_n = std::log(static_cast<double>(n));

  if (!opt.force_vertex_path &&
      t_advice >= std::pow(m_edges, 3) / (std::pow(static_cast<double>(n), 3) * std::pow(ln_n, 6))) {
    const std::uint64_t k = static_cast<std::uint64_t>(
        std::ceil(138.0 * m_edges / (eps * eps * std::pow(t_advice, 2.0 / 3.0))));
    return tri_count_edge_sampling(cache, edges_for(k), eps, t_advice, m_edges);
  }

  TriangleEstimate out;
  out.branch = "vertex-sampling";
  const double theta = std::sqrt(m_edges * t_advice / n);

  auto rate = [&](double r) {
    if (r >= 1.0) out.clamped = true;
    return std::min(1.0, r);
  };
  const double p1 = rate(16.0 * ln_n / std::sqrt(theta));
  const double p2 = rate(100.0 * std::sqrt(ln_n) * theta / (eps * eps * t_advice));
  const double p3 = rate(theta * ln_n / t_advice);
  const double p4 = rate(theta * ln_n / (eps * eps * t_advice));

  std::vector<Vertex> heavy_sample, vertex_sample, assigned_sample, wedge_sample;
  for (Vertex v = 0; v < n; ++v) {
    if (acc.rng().bernoulli(p1)) heavy_sample.push_back(v);
    if (acc.rng().bernoulli(p2)) vertex_sample.push_back(v);
    if (acc.rng().bernoulli(p3)) assigned_sample.push_back(v);
    if (acc.rng().bernoulli(p4)) wedge_sample.push_back(v);
  }
  for (Vertex v : heavy_sample) cache.neighborhood(v);
  for (Vertex v : vertex_sample) cache.neighborhood(v);
  for (Vertex v : assigned_sample) cache.neighborhood(v);
  for (Vertex v : wedge_sample) cache.neighborhood(v);

  std::unordered_map<Vertex, bool> heavy_memo;
  auto is_heavy = [&](Vertex v) {
    auto it = heavy_memo.find(v);
    if (it != heavy_memo.end()) return it->second;
    bool h = heavy_wrt(cache, v, heavy_sample, theta, ln_n);
    heavy_memo.emplace(v, h);
    return h;
  };

  // light part: edges of the induced subgraph on the p2-sample
  const double assigned_gate = opt.assigned_gate_factor * ln_n / (eps * eps);
  const double bern = rate(eps * eps * t_advice * t_advice / std::pow(theta, 3));
  double a_light = 0;
  std::unordered_set<Vertex> in_vertex_sample(vertex_sample.begin(), vertex_sample.end());
  for (Vertex u : vertex_sample) {
    for (Vertex v : cache.neighborhood(u)) {
      if (v <= u || !in_vertex_sample.contains(v)) continue;
      if (is_heavy(u) || is_heavy(v)) continue;
      if (static_cast<double>(assigned_count_restricted(cache, u, v, assigned_sample)) <
          assigned_gate) {
        if (!acc.rng().bernoulli(bern)) continue;
        std::uint64_t t = cache.triangles_on_edge(u, v);
        if (t == 0) continue;
        std::vector<Vertex> common = cache.common_neighbors(u, v);
        Vertex w = common[acc.rng().index(common.size())];
        cache.neighborhood(w);
        if (triangle_assigned_to(cache, u, v, w)) a_light += static_cast<double>(t) / bern;
      } else {
        // third vertex restricted to the shared wedge sample: no new queries
        std::vector<Vertex> pool;
        const auto& nu = cache.neighborhood(u);
        const auto& nv = cache.neighborhood(v);
        for (Vertex w : wedge_sample) {
          if (w == u || w == v) continue;
          if (std::binary_search(nu.begin(), nu.end(), w) &&
              std::binary_search(nv.begin(), nv.end(), w))
            pool.push_back(w);
        }
        if (pool.empty()) continue;
        Vertex w = pool[acc.rng().index(pool.size())];
        if (triangle_assigned_to(cache, u, v, w))
          a_light += static_cast<double>(cache.triangles_on_edge(u, v));
      }
    }
  }
  const double light_estimate = a_light / (p2 * p2);

  // heavy part: uniform edges with a heavy endpoint
  const std::uint64_t k = static_cast<std::uint64_t>(
      std::ceil(432.0 * m_edges * (ln_n + 2.0) / (eps * eps * theta)));
  EdgeSource edges = edges_for(k);
  double a_heavy = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    DirectedEdge e = edges();
    if (!is_heavy(e.from) && !is_heavy(e.to)) continue;
    std::uint64_t t = cache.triangles_on_edge(e.from, e.to);
    if (t == 0) continue;
    std::vector<Vertex> common = cache.common_neighbors(e.from, e.to);
    Vertex w = common[acc.rng().index(common.size())];
    cache.neighborhood(w);
    if (triangle_assigned_to(cache, e.from, e.to, w)) a_heavy += static_cast<double>(t);
  }
  const double heavy_estimate = m_edges * a_heavy / static_cast<double>(k);

  out.estimate = light_estimate + heavy_estimate;
  out.rounds = k;
  return out;
}

// Advice-free end-to-end triangle counting on a full-neighborhood oracle with
// random vertex queries: advice removal from n^3 downward around Alg 14, with
// an exact n-query fallback whenever the projected budget reaches n.
TriangleEstimate count_triangles(Oracle& oracle, double eps);

// Exact count by reading all n neighborhoods (the n-query fallback).
template <class Access>
std::uint64_t exact_triangle_total(NeighborhoodCache<Access>& cache) {
  const std::uint32_t n = cache.access().n();
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < n; ++v) cache.neighborhood(v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : cache.neighborhood(u))
      if (u < v) sum += cache.triangles_on_edge(u, v);
  return sum / 3;
}

}  // namespace sublin
