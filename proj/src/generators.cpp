#include "sublin/generators.hpp"

#include <algorithm>
#include <cmath>

#include "sublin/errors.hpp"
#include "sublin/multi_edge.hpp"
#include "sublin/rng.hpp"

namespace sublin {

CliquesInstance gen_cliques_plus_independent(std::uint32_t n, std::uint32_t s, std::uint64_t m) {
  CliquesInstance out;
  if (s == 0) {
    out.graph = Graph::from_edges(n, {});
    return out;
  }
  if (m == 0) throw ParameterError("s > 0 requires m > 0");
  std::uint64_t c =
      static_cast<std::uint64_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(m) / s)));
  c = std::max<std::uint64_t>(c, 2);
  if (static_cast<std::uint64_t>(s) * c > n)
    throw ParameterError("cliques do not fit: " + std::to_string(s) + " cliques of " +
                         std::to_string(c) + " vertices exceed n=" + std::to_string(n));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint32_t q = 0; q < s; ++q) {
    Vertex base = static_cast<Vertex>(q * c);
    for (std::uint64_t i = 0; i < c; ++i)
      for (std::uint64_t j = i + 1; j < c; ++j)
        edges.emplace_back(base + static_cast<Vertex>(i), base + static_cast<Vertex>(j));
  }
  out.clique_size = static_cast<std::uint32_t>(c);
  out.realized_m = edges.size();
  out.graph = Graph::from_edges(n, edges);
  return out;
}

ChunksInstance gen_chunks(std::uint32_t n, std::uint64_t m, double eps, ChunkSide side) {
  if (!(eps > 0.0 && eps < 0.5)) throw ParameterError("eps must be in (0, 1/2)");
  if (m == 0) throw ParameterError("m must be positive");
  ChunksInstance out;
  out.beta = static_cast<std::uint32_t>(std::ceil(eps * std::sqrt(static_cast<double>(m))));
  out.beta = std::max<std::uint32_t>(out.beta, 2);
  out.alpha = static_cast<std::uint32_t>(std::ceil(4.0 / (eps * eps)));
  std::uint64_t needed = static_cast<std::uint64_t>(out.alpha) * out.beta;
  std::uint32_t realized_n = n;
  if (needed > n) {
    out.regime_warning = true;  // eps below the 4*sqrt(m)/n regime
    realized_n = static_cast<std::uint32_t>(needed);
  }
  double sparse_frac = side == ChunkSide::low ? 0.5 + eps : 0.5 - eps;
  std::uint32_t sparse = static_cast<std::uint32_t>(std::llround(sparse_frac * out.alpha));
  sparse = std::min(sparse, out.alpha);
  out.dense_chunks = out.alpha - sparse;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint32_t c = 0; c < out.dense_chunks; ++c) {
    Vertex base = static_cast<Vertex>(static_cast<std::uint64_t>(c) * out.beta);
    for (std::uint32_t i = 0; i < out.beta; ++i)
      for (std::uint32_t j = i + 1; j < out.beta; ++j)
        edges.emplace_back(base + i, base + j);
  }
  out.realized_m = edges.size();
  double factor = side == ChunkSide::low ? (1.0 - 2.0 * eps) : (1.0 + 2.0 * eps);
  out.nominal_m = factor * static_cast<double>(m);
  out.rounding_slack =
      std::abs(static_cast<double>(out.realized_m) - out.nominal_m) / static_cast<double>(m);
  out.graph = Graph::from_edges(realized_n, edges);
  return out;
}

std::uint32_t sections_vector_length(std::uint32_t n, std::uint64_t m, std::uint64_t T) {
  if (m == 0 || T == 0) throw ParameterError("sections need m > 0 and T > 0");
  return static_cast<std::uint32_t>(
      std::ceil(std::sqrt(static_cast<double>(n) * static_cast<double>(m) / static_cast<double>(T))));
}

SectionsInstance gen_sections(std::uint32_t n, std::uint64_t m, std::uint64_t T,
                              const std::vector<bool>& x) {
  if (x.empty()) throw ParameterError("sections bit vector must be non-empty");
  if (m == 0 || T == 0 || n == 0) throw ParameterError("sections need n, m, T > 0");
  double regime = std::pow(static_cast<double>(m), 3) / std::pow(static_cast<double>(n), 3);
  if (static_cast<double>(T) > regime)
    throw ParameterError("sections regime requires T <= m^3/n^3");

  SectionsInstance out;
  out.sections = static_cast<std::uint32_t>(x.size());
  out.group_size = static_cast<std::uint32_t>(
      std::ceil(std::sqrt(static_cast<double>(n) * T / static_cast<double>(m))));
  out.group_size = std::max<std::uint32_t>(out.group_size, 1);
  out.non_section = static_cast<std::uint32_t>(
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(
                                     static_cast<double>(m) / static_cast<double>(n)))));
  const std::uint32_t g = out.group_size;
  const std::uint64_t section_span = 4ULL * g;
  out.realized_n = static_cast<std::uint32_t>(section_span * out.sections + out.non_section);
  const Vertex non_base = static_cast<Vertex>(section_span * out.sections);

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint32_t s = 0; s < out.sections; ++s) {
    Vertex base = static_cast<Vertex>(section_span * s);
    Vertex tl = base, tr = base + g, bl = base + 2 * g, br = base + 3 * g;
    if (!x[s]) {
      for (std::uint32_t i = 0; i < g; ++i)
        for (std::uint32_t j = 0; j < g; ++j) edges.emplace_back(tl + i, tr + j);
    } else {
      for (std::uint32_t i = 0; i < g; ++i)
        for (std::uint32_t j = 0; j < g; ++j) edges.emplace_back(bl + i, br + j);
    }
    // bottom groups wire to every non-section vertex
    for (std::uint32_t i = 0; i < 2 * g; ++i)
      for (std::uint32_t w = 0; w < out.non_section; ++w)
        edges.emplace_back(bl + i, non_base + w);
  }
  out.realized_m = edges.size();
  out.triangles_per_bit = static_cast<std::uint64_t>(g) * g * out.non_section;
  out.graph = Graph::from_edges(out.realized_n, edges);
  return out;
}

Graph gen_er(std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
  std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) throw ParameterError("m exceeds the number of vertex pairs");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  // pair index -> (u,v): pairs with first vertex < u come first
  auto decode = [&](std::uint64_t idx) {
    std::uint64_t lo = 0, hi = n;  // largest u with u*(2n-u-1)/2 <= idx
    while (hi - lo > 1) {
      std::uint64_t mid = (lo + hi) / 2;
      std::uint64_t before = mid * (2ULL * n - mid - 1) / 2;
      if (before <= idx) lo = mid;
      else hi = mid;
    }
    std::uint64_t before = lo * (2ULL * n - lo - 1) / 2;
    return std::make_pair(static_cast<Vertex>(lo), static_cast<Vertex>(lo + 1 + (idx - before)));
  };
  for (std::uint64_t idx : wor_from_universe(pairs, m, rng)) edges.push_back(decode(idx));
  return Graph::from_edges(n, edges);
}

Graph gen_star(std::uint32_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph gen_cycle(std::uint32_t n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph gen_complete(std::uint32_t k, std::uint32_t isolated) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(k + isolated, edges);
}

}  // namespace sublin
