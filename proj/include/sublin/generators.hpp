#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sublin/graph.hpp"

namespace sublin {

// s disjoint cliques on ceil(sqrt(2m/s)) vertices each (~m/s edges per
// clique), remaining vertices isolated.
struct CliquesInstance {
  Graph graph;
  std::uint32_t clique_size = 0;
  std::uint64_t realized_m = 0;
};
CliquesInstance gen_cliques_plus_independent(std::uint32_t n, std::uint32_t s, std::uint64_t m);

enum class ChunkSide { low, high };

// alpha = ceil(4/eps^2) chunks of beta = ceil(eps*sqrt(m)) vertices; a
// (1/2+eps) fraction sparse for side=low (realized m ~ (1-2eps)m), reversed
// for side=high. n is grown to alpha*beta if needed (regime_warning set).
struct ChunksInstance {
  Graph graph;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::uint32_t dense_chunks = 0;
  std::uint64_t realized_m = 0;
  double nominal_m = 0;
  double rounding_slack = 0;  // |realized - nominal| / target m
  bool regime_warning = false;
};
ChunksInstance gen_chunks(std::uint32_t n, std::uint64_t m, double eps, ChunkSide side);

// Sections graph G_x: |x| sections of 4 groups of ceil(sqrt(nT/m)) vertices
// plus ~m/n non-section vertices joined to every bottom-group vertex. x_i=0
// wires top-left x top-right; x_i=1 wires bottom-left x bottom-right. All-zero
// x gives a triangle-free graph; any set bit yields >= T triangles.
struct SectionsInstance {
  Graph graph;
  std::uint32_t sections = 0;
  std::uint32_t group_size = 0;       // ceil(sqrt(nT/m))
  std::uint32_t non_section = 0;      // max(1, round(m/n))
  std::uint32_t realized_n = 0;
  std::uint64_t realized_m = 0;
  std::uint64_t triangles_per_bit = 0;  // g^2 * q >= T
};
SectionsInstance gen_sections(std::uint32_t n, std::uint64_t m, std::uint64_t T,
                              const std::vector<bool>& x);

std::uint32_t sections_vector_length(std::uint32_t n, std::uint64_t m, std::uint64_t T);

// Uniform graph with exactly m edges (WOR over vertex pairs), deterministic
// for a fixed seed.
Graph gen_er(std::uint32_t n, std::uint64_t m, std::uint64_t seed);

Graph gen_star(std::uint32_t n);      // center 0
Graph gen_cycle(std::uint32_t n);
Graph gen_complete(std::uint32_t k, std::uint32_t isolated = 0);

}  // namespace sublin
