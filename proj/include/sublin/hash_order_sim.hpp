#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sublin/oracle.hpp"

namespace sublin {

// Simulates hash-ordered neighbor access on top of an oracle that lacks it.
// The first neighbor access to a vertex scans its whole neighborhood on the
// underlying oracle (d(v) indexed queries, one full-neighborhood query, or
// ceil(d/блок) batched blocks, depending on the base model), assigns hashes to
// unseen vertices, sorts, and serves later accesses from the cached order.
// Hash values come from the simulator's own seed via the same counter
// construction as attach_hashes, so a simulator with seed S behaves exactly
// like a native hash-ordered oracle built from attach_hashes(g, S).
// Query counters are the underlying oracle's. Pair queries are not served.
class HashOrderSimulator {
 public:
  HashOrderSimulator(Oracle& base, std::uint64_t hash_seed)
      : base_(base), seed_(hash_seed) {}

  std::uint32_t n() const { return base_.n(); }

  Vertex random_vertex() { return base_.random_vertex(); }
  DirectedEdge random_edge() { return base_.random_edge(); }

  std::uint32_t degree(Vertex v);

  // hash-ordered; 1-based
  Vertex ith_neighbor(Vertex v, std::uint32_t i);

  // Free: the hashes are the simulator's own randomness, not graph data.
  double hash_value(Vertex v) const { return vertex_hash_value(seed_, v); }

  // The scanned neighborhood (hash order). Same underlying cost as ith_neighbor.
  std::span<const Vertex> full_neighborhood(Vertex v);

  bool pair(Vertex, Vertex) {
    throw CapabilityError("simulated_hash_order", to_string(QueryKind::pair));
  }
  std::span<const Vertex> batched_neighbors(Vertex, std::uint32_t) {
    throw CapabilityError("simulated_hash_order", to_string(QueryKind::batched_block));
  }

  Rng& rng() { return base_.rng(); }
  QueryCounter snapshot_counters() const { return base_.snapshot_counters(); }
  Oracle& underlying() { return base_; }

 private:
  const std::vector<Vertex>& ensure_scanned(Vertex v);

  Oracle& base_;
  std::uint64_t seed_;
  std::unordered_map<Vertex, std::vector<Vertex>> order_;
  std::unordered_map<Vertex, std::uint32_t> deg_;
};

inline HashOrderSimulator simulate_hash_order(Oracle& base, std::uint64_t hash_seed) {
  return HashOrderSimulator(base, hash_seed);
}

}  // namespace sublin
