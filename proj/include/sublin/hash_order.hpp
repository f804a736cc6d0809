#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sublin/graph.hpp"
#include "sublin/rng.hpp"

namespace sublin {

// Per-vertex random hashes in (0,1] plus adjacency re-sorted by (hash, id).
// Hashes are counter-based on (seed, vertex id), so they do not depend on
// load or query order. Immutable after construction.
class HashAssignment {
 public:
  HashAssignment(const Graph& g, std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  double value(Vertex v) const { return val_[v]; }

  // strict total order: (hash value, id) lexicographic
  bool precedes(Vertex a, Vertex b) const {
    if (val_[a] != val_[b]) return val_[a] < val_[b];
    return a < b;
  }

  std::span<const Vertex> neighbors_by_hash(Vertex v) const { return adj_[v]; }

 private:
  std::uint64_t seed_;
  std::vector<double> val_;
  std::vector<std::vector<Vertex>> adj_;
};

inline HashAssignment attach_hashes(const Graph& g, std::uint64_t seed) {
  return HashAssignment(g, seed);
}

// The hash value the assignment (or a hash-order simulator) gives vertex v.
inline double vertex_hash_value(std::uint64_t seed, Vertex v) {
  return unit_from_u64(counter_hash(seed, v));
}

}  // namespace sublin
