#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sublin/errors.hpp"
#include "sublin/graph.hpp"
#include "sublin/hash_order.hpp"
#include "sublin/rng.hpp"

namespace sublin {

enum class QueryKind {
  random_vertex,
  degree,
  ith_neighbor,
  hash,
  pair,
  full_neighborhood,
  batched_block,
  random_edge,
};

const char* to_string(QueryKind k);

enum class ModelKind {
  indexed_neighbor,
  indexed_neighbor_with_pairs,
  hash_ordered_neighbor,
  full_neighborhood,
  batched,
};

const char* to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

struct AccessModel {
  ModelKind kind = ModelKind::hash_ordered_neighbor;
  bool random_vertex = true;
  bool random_edge = false;
  std::uint32_t block_size = 0;  // batched only; 0 means ceil(2m/n)

  bool allows(QueryKind q) const;

  static AccessModel indexed(bool rv = true, bool re = false) {
    return {ModelKind::indexed_neighbor, rv, re, 0};
  }
  static AccessModel indexed_with_pairs(bool rv = true, bool re = false) {
    return {ModelKind::indexed_neighbor_with_pairs, rv, re, 0};
  }
  static AccessModel hash_ordered(bool rv = true, bool re = false) {
    return {ModelKind::hash_ordered_neighbor, rv, re, 0};
  }
  static AccessModel full(bool rv = true, bool re = false) {
    return {ModelKind::full_neighborhood, rv, re, 0};
  }
  static AccessModel batched(std::uint32_t block = 0, bool rv = true, bool re = false) {
    return {ModelKind::batched, rv, re, block};
  }
};

struct QueryCounter {
  std::uint64_t random_vertex = 0;
  std::uint64_t degree = 0;
  std::uint64_t ith_neighbor = 0;
  std::uint64_t hash = 0;
  std::uint64_t pair = 0;
  std::uint64_t full_neighborhood = 0;
  std::uint64_t batched_block = 0;
  std::uint64_t random_edge = 0;
  // neighbor ids handed out by full/batched responses (per-vertex accounting
  // for the batched model; not part of total)
  std::uint64_t vertices_touched = 0;

  std::uint64_t total() const {
    return random_vertex + degree + ith_neighbor + hash + pair + full_neighborhood +
           batched_block + random_edge;
  }
  std::uint64_t of(QueryKind k) const;
  friend bool operator==(const QueryCounter&, const QueryCounter&) = default;
};

// The single gateway estimators use to touch a graph. Enforces the model's
// capabilities, counts every successful query, and owns the algorithm's
// randomness stream. Single-threaded; independent trials use independent
// Oracles over a shared immutable Graph.
class Oracle {
 public:
  // `hashes` is required for the hash-ordered model, ignored otherwise.
  // `shuffle_seed`, when set, replaces the indexed models' id order by a fixed
  // per-vertex pseudorandom order (adversarial-order stand-in for tests).
  Oracle(const Graph& g, const HashAssignment* hashes, AccessModel model, std::uint64_t seed,
         std::optional<std::uint64_t> shuffle_seed = {});

  std::uint32_t n() const { return g_->n(); }
  const AccessModel& model() const { return model_; }

  Vertex random_vertex();
  std::uint32_t degree(Vertex v);
  Vertex ith_neighbor(Vertex v, std::uint32_t i);  // 1-based
  double hash_value(Vertex v);
  bool pair(Vertex u, Vertex v);
  std::span<const Vertex> full_neighborhood(Vertex v);
  std::span<const Vertex> batched_neighbors(Vertex v, std::uint32_t block);  // 1-based
  DirectedEdge random_edge();

  QueryCounter snapshot_counters() const { return cnt_; }
  Rng& rng() { return rng_; }
  std::uint32_t batched_block_size() const { return block_; }

 private:
  void require(QueryKind q) const;
  void check_vertex(Vertex v) const;
  const std::vector<Vertex>& shuffled_order(Vertex v);

  const Graph* g_;
  const HashAssignment* h_;
  AccessModel model_;
  std::uint32_t block_ = 1;
  QueryCounter cnt_;
  Rng rng_;
  std::optional<std::uint64_t> shuffle_seed_;
  std::unordered_map<Vertex, std::vector<Vertex>> shuffle_cache_;
};

}  // namespace sublin
