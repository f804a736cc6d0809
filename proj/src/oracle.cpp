#include "sublin/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace sublin {

const char* to_string(QueryKind k) {
  switch (k) {
    case QueryKind::random_vertex: return "random_vertex";
    case QueryKind::degree: return "degree";
    case QueryKind::ith_neighbor: return "ith_neighbor";
    case QueryKind::hash: return "hash";
    case QueryKind::pair: return "pair";
    case QueryKind::full_neighborhood: return "full_neighborhood";
    case QueryKind::batched_block: return "batched_block";
    case QueryKind::random_edge: return "random_edge";
  }
  return "?";
}

const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::indexed_neighbor: return "indexed_neighbor";
    case ModelKind::indexed_neighbor_with_pairs: return "indexed_neighbor_with_pairs";
    case ModelKind::hash_ordered_neighbor: return "hash_ordered_neighbor";
    case ModelKind::full_neighborhood: return "full_neighborhood";
    case ModelKind::batched: return "batched";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "indexed_neighbor" || s == "indexed") return ModelKind::indexed_neighbor;
  if (s == "indexed_neighbor_with_pairs" || s == "indexed-pairs" || s == "pairs")
    return ModelKind::indexed_neighbor_with_pairs;
  if (s == "hash_ordered_neighbor" || s == "hash") return ModelKind::hash_ordered_neighbor;
  if (s == "full_neighborhood" || s == "full") return ModelKind::full_neighborhood;
  if (s == "batched") return ModelKind::batched;
  throw ConfigError("unknown access model '" + s + "'");
}

bool AccessModel::allows(QueryKind q) const {
  switch (q) {
    case QueryKind::random_vertex: return random_vertex;
    case QueryKind::random_edge: return random_edge;
    case QueryKind::degree:
      return kind == ModelKind::indexed_neighbor || kind == ModelKind::indexed_neighbor_with_pairs ||
             kind == ModelKind::hash_ordered_neighbor || kind == ModelKind::batched;
    case QueryKind::ith_neighbor:
      return kind == ModelKind::indexed_neighbor || kind == ModelKind::indexed_neighbor_with_pairs ||
             kind == ModelKind::hash_ordered_neighbor;
    case QueryKind::hash: return kind == ModelKind::hash_ordered_neighbor;
    case QueryKind::pair:
      return kind == ModelKind::indexed_neighbor_with_pairs ||
             kind == ModelKind::hash_ordered_neighbor;
    case QueryKind::full_neighborhood: return kind == ModelKind::full_neighborhood;
    case QueryKind::batched_block: return kind == ModelKind::batched;
  }
  return false;
}

std::uint64_t QueryCounter::of(QueryKind k) const {
  switch (k) {
    case QueryKind::random_vertex: return random_vertex;
    case QueryKind::degree: return degree;
    case QueryKind::ith_neighbor: return ith_neighbor;
    case QueryKind::hash: return hash;
    case QueryKind::pair: return pair;
    case QueryKind::full_neighborhood: return full_neighborhood;
    case QueryKind::batched_block: return batched_block;
    case QueryKind::random_edge: return random_edge;
  }
  return 0;
}

Oracle::Oracle(const Graph& g, const HashAssignment* hashes, AccessModel model, std::uint64_t seed,
               std::optional<std::uint64_t> shuffle_seed)
    : g_(&g), h_(hashes), model_(model), rng_(seed), shuffle_seed_(shuffle_seed) {
  if (model_.kind == ModelKind::hash_ordered_neighbor && h_ == nullptr)
    throw ParameterError("hash-ordered oracle requires a HashAssignment");
  if (model_.kind == ModelKind::batched) {
    block_ = model_.block_size;
    if (block_ == 0 && g.n() > 0)
      block_ = static_cast<std::uint32_t>((g.directed_edge_count() + g.n() - 1) / g.n());
    block_ = std::max<std::uint32_t>(block_, 1);
  }
}

void Oracle::require(QueryKind q) const {
  if (!model_.allows(q)) throw CapabilityError(to_string(model_.kind), to_string(q));
}

void Oracle::check_vertex(Vertex v) const {
  if (v >= g_->n()) throw RangeError("vertex id " + std::to_string(v) + " out of range");
}

Vertex Oracle::random_vertex() {
  require(QueryKind::random_vertex);
  if (g_->n() == 0) throw EmptyGraphError("random_vertex on empty graph");
  Vertex v = static_cast<Vertex>(rng_.index(g_->n()));
  ++cnt_.random_vertex;
  return v;
}

std::uint32_t Oracle::degree(Vertex v) {
  require(QueryKind::degree);
  check_vertex(v);
  ++cnt_.degree;
  return g_->degree(v);
}

const std::vector<Vertex>& Oracle::shuffled_order(Vertex v) {
  auto it = shuffle_cache_.find(v);
  if (it != shuffle_cache_.end()) return it->second;
  auto nb = g_->neighbors(v);
  std::vector<Vertex> perm(nb.begin(), nb.end());
  Rng r(counter_hash(*shuffle_seed_, v));
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[r.index(i)]);
  return shuffle_cache_.emplace(v, std::move(perm)).first->second;
}

Vertex Oracle::ith_neighbor(Vertex v, std::uint32_t i) {
  require(QueryKind::ith_neighbor);
  check_vertex(v);
  if (i < 1 || i > g_->degree(v))
    throw RangeError("neighbor index " + std::to_string(i) + " out of range for vertex " +
                     std::to_string(v));
  ++cnt_.ith_neighbor;
  if (model_.kind == ModelKind::hash_ordered_neighbor) return h_->neighbors_by_hash(v)[i - 1];
  if (shuffle_seed_) return shuffled_order(v)[i - 1];
  return g_->neighbors(v)[i - 1];
}

double Oracle::hash_value(Vertex v) {
  require(QueryKind::hash);
  check_vertex(v);
  ++cnt_.hash;
  return h_->value(v);
}

bool Oracle::pair(Vertex u, Vertex v) {
  require(QueryKind::pair);
  check_vertex(u);
  check_vertex(v);
  ++cnt_.pair;
  return g_->has_edge(u, v);
}

std::span<const Vertex> Oracle::full_neighborhood(Vertex v) {
  require(QueryKind::full_neighborhood);
  check_vertex(v);
  ++cnt_.full_neighborhood;
  cnt_.vertices_touched += g_->degree(v);
  return g_->neighbors(v);
}

std::span<const Vertex> Oracle::batched_neighbors(Vertex v, std::uint32_t block) {
  require(QueryKind::batched_block);
  check_vertex(v);
  if (block < 1) throw RangeError("batched block index must be >= 1");
  std::uint64_t lo = static_cast<std::uint64_t>(block - 1) * block_;
  if (lo >= g_->degree(v))
    throw RangeError("batched block " + std::to_string(block) + " out of range for vertex " +
                     std::to_string(v));
  ++cnt_.batched_block;
  std::uint64_t hi = std::min<std::uint64_t>(lo + block_, g_->degree(v));
  cnt_.vertices_touched += hi - lo;
  return g_->neighbors(v).subspan(lo, hi - lo);
}

DirectedEdge Oracle::random_edge() {
  require(QueryKind::random_edge);
  if (g_->m() == 0) throw EmptyGraphError("random_edge on edgeless graph");
  std::uint64_t idx = rng_.index(g_->directed_edge_count());
  ++cnt_.random_edge;
  return g_->directed_edge(idx);
}

}  // namespace sublin
