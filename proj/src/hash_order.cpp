#include "sublin/hash_order.hpp"

#include <algorithm>

namespace sublin {

HashAssignment::HashAssignment(const Graph& g, std::uint64_t seed) : seed_(seed) {
  const std::uint32_t n = g.n();
  val_.resize(n);
  for (Vertex v = 0; v < n; ++v) val_[v] = vertex_hash_value(seed, v);
  adj_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    adj_[v].assign(nb.begin(), nb.end());
    std::sort(adj_[v].begin(), adj_[v].end(), [this](Vertex a, Vertex b) { return precedes(a, b); });
  }
}

}  // namespace sublin
