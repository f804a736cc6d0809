#include "sublin/hash_order_sim.hpp"

#include <algorithm>

namespace sublin {

std::uint32_t HashOrderSimulator::degree(Vertex v) {
  auto it = deg_.find(v);
  if (it != deg_.end()) return it->second;
  std::uint32_t d = base_.degree(v);
  deg_.emplace(v, d);
  return d;
}

const std::vector<Vertex>& HashOrderSimulator::ensure_scanned(Vertex v) {
  auto it = order_.find(v);
  if (it != order_.end()) return it->second;

  std::uint32_t d = degree(v);
  std::vector<Vertex> nb;
  nb.reserve(d);
  switch (base_.model().kind) {
    case ModelKind::full_neighborhood: {
      auto s = base_.full_neighborhood(v);
      nb.assign(s.begin(), s.end());
      break;
    }
    case ModelKind::batched: {
      std::uint32_t bs = base_.batched_block_size();
      for (std::uint32_t b = 1; nb.size() < d; ++b) {
        auto s = base_.batched_neighbors(v, b);
        nb.insert(nb.end(), s.begin(), s.end());
        if (s.empty()) break;
        (void)bs;
      }
      break;
    }
    default:
      for (std::uint32_t i = 1; i <= d; ++i) nb.push_back(base_.ith_neighbor(v, i));
  }
  std::sort(nb.begin(), nb.end(), [this](Vertex a, Vertex b) {
    double ha = hash_value(a), hb = hash_value(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return order_.emplace(v, std::move(nb)).first->second;
}

Vertex HashOrderSimulator::ith_neighbor(Vertex v, std::uint32_t i) {
  const auto& nb = ensure_scanned(v);
  if (i < 1 || i > nb.size())
    throw RangeError("neighbor index " + std::to_string(i) + " out of range for vertex " +
                     std::to_string(v));
  return nb[i - 1];
}

std::span<const Vertex> HashOrderSimulator::full_neighborhood(Vertex v) {
  return ensure_scanned(v);
}

}  // namespace sublin
