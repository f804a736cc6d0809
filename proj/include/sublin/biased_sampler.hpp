#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sublin/errors.hpp"
#include "sublin/graph.hpp"

namespace sublin {

// Level of a vertex with d >= theta: largest k with theta*2^k <= d.
inline int degree_band(std::uint32_t d, double theta) {
  int k = 0;
  double t = theta * 2.0;
  while (t <= static_cast<double>(d)) {
    ++k;
    t *= 2.0;
  }
  return k;
}

// P(v sampled) for a vertex with degree d >= theta under base rate p_n:
// min(1, p_n * 2^band). Guaranteed within [min(1, p_n*d/(2 theta)), min(1, p_n*d/theta)].
inline double inclusion_probability(std::uint32_t d, double theta, double p_n) {
  if (static_cast<double>(d) < theta)
    throw DomainError("inclusion probability undefined for degree below theta");
  return std::min(1.0, p_n * std::exp2(degree_band(d, theta)));
}

// Degree-proportional (within factor 2) vertex sampler over hash-ordered
// access. preprocess() == construction; draw() returns one sample set. Each
// draw resamples the popped vertices' virtual hashes so that repeated draws
// are independent. Single-threaded.
template <class Access>
class BiasedSampler {
 public:
  static constexpr int kMaxResample = 32;

  // `edge_count_hint`, when given, enables the d(S_k) resampling gate
  // (threshold 4*hint*log(2n/delta)/(2^k theta)). Without it the first draw of
  // each S_k is kept.
  BiasedSampler(Access& acc, double theta, double delta,
                std::optional<double> edge_count_hint = {})
      : acc_(acc), theta_(theta), delta_(delta) {
    if (!(theta > 0)) throw ParameterError("theta must be positive");
    if (!(delta > 0 && delta < 1)) throw ParameterError("delta must be in (0,1)");
    const std::uint32_t n = acc_.n();
    if (n == 0) return;

    int top = n >= 2 ? std::bit_width(n) - 1 : 0;
    if (theta_ < 1.0 && n >= 2) top = std::max(top, degree_band(n - 1, theta_));
    levels_.resize(top + 1);

    const double logterm = std::log(2.0 * n / delta_);
    for (int k = 0; k <= top; ++k) {
      Level& L = levels_[k];
      double want = n * logterm / (std::exp2(k) * theta_);
      std::uint64_t size = static_cast<std::uint64_t>(std::ceil(want));
      double gate = edge_count_hint ? 4.0 * *edge_count_hint * logterm / (std::exp2(k) * theta_)
                                    : 0.0;

      std::vector<Vertex> best;
      std::uint64_t best_weight = ~0ULL;
      for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        std::vector<Vertex> sample;
        sample.reserve(size);
        std::uint64_t weight = 0;
        for (std::uint64_t i = 0; i < size; ++i) {
          Vertex v = acc_.random_vertex();
          sample.push_back(v);
          weight += degree_of(v);
        }
        if (weight < best_weight) {
          best_weight = weight;
          best = std::move(sample);
        }
        if (!edge_count_hint || static_cast<double>(weight) < gate) break;
        ++resample_rounds_;
      }
      L.sample = std::move(best);

      for (Vertex v : L.sample) {
        if (degree_of(v) == 0) continue;
        Vertex z = acc_.ith_neighbor(v, 1);
        push(L, Item{z, level_hash(L, z), v, 1, true});
      }
    }
  }

  // Alg 4. Conditioned on the success event, each vertex with d(v) >= theta is
  // included independently with probability min(1, p_n*2^band), independently
  // across draws.
  std::vector<Vertex> draw(double p_n) {
    if (!(p_n > 0)) throw ParameterError("p_n must be positive");
    ++exec_;
    std::vector<Vertex> out;
    for (int k = 0; k < static_cast<int>(levels_.size()); ++k) {
      Level& L = levels_[k];
      const double q = p_n * std::exp2(k);
      if (q >= 1.0) {
        // every represented band-k vertex is taken; renormalize leaves one
        // virtual item per vertex with a fresh hash for later draws
        renormalize(L);
        for (const Item& it : L.heap)
          if (band_of(it.rep) == k) out.push_back(it.rep);
        continue;
      }
      if (L.threshold_product < 0.5) renormalize(L);
      L.threshold_product *= (1.0 - q);
      const double tau = 1.0 - L.threshold_product;

      std::unordered_set<Vertex> taken;
      while (!L.heap.empty() && L.heap.front().prio <= tau) {
        Vertex z = L.heap.front().rep;
        pop_copies(L, z);
        if (band_of(z) == k) {
          if (taken.insert(z).second) {
            out.push_back(z);
            double fresh = acc_.rng().uniform(tau, 1.0);
            L.h[z] = fresh;
            push(L, Item{z, fresh, 0, 0, false});
          }
        }
        // out-of-band vertices drop out of this level's queue
      }
    }
    return out;
  }

  std::uint64_t executions() const { return exec_; }
  std::uint64_t resample_rounds() const { return resample_rounds_; }
  double theta() const { return theta_; }
  int level_count() const { return static_cast<int>(levels_.size()); }
  const std::vector<Vertex>& level_sample(int k) const { return levels_[k].sample; }
  std::size_t queue_size(int k) const { return levels_[k].heap.size(); }
  double threshold_product(int k) const { return levels_[k].threshold_product; }

  // current virtual hash of v at its band level (original hash if untouched);
  // test hook, `degree` supplied externally to avoid charging queries
  double virtual_hash(Vertex v, std::uint32_t degree) const {
    int k = degree_band(degree, theta_);
    const Level& L = levels_[k];
    auto it = L.h.find(v);
    if (it != L.h.end()) return it->second;
    auto base = base_hash_.find(v);
    if (base == base_hash_.end()) throw DomainError("vertex never touched by the sampler");
    return base->second;
  }

  // every queue item carries the current virtual hash of its vertex
  bool priorities_coherent() const {
    for (const Level& L : levels_)
      for (const Item& it : L.heap) {
        auto h = L.h.find(it.rep);
        double cur = h != L.h.end() ? h->second : base_hash_.at(it.rep);
        if (it.prio != cur) return false;
      }
    return true;
  }

  std::uint32_t degree_of(Vertex v) {
    auto it = deg_.find(v);
    if (it != deg_.end()) return it->second;
    std::uint32_t d = acc_.degree(v);
    deg_.emplace(v, d);
    return d;
  }

 private:
  struct Item {
    Vertex rep;          // vertex this item stands for
    double prio;         // == current virtual hash of rep at this level
    Vertex owner;        // cursor: the S_k member whose list is being walked
    std::uint32_t index; // cursor: position of rep in owner's hash order
    bool cursor;
  };

  struct ItemLess {
    // max-heap comparator inverted: smallest (prio, rep) on top
    bool operator()(const Item& a, const Item& b) const {
      if (a.prio != b.prio) return a.prio > b.prio;
      return a.rep > b.rep;
    }
  };

  struct Level {
    std::vector<Vertex> sample;                // S_k (multiset, with replacement)
    std::vector<Item> heap;                    // min-heap via ItemLess
    std::unordered_map<Vertex, double> h;      // virtual hashes resampled at this level
    double threshold_product = 1.0;            // prod over draws of (1 - p_n 2^k)
  };

  void push(Level& L, Item it) {
    L.heap.push_back(it);
    std::push_heap(L.heap.begin(), L.heap.end(), ItemLess{});
  }

  Item pop(Level& L) {
    std::pop_heap(L.heap.begin(), L.heap.end(), ItemLess{});
    Item it = L.heap.back();
    L.heap.pop_back();
    return it;
  }

  int band_of(Vertex v) {
    std::uint32_t d = degree_of(v);
    if (static_cast<double>(d) < theta_) return -1;
    return degree_band(d, theta_);
  }

  double base_hash(Vertex v) {
    auto it = base_hash_.find(v);
    if (it != base_hash_.end()) return it->second;
    double h = acc_.hash_value(v);
    base_hash_.emplace(v, h);
    return h;
  }

  double level_hash(Level& L, Vertex v) {
    auto it = L.h.find(v);
    if (it != L.h.end()) return it->second;
    return base_hash(v);
  }

  void advance_cursor(Level& L, Vertex owner, std::uint32_t index) {
    if (index + 1 <= degree_of(owner)) {
      Vertex z = acc_.ith_neighbor(owner, index + 1);
      push(L, Item{z, level_hash(L, z), owner, index + 1, true});
    }
  }

  // removes every copy of z from the top of the heap, advancing cursors
  void pop_copies(Level& L, Vertex z) {
    while (!L.heap.empty() && L.heap.front().rep == z) {
      Item b = pop(L);
      if (b.cursor) advance_cursor(L, b.owner, b.index);
    }
  }

  // Walks every cursor to the end of its list, then re-randomizes the virtual
  // hash of every represented vertex and resets the threshold, so later draws
  // see fresh uniform hashes on [0,1). Keeps double precision healthy: the
  // threshold product stays in (1/4, 1].
  void renormalize(Level& L) {
    std::unordered_set<Vertex> reps;
    std::vector<Item> items = std::move(L.heap);
    L.heap.clear();
    for (Item& it : items) {
      reps.insert(it.rep);
      if (it.cursor)
        for (std::uint32_t j = it.index + 1; j <= degree_of(it.owner); ++j)
          reps.insert(acc_.ith_neighbor(it.owner, j));
    }
    for (Vertex z : reps) {
      double fresh = acc_.rng().real();
      L.h[z] = fresh;
      push(L, Item{z, fresh, 0, 0, false});
    }
    L.threshold_product = 1.0;
  }

  Access& acc_;
  double theta_;
  double delta_;
  std::vector<Level> levels_;
  std::unordered_map<Vertex, double> base_hash_;
  std::unordered_map<Vertex, std::uint32_t> deg_;
  std::uint64_t exec_ = 0;
  std::uint64_t resample_rounds_ = 0;
};

// Debug hook for tests: the success event of the biased-sampling lemma (every
// vertex with d(v) >= theta has a neighbor in its level's sample). Full-graph
// scan; never used by estimators.
template <class Access>
bool verify_success_event(const BiasedSampler<Access>& smp, const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) < smp.theta()) continue;
    int k = degree_band(g.degree(v), smp.theta());
    if (k >= smp.level_count()) return false;
    bool covered = false;
    for (Vertex s : smp.level_sample(k)) {
      if (g.has_edge(s, v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace sublin
