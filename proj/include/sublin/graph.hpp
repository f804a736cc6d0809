#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sublin {

using Vertex = std::uint32_t;

struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct DirectedEdgeHash {
  std::size_t operator()(const DirectedEdge& e) const {
    return (static_cast<std::uint64_t>(e.from) << 32) | e.to;
  }
};

// Undirected simple graph with dense vertex ids in [0, n).
// Adjacency lists are kept sorted by neighbor id. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Validates: ids < n, no self-loops, no duplicate edges (either orientation).
  static Graph from_edges(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::uint32_t n() const { return static_cast<std::uint32_t>(adj_.size()); }
  std::uint64_t m() const { return m_; }
  std::uint64_t directed_edge_count() const { return 2 * m_; }

  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Directed edges are indexed in id order: all edges out of vertex 0, then 1, ...
  DirectedEdge directed_edge(std::uint64_t index) const;
  // prefix[v] = number of directed edges out of vertices < v; size n+1.
  const std::vector<std::uint64_t>& degree_prefix() const { return prefix_; }

  std::uint64_t max_degree() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t m_ = 0;
};

// Edge-list text format: optional first line "n=<count>", then one "u v" per
// line. Throws ParseError (with line number) or ValidationError.
Graph load_edge_list_text(std::string_view text);
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

std::string to_edge_list_text(const Graph& g);

}  // namespace sublin
