#include "sublin/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sublin/errors.hpp"

namespace sublin {

Graph Graph::from_edges(std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") references vertex outside [0," + std::to_string(n) + ")");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw ValidationError("duplicate edge incident to vertex " + std::to_string(v));
  }
  g.m_ = edges.size();
  g.prefix_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.prefix_[v + 1] = g.prefix_[v] + g.adj_[v].size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n() || v >= n()) return false;
  const auto& a = degree(u) <= degree(v) ? adj_[u] : adj_[v];
  Vertex needle = degree(u) <= degree(v) ? v : u;
  return std::binary_search(a.begin(), a.end(), needle);
}

DirectedEdge Graph::directed_edge(std::uint64_t index) const {
  // largest v with prefix_[v] <= index
  auto it = std::upper_bound(prefix_.begin(), prefix_.end(), index);
  Vertex from = static_cast<Vertex>(std::distance(prefix_.begin(), it) - 1);
  return {from, adj_[from][index - prefix_[from]]};
}

std::uint64_t Graph::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& a : adj_) d = std::max<std::uint64_t>(d, a.size());
  return d;
}

namespace {

bool parse_u32(std::string_view tok, std::uint32_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

}  // namespace

Graph load_edge_list_text(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t declared_n = 0;
  bool have_declared = false;
  std::uint64_t max_id = 0;
  bool any_vertex = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool first_content_line = true;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string_view::npos) continue;
    std::size_t e = line.find_last_not_of(" \t");
    line = line.substr(b, e - b + 1);

    if (first_content_line && line.starts_with("n=")) {
      std::uint32_t nv = 0;
      if (!parse_u32(line.substr(2), nv))
        throw ParseError("line " + std::to_string(line_no) + ": malformed n= header");
      declared_n = nv;
      have_declared = true;
      first_content_line = false;
      continue;
    }
    first_content_line = false;

    std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    std::string_view a = line.substr(0, sp);
    std::size_t b2 = line.find_first_not_of(" \t", sp);
    std::string_view rest = line.substr(b2);
    std::size_t sp2 = rest.find_first_of(" \t");
    if (sp2 != std::string_view::npos) {
      if (rest.find_first_not_of(" \t", sp2) != std::string_view::npos)
        throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after 'u v'");
      rest = rest.substr(0, sp2);
    }
    std::uint32_t u = 0, v = 0;
    if (!parse_u32(a, u) || !parse_u32(rest, v))
      throw ParseError("line " + std::to_string(line_no) + ": ids must be non-negative integers");
    if (u == v)
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(u));
    edges.emplace_back(u, v);
    max_id = std::max<std::uint64_t>(max_id, std::max(u, v));
    any_vertex = true;
  }

  std::uint64_t n = any_vertex ? max_id + 1 : 0;
  if (have_declared) {
    if (any_vertex && declared_n < max_id + 1)
      throw ValidationError("declared n=" + std::to_string(declared_n) +
                            " smaller than 1+max id=" + std::to_string(max_id + 1));
    n = declared_n;
  }
  return Graph::from_edges(static_cast<std::uint32_t>(n), edges);
}

Graph load_edge_list(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_edge_list_text(ss.str());
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return load_edge_list(f);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << "\n";
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace sublin
