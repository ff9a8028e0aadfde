#pragma once

#include <algorithm>
#include <cassert>
#include <charconv>
#include <compare>
#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxmatch/errors.hpp"

namespace maxmatch {

using vertex = std::uint32_t;

inline constexpr vertex no_vertex = std::numeric_limits<vertex>::max();

// Undirected edge, stored with u < v.
struct edge {
  vertex u = 0;
  vertex v = 0;

  constexpr edge() = default;
  constexpr edge(vertex a, vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const edge&, const edge&) = default;
};

// Sorted, duplicate-free set of vertices of some parent graph.
class vertex_set {
 public:
  vertex_set() = default;
  explicit vertex_set(std::vector<vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static vertex_set range(std::size_t n) {
    std::vector<vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<vertex>(i);
    return vertex_set(std::move(all));
  }

  bool contains(vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  vertex front() const { return members_.front(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<vertex>& members() const { return members_; }

  friend bool operator==(const vertex_set&, const vertex_set&) = default;

 private:
  std::vector<vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class graph {
 public:
  graph() = default;

  // Deduplicates edges; throws graph_error on loops or out-of-range endpoints.
  graph(std::size_t n, std::vector<std::pair<vertex, vertex>> pairs) : n_(n), adjacency_(n) {
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw graph_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      if (a == b) throw graph_error("loop edge at vertex " + std::to_string(a));
      edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    assert(invariants_hold());
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<edge>& edges() const { return edges_; }
  std::span<const vertex> neighbors(vertex v) const { return adjacency_[v]; }
  std::size_t degree(vertex v) const { return adjacency_[v].size(); }

  bool has_edge(vertex a, vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return false;
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  bool invariants_hold() const {
    if (adjacency_.size() != n_) return false;
    std::size_t half_degrees = 0;
    for (vertex v = 0; v < n_; ++v) {
      const auto& list = adjacency_[v];
      if (!std::is_sorted(list.begin(), list.end())) return false;
      if (std::adjacent_find(list.begin(), list.end()) != list.end()) return false;
      for (vertex w : list) {
        if (w == v || w >= n_) return false;
        const auto& back = adjacency_[w];
        if (!std::binary_search(back.begin(), back.end(), v)) return false;
      }
      half_degrees += list.size();
    }
    return half_degrees == 2 * edges_.size();
  }

  friend bool operator==(const graph& a, const graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<edge> edges_;
  std::vector<std::vector<vertex>> adjacency_;
};

inline graph build_graph(std::size_t n, std::vector<std::pair<vertex, vertex>> pairs) {
  return graph(n, std::move(pairs));
}

// --- standard families ------------------------------------------------------

enum class family { path, cycle, star, complete };

inline graph make_graph(family kind, std::size_t n) {
  if (n == 0) throw graph_error("generator needs at least one vertex");
  std::vector<std::pair<vertex, vertex>> pairs;
  switch (kind) {
    case family::path:
      for (vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      break;
    case family::cycle:
      if (n < 3) throw graph_error("cycle needs at least 3 vertices");
      for (vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      pairs.emplace_back(static_cast<vertex>(n - 1), 0);
      break;
    case family::star:
      for (vertex i = 1; i < n; ++i) pairs.emplace_back(0, i);
      break;
    case family::complete:
      for (vertex i = 0; i < n; ++i)
        for (vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      break;
  }
  return graph(n, std::move(pairs));
}

inline graph make_path(std::size_t n) { return make_graph(family::path, n); }
inline graph make_cycle(std::size_t n) { return make_graph(family::cycle, n); }
inline graph make_star(std::size_t n) { return make_graph(family::star, n); }
inline graph make_complete(std::size_t n) { return make_graph(family::complete, n); }

// --- subgraphs ----------------------------------------------------------------

struct induced_graph {
  graph g;
  std::vector<vertex> to_parent;  // local index -> parent vertex
};

// Vertices keep their relative order; local i is the i-th smallest member of s.
inline induced_graph induced_subgraph(const graph& g, const vertex_set& s) {
  std::vector<vertex> local(g.order(), no_vertex);
  for (std::size_t i = 0; i < s.size(); ++i) {
    vertex v = s.members()[i];
    if (v >= g.order()) throw graph_error("vertex " + std::to_string(v) + " outside parent graph");
    local[v] = static_cast<vertex>(i);
  }
  std::vector<std::pair<vertex, vertex>> pairs;
  for (const edge& e : g.edges()) {
    if (local[e.u] != no_vertex && local[e.v] != no_vertex) pairs.emplace_back(local[e.u], local[e.v]);
  }
  return {graph(s.size(), std::move(pairs)), s.members()};
}

inline induced_graph remove_vertices(const graph& g, const vertex_set& removed) {
  std::vector<vertex> keep;
  keep.reserve(g.order());
  for (vertex v = 0; v < g.order(); ++v)
    if (!removed.contains(v)) keep.push_back(v);
  return induced_subgraph(g, vertex_set(std::move(keep)));
}

inline graph without_edge(const graph& g, edge drop) {
  std::vector<std::pair<vertex, vertex>> pairs;
  pairs.reserve(g.size());
  for (const edge& e : g.edges())
    if (e != drop) pairs.emplace_back(e.u, e.v);
  return graph(g.order(), std::move(pairs));
}

// Components ordered by smallest member.
inline std::vector<vertex_set> connected_components(const graph& g) {
  std::vector<vertex_set> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<vertex> stack;
  for (vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<vertex> members;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

inline bool is_tree(const graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

// --- edge-list text format ------------------------------------------------------

namespace detail {

inline bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> numbers;
  std::istringstream tokens(line);
  std::string token;
  while (tokens >> token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw graph_error("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + token + "'");
    }
    numbers.push_back(value);
  }
  return numbers;
}

}  // namespace detail

// Format: header "n m", then m lines "u v" (0-based). Lines starting with '#'
// and blank lines are skipped.
inline graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_data_line(in, line, line_no)) throw graph_error("missing header line 'n m'");
  auto header = detail::parse_numbers(line, line_no);
  if (header.size() != 2) throw graph_error("line " + std::to_string(line_no) + ": header must be 'n m'");
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  if (n > std::numeric_limits<vertex>::max() / 2) throw graph_error("vertex count too large");
  std::vector<std::pair<vertex, vertex>> pairs;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!detail::next_data_line(in, line, line_no)) {
      throw graph_error("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    }
    auto ends = detail::parse_numbers(line, line_no);
    if (ends.size() != 2) throw graph_error("line " + std::to_string(line_no) + ": edge must be 'u v'");
    if (ends[0] >= n || ends[1] >= n) {
      throw graph_error("line " + std::to_string(line_no) + ": endpoint out of range for n=" + std::to_string(n));
    }
    pairs.emplace_back(static_cast<vertex>(ends[0]), static_cast<vertex>(ends[1]));
  }
  if (detail::next_data_line(in, line, line_no)) {
    throw graph_error("line " + std::to_string(line_no) + ": unexpected data after " + std::to_string(m) + " edges");
  }
  return graph(static_cast<std::size_t>(n), std::move(pairs));
}

inline graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

// Canonical text: header, then edges sorted lexicographically with u < v.
inline std::string serialize_graph(const graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace maxmatch
