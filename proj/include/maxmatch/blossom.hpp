#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

#include "maxmatch/graph.hpp"

namespace maxmatch {

// Set of pairwise vertex-disjoint edges, stored as a mate array.
class matching {
 public:
  matching() = default;
  explicit matching(std::size_t n) : mate_(n, no_vertex) {}

  std::size_t size() const { return size_; }
  std::size_t order() const { return mate_.size(); }

  std::optional<vertex> mate(vertex v) const {
    if (mate_[v] == no_vertex) return std::nullopt;
    return mate_[v];
  }
  bool is_saturated(vertex v) const { return mate_[v] != no_vertex; }

  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(size_);
    for (vertex v = 0; v < mate_.size(); ++v)
      if (mate_[v] != no_vertex && v < mate_[v]) out.emplace_back(v, mate_[v]);
    return out;
  }

  // Mate array symmetric, and every matched pair is an edge of g.
  bool is_valid_for(const graph& g) const {
    if (mate_.size() != g.order()) return false;
    std::size_t pairs = 0;
    for (vertex v = 0; v < mate_.size(); ++v) {
      vertex w = mate_[v];
      if (w == no_vertex) continue;
      if (w >= mate_.size() || mate_[w] != v || !g.has_edge(v, w)) return false;
      if (v < w) ++pairs;
    }
    return pairs == size_;
  }

  const std::vector<vertex>& mates() const { return mate_; }

 private:
  friend class blossom_matcher;
  std::vector<vertex> mate_;
  std::size_t size_ = 0;
};

// Edmonds' blossom algorithm, O(n^3). Roots are tried in ascending order and
// each search is a BFS over ascending neighbor lists, so the output is fixed
// for a given graph.
class blossom_matcher {
 public:
  explicit blossom_matcher(const graph& g)
      : g_(g), n_(g.order()), result_(g.order()), parent_(n_), base_(n_), used_(n_), in_blossom_(n_), path_mark_(n_) {}

  matching run() {
    for (vertex root = 0; root < n_; ++root) {
      if (result_.mate_[root] != no_vertex) continue;
      vertex end = find_augmenting_path(root);
      if (end == no_vertex) continue;
      augment(end);
      ++result_.size_;
    }
    return result_;
  }

 private:
  std::vector<vertex>& mate() { return result_.mate_; }

  vertex lowest_common_base(vertex a, vertex b) {
    std::fill(path_mark_.begin(), path_mark_.end(), false);
    for (;;) {
      a = base_[a];
      path_mark_[a] = true;
      if (mate()[a] == no_vertex) break;
      a = parent_[mate()[a]];
    }
    for (;;) {
      b = base_[b];
      if (path_mark_[b]) return b;
      b = parent_[mate()[b]];
    }
  }

  void mark_path(vertex v, vertex b, vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate()[v]]] = true;
      parent_[v] = child;
      child = mate()[v];
      v = parent_[mate()[v]];
    }
  }

  vertex find_augmenting_path(vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), no_vertex);
    for (vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      vertex v = queue.front();
      queue.pop();
      for (vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate()[v] == to) continue;
        if (to == root || (mate()[to] != no_vertex && parent_[mate()[to]] != no_vertex)) {
          vertex current = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = current;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == no_vertex) {
          parent_[to] = v;
          if (mate()[to] == no_vertex) return to;
          used_[mate()[to]] = true;
          queue.push(mate()[to]);
        }
      }
    }
    return no_vertex;
  }

  void augment(vertex v) {
    while (v != no_vertex) {
      vertex pv = parent_[v];
      vertex next = mate()[pv];
      mate()[v] = pv;
      mate()[pv] = v;
      v = next;
    }
  }

  const graph& g_;
  std::size_t n_;
  matching result_;
  std::vector<vertex> parent_;
  std::vector<vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
  std::vector<bool> path_mark_;
};

inline matching maximum_matching(const graph& g) { return blossom_matcher(g).run(); }

inline std::size_t matching_number(const graph& g) { return maximum_matching(g).size(); }

inline bool has_perfect_matching(const graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

// G - v has a perfect matching for every v. The one-vertex graph qualifies;
// the empty graph does not.
inline bool is_factor_critical(const graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n % 2 == 0) return false;
  for (vertex v = 0; v < n; ++v) {
    if (2 * matching_number(remove_vertices(g, vertex_set({v})).g) != n - 1) return false;
  }
  assert(is_connected(g));
  return true;
}

}  // namespace maxmatch
