#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "maxmatch/errors.hpp"
#include "maxmatch/graph.hpp"

namespace maxmatch {

inline constexpr std::size_t max_certificate_order = 11;  // 55 adjacency bits

namespace detail {

class certificate_search {
 public:
  explicit certificate_search(const graph& g) : g_(g), n_(g.order()) {
    adjacency_.assign(n_, 0);
    for (const edge& e : g.edges()) {
      adjacency_[e.u] |= std::uint64_t{1} << e.v;
      adjacency_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  std::uint64_t run() {
    if (n_ == 0) return 0;
    std::vector<std::vector<vertex>> cells(1);
    for (vertex v = 0; v < n_; ++v) cells[0].push_back(v);
    search(std::move(cells));
    return best_;
  }

 private:
  using partition = std::vector<std::vector<vertex>>;

  // Equitable refinement. Cells split by the vector of neighbor counts per
  // cell; sub-cells are ordered by that vector, so the result depends only on
  // the isomorphism type of (graph, ordered partition).
  void refine(partition& cells) const {
    std::vector<std::size_t> cell_of(n_);
    for (;;) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (vertex v : cells[c]) cell_of[v] = c;
      partition next;
      next.reserve(cells.size());
      bool split = false;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint32_t>, vertex>> keyed;
        keyed.reserve(cell.size());
        for (vertex v : cell) {
          std::vector<std::uint32_t> signature(cells.size(), 0);
          for (vertex w : g_.neighbors(v)) ++signature[cell_of[w]];
          keyed.emplace_back(std::move(signature), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<vertex> group{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
            split = true;
          }
          group.push_back(keyed[i].second);
        }
        next.push_back(std::move(group));
      }
      cells = std::move(next);
      if (!split) return;
    }
  }

  bool twins(vertex a, vertex b) const {
    const std::uint64_t mask = ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    return (adjacency_[a] & mask) == (adjacency_[b] & mask);
  }

  void search(partition cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      record(cells);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    const std::vector<vertex> choices = *target;
    std::vector<vertex> tried;
    for (vertex v : choices) {
      // Swapping twins inside one cell is an automorphism fixing the
      // partition, so their branches yield identical certificates.
      if (std::any_of(tried.begin(), tried.end(), [&](vertex t) { return twins(t, v); })) continue;
      tried.push_back(v);
      partition branch;
      branch.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != index) {
          branch.push_back(cells[c]);
          continue;
        }
        branch.push_back({v});
        std::vector<vertex> rest;
        for (vertex w : cells[c])
          if (w != v) rest.push_back(w);
        branch.push_back(std::move(rest));
      }
      search(std::move(branch));
    }
  }

  void record(const partition& cells) {
    std::vector<vertex> order;
    order.reserve(n_);
    for (const auto& c : cells) order.push_back(c.front());
    std::uint64_t cert = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j, ++bit) {
        if (adjacency_[order[i]] >> order[j] & 1U) cert |= std::uint64_t{1} << bit;
      }
    }
    if (!have_best_ || cert < best_) {
      best_ = cert;
      have_best_ = true;
    }
  }

  const graph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> adjacency_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace detail

// Isomorphism-invariant code of a graph on at most 11 vertices: two graphs of
// equal order share a certificate iff they are isomorphic.
inline std::uint64_t canonical_certificate(const graph& g) {
  if (g.order() > max_certificate_order) {
    throw cap_exceeded("canonical certificate supports at most " + std::to_string(max_certificate_order) +
                       " vertices");
  }
  return detail::certificate_search(g).run();
}

inline bool are_isomorphic(const graph& a, const graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_certificate(a) == canonical_certificate(b);
}

// One representative per isomorphism class of graphs on n vertices (n <= 9),
// built by adding a vertex with every possible neighborhood to each class on
// n - 1 vertices. Output ordered by certificate.
inline std::vector<graph> enumerate_graphs(std::size_t n) {
  if (n > 9) throw cap_exceeded("exhaustive graph enumeration supports at most 9 vertices");
  if (n == 0) return {graph()};
  std::map<std::uint64_t, graph> layer{{0, graph(1, {})}};
  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::uint64_t, graph> grown;
    for (const auto& [cert, base] : layer) {
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
        std::vector<std::pair<vertex, vertex>> pairs;
        pairs.reserve(base.size() + k);
        for (const edge& e : base.edges()) pairs.emplace_back(e.u, e.v);
        for (vertex v = 0; v < k; ++v)
          if (subset >> v & 1U) pairs.emplace_back(v, static_cast<vertex>(k));
        graph candidate(k + 1, std::move(pairs));
        grown.try_emplace(canonical_certificate(candidate), std::move(candidate));
      }
    }
    layer = std::move(grown);
  }
  std::vector<graph> out;
  out.reserve(layer.size());
  for (auto& [cert, g] : layer) out.push_back(std::move(g));
  return out;
}

inline std::vector<graph> enumerate_connected_graphs(std::size_t n) {
  std::vector<graph> out;
  for (auto& g : enumerate_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace maxmatch
