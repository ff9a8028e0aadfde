#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "maxmatch/graph.hpp"

namespace maxmatch {

using random_engine = std::mt19937_64;

inline std::size_t uniform_index(random_engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// G(n, m): m distinct edges chosen uniformly (m is clamped to n choose 2).
inline graph random_gnm(std::size_t n, std::size_t m, random_engine& rng) {
  std::vector<std::pair<vertex, vertex>> all;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  m = std::min(m, all.size());
  for (std::size_t i = 0; i < m; ++i) std::swap(all[i], all[uniform_index(rng, i, all.size() - 1)]);
  all.resize(m);
  return graph(n, std::move(all));
}

// G(n, p).
inline graph random_gnp(std::size_t n, double p, random_engine& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<vertex, vertex>> edges;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return graph(n, std::move(edges));
}

// Random labelled tree from a uniform Pruefer sequence.
inline graph random_tree(std::size_t n, random_engine& rng) {
  if (n <= 1) return graph(n, {});
  if (n == 2) return graph(2, {{0, 1}});
  std::vector<vertex> code(n - 2);
  for (auto& c : code) c = static_cast<vertex>(uniform_index(rng, 0, n - 1));
  std::vector<std::size_t> degree(n, 1);
  for (vertex c : code) ++degree[c];
  std::vector<std::pair<vertex, vertex>> edges;
  for (vertex c : code) {
    vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  vertex a = no_vertex;
  for (vertex v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (a == no_vertex) {
      a = v;
    } else {
      edges.emplace_back(a, v);
      break;
    }
  }
  return graph(n, std::move(edges));
}

// Factor-critical graph grown by odd ears: start from an odd cycle and attach
// `ears` paths with an odd number of edges between existing vertices (a closed
// ear returns to its start). Every such graph is factor-critical.
inline graph random_factor_critical(std::size_t ears, std::size_t max_ear_vertices, random_engine& rng) {
  const std::size_t cycle = 2 * uniform_index(rng, 1, 3) + 1;
  std::vector<std::pair<vertex, vertex>> edges;
  for (vertex v = 0; v < cycle; ++v) edges.emplace_back(v, static_cast<vertex>((v + 1) % cycle));
  std::size_t n = cycle;
  for (std::size_t e = 0; e < ears; ++e) {
    const std::size_t inner = 2 * uniform_index(rng, 0, max_ear_vertices / 2);
    const auto from = static_cast<vertex>(uniform_index(rng, 0, n - 1));
    auto to = static_cast<vertex>(uniform_index(rng, 0, n - 1));
    if (inner == 0) {
      if (from == to) continue;  // a single edge must join two distinct vertices
      edges.emplace_back(from, to);
      continue;
    }
    vertex previous = from;
    for (std::size_t i = 0; i < inner; ++i) {
      const auto fresh = static_cast<vertex>(n++);
      edges.emplace_back(previous, fresh);
      previous = fresh;
    }
    edges.emplace_back(previous, to);
  }
  return graph(n, std::move(edges));
}

// Small random connected clusters joined by a few bridging edges.
inline graph random_clustered(std::size_t n, std::size_t cluster_max, double bridge_rate, random_engine& rng) {
  std::vector<std::pair<vertex, vertex>> edges;
  std::vector<vertex> anchors;
  std::size_t placed = 0;
  while (placed < n) {
    const std::size_t size = std::min(n - placed, uniform_index(rng, 1, cluster_max));
    const graph tree = random_tree(size, rng);
    for (const edge& e : tree.edges())
      edges.emplace_back(static_cast<vertex>(placed + e.u), static_cast<vertex>(placed + e.v));
    const std::size_t extra = uniform_index(rng, 0, size / 2);
    for (std::size_t i = 0; i < extra; ++i) {
      const auto u = static_cast<vertex>(placed + uniform_index(rng, 0, size - 1));
      const auto v = static_cast<vertex>(placed + uniform_index(rng, 0, size - 1));
      if (u != v) edges.emplace_back(u, v);
    }
    anchors.push_back(static_cast<vertex>(placed));
    placed += size;
  }
  const auto bridges = static_cast<std::size_t>(bridge_rate * static_cast<double>(anchors.size()));
  for (std::size_t i = 0; i < bridges; ++i) {
    const auto u = static_cast<vertex>(uniform_index(rng, 0, n - 1));
    const auto v = static_cast<vertex>(uniform_index(rng, 0, n - 1));
    if (u != v) edges.emplace_back(u, v);
  }
  return graph(n, std::move(edges));
}

}  // namespace maxmatch
