#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxmatch/big_count.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/graph.hpp"

namespace maxmatch {

struct oracle_limits {
  std::size_t max_vertices = 16;
  std::size_t max_edges = 24;  // hard ceiling 64
};

// Ground truth from listing every matching.
struct matching_profile {
  std::vector<big_count> phi;  // phi[k] = number of k-matchings, k = 0..nu
  std::size_t nu = 0;
  vertex_set missed_vertices;  // missed by at least one maximum matching
  std::vector<edge> max_edges;  // contained in at least one maximum matching
};

namespace detail {

class matching_lister {
 public:
  explicit matching_lister(const graph& g) : edges_(g.edges()), n_(g.order()) {
    by_size_count_.assign(n_ / 2 + 1, 0);
    by_size_free_.assign(by_size_count_.size(), 0);
    by_size_edges_.assign(by_size_count_.size(), 0);
  }

  void run() { visit(0, 0, 0, 0); }

  matching_profile profile() const {
    matching_profile out;
    std::size_t nu = 0;
    for (std::size_t k = 0; k < by_size_count_.size(); ++k)
      if (by_size_count_[k] != 0) nu = k;
    out.nu = nu;
    for (std::size_t k = 0; k <= nu; ++k) out.phi.emplace_back(by_size_count_[k]);
    std::vector<vertex> missed;
    for (vertex v = 0; v < n_; ++v)
      if (by_size_free_[nu] >> v & 1U) missed.push_back(v);
    out.missed_vertices = vertex_set(std::move(missed));
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (by_size_edges_[nu] >> i & 1U) out.max_edges.push_back(edges_[i]);
    return out;
  }

 private:
  // Include/exclude each edge in ascending order.
  void visit(std::size_t index, std::uint64_t used, std::uint64_t chosen, std::size_t size) {
    if (index == edges_.size()) {
      ++by_size_count_[size];
      const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
      by_size_free_[size] |= all & ~used;
      by_size_edges_[size] |= chosen;
      return;
    }
    visit(index + 1, used, chosen, size);
    const edge& e = edges_[index];
    const std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if ((used & ends) == 0) visit(index + 1, used | ends, chosen | std::uint64_t{1} << index, size + 1);
  }

  const std::vector<edge>& edges_;
  std::size_t n_;
  std::vector<std::uint64_t> by_size_count_;
  std::vector<std::uint64_t> by_size_free_;
  std::vector<std::uint64_t> by_size_edges_;
};

}  // namespace detail

// Exhaustive listing; refuses (cap_exceeded) rather than truncating.
inline matching_profile enumerate_profile(const graph& g, const oracle_limits& limits = {}) {
  const std::size_t vertex_cap = std::min<std::size_t>(limits.max_vertices, 64);
  const std::size_t edge_cap = std::min<std::size_t>(limits.max_edges, 64);
  if (g.order() > vertex_cap) {
    throw cap_exceeded("oracle: " + std::to_string(g.order()) + " vertices exceeds cap " + std::to_string(vertex_cap));
  }
  if (g.size() > edge_cap) {
    throw cap_exceeded("oracle: " + std::to_string(g.size()) + " edges exceeds cap " + std::to_string(edge_cap));
  }
  detail::matching_lister lister(g);
  lister.run();
  return lister.profile();
}

}  // namespace maxmatch
