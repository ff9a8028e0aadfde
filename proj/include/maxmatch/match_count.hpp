#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "maxmatch/big_count.hpp"
#include "maxmatch/blossom.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/gallai_edmonds.hpp"
#include "maxmatch/graph.hpp"

namespace maxmatch {

inline constexpr std::size_t bitmask_width = 64;

struct count_limits {
  // Largest connected piece handed to the exponential counters (each
  // D-component, each component of G[C], each component passed to
  // count_perfect / count_k_matchings). At most 64.
  std::size_t component_cap = 24;
};

namespace detail {

inline void require_within(std::size_t order, const count_limits& limits, const char* what) {
  const std::size_t cap = std::min(limits.component_cap, bitmask_width);
  if (order > cap) {
    throw cap_exceeded(std::string(what) + " has " + std::to_string(order) + " vertices, above the component cap of " +
                       std::to_string(cap));
  }
}

// Vertices relabeled in BFS order so that the lowest unmatched vertex stays
// close to the matched frontier, which keeps the memo small on sparse inputs.
class bitmask_graph {
 public:
  explicit bitmask_graph(const graph& g) : n_(g.order()), position_(g.order(), no_vertex), adjacency_(g.order(), 0) {
    std::vector<vertex> order;
    order.reserve(n_);
    for (vertex root = 0; root < n_; ++root) {
      if (position_[root] != no_vertex) continue;
      std::size_t head = order.size();
      position_[root] = static_cast<vertex>(order.size());
      order.push_back(root);
      while (head < order.size()) {
        vertex v = order[head++];
        for (vertex w : g.neighbors(v)) {
          if (position_[w] != no_vertex) continue;
          position_[w] = static_cast<vertex>(order.size());
          order.push_back(w);
        }
      }
    }
    for (const edge& e : g.edges()) {
      adjacency_[position_[e.u]] |= std::uint64_t{1} << position_[e.v];
      adjacency_[position_[e.v]] |= std::uint64_t{1} << position_[e.u];
    }
  }

  std::size_t order() const { return n_; }
  std::uint64_t full() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }
  std::uint64_t bit(vertex original) const { return std::uint64_t{1} << position_[original]; }
  std::uint64_t neighbors(unsigned local) const { return adjacency_[local]; }

 private:
  std::size_t n_;
  std::vector<vertex> position_;
  std::vector<std::uint64_t> adjacency_;
};

}  // namespace detail

// Memoized perfect-matching counter over vertex subsets of one graph: match
// the lowest remaining vertex to each remaining neighbor and recurse. The memo
// is shared across queries, so all G - v counts of a component cost little more
// than one.
class perfect_matching_counter {
 public:
  explicit perfect_matching_counter(const graph& g) : bits_(g) {
    if (g.order() > bitmask_width) throw cap_exceeded("perfect-matching counter supports at most 64 vertices");
  }

  big_count count_all() { return solve(bits_.full()); }
  big_count count_without(vertex v) { return solve(bits_.full() & ~bits_.bit(v)); }

 private:
  big_count solve(std::uint64_t mask) {
    if (mask == 0) return 1;
    if (std::popcount(mask) % 2 != 0) return 0;
    const unsigned u = static_cast<unsigned>(std::countr_zero(mask));
    const std::uint64_t rest = mask & (mask - 1);
    std::uint64_t options = bits_.neighbors(u) & rest;
    if (options == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    big_count total = 0;
    while (options) {
      const std::uint64_t w = options & (~options + 1);
      options ^= w;
      total += solve(rest & ~w);
    }
    memo_.emplace(mask, total);
    return total;
  }

  detail::bitmask_graph bits_;
  std::unordered_map<std::uint64_t, big_count> memo_;
};

// Number of perfect matchings; 1 for the empty graph, 0 for odd order.
inline big_count count_perfect(const graph& g, const count_limits& limits = {}) {
  const auto components = connected_components(g);
  for (const auto& comp : components)
    if (comp.size() % 2 != 0) return 0;
  for (const auto& comp : components) detail::require_within(comp.size(), limits, "perfect-matching component");
  big_count product = 1;
  for (const auto& comp : components) {
    if (product == 0) break;
    perfect_matching_counter counter(induced_subgraph(g, comp).g);
    product *= counter.count_all();
  }
  return product;
}

namespace detail {

using count_vector = std::vector<big_count>;

inline count_vector convolve(const count_vector& a, const count_vector& b) {
  count_vector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// k-matching counts of one graph by the same lowest-vertex recursion, with the
// lowest vertex also allowed to stay unmatched.
class matching_count_table {
 public:
  explicit matching_count_table(const graph& g) : bits_(g) {}
  count_vector all() { return solve(bits_.full()); }

 private:
  count_vector solve(std::uint64_t mask) {
    if (mask == 0) return {1};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const unsigned u = static_cast<unsigned>(std::countr_zero(mask));
    const std::uint64_t rest = mask & (mask - 1);
    count_vector total = solve(rest);
    std::uint64_t options = bits_.neighbors(u) & rest;
    while (options) {
      const std::uint64_t w = options & (~options + 1);
      options ^= w;
      const count_vector with = solve(rest & ~w);
      if (total.size() < with.size() + 1) total.resize(with.size() + 1, 0);
      for (std::size_t k = 0; k < with.size(); ++k) total[k + 1] += with[k];
    }
    memo_.emplace(mask, total);
    return total;
  }

  bitmask_graph bits_;
  std::unordered_map<std::uint64_t, count_vector> memo_;
};

}  // namespace detail

// Phi_0..Phi_nu: number of matchings of each size.
inline std::vector<big_count> matching_counts(const graph& g, const count_limits& limits = {}) {
  const auto components = connected_components(g);
  for (const auto& comp : components) detail::require_within(comp.size(), limits, "k-matching component");
  detail::count_vector product{1};
  for (const auto& comp : components) {
    detail::matching_count_table table(induced_subgraph(g, comp).g);
    product = detail::convolve(product, table.all());
  }
  while (product.size() > 1 && product.back() == 0) product.pop_back();
  return product;
}

inline big_count count_k_matchings(const graph& g, std::size_t k, const count_limits& limits = {}) {
  const auto counts = matching_counts(g, limits);
  return k < counts.size() ? counts[k] : big_count(0);
}

struct near_perfect_counts {
  big_count npm;                     // sum over v of M_pm(G - v)
  std::vector<big_count> pm_minus;   // pm_minus[v] = M_pm(G - v)
};

inline near_perfect_counts count_near_perfect(const graph& g, const count_limits& limits = {}) {
  detail::require_within(g.order(), limits, "near-perfect component");
  near_perfect_counts out;
  out.pm_minus.reserve(g.order());
  perfect_matching_counter counter(g);
  for (vertex v = 0; v < g.order(); ++v) {
    out.pm_minus.push_back(counter.count_without(v));
    out.npm += out.pm_minus.back();
  }
  return out;
}

// For factor-critical g every maximum matching is near-perfect, so the count is
// the sum of M_pm(G - v) over all vertices.
inline big_count count_max_factor_critical(const graph& g, const count_limits& limits = {}) {
  if (!is_factor_critical(g)) throw not_factor_critical("graph on " + std::to_string(g.order()) + " vertices is not factor-critical");
  return count_near_perfect(g, limits).npm;
}

// Sums, over all A-saturating assignments of H (each a-vertex picks a distinct
// adjacent component), the product of attach(j, z) for the chosen pairs times
// idle(z) for every component left unchosen.
//
// H splits into connected pieces that are summed independently; inside a piece
// a-vertices are taken in ascending order and the partial sum is memoized on
// (position, set of used components).
template <class AttachWeight, class IdleWeight>
big_count sum_over_assignments(const auxiliary_bipartite& h, AttachWeight&& attach, IdleWeight&& idle) {
  const std::size_t k = h.a_count();
  const std::size_t r = h.component_count();

  // Union-find over a-vertices [0,k) and components [k, k+r).
  std::vector<std::size_t> parent(k + r);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::size_t>> nbrs(k);
  for (std::size_t j = 0; j < k; ++j) {
    nbrs[j] = h.neighbors(j);
    for (std::size_t z : nbrs[j]) parent[find(j)] = find(k + z);
  }

  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> pieces;
  for (std::size_t j = 0; j < k; ++j) pieces[find(j)].first.push_back(j);
  for (std::size_t z = 0; z < r; ++z) pieces[find(k + z)].second.push_back(z);

  big_count total = 1;
  for (const auto& [root, piece] : pieces) {
    const auto& a_list = piece.first;
    const auto& comps = piece.second;
    if (a_list.empty()) {
      for (std::size_t z : comps) total *= idle(z);
      continue;
    }
    std::vector<std::size_t> local(r, no_index);
    for (std::size_t i = 0; i < comps.size(); ++i) local[comps[i]] = i;
    const std::size_t words = (comps.size() + 63) / 64;
    using key = std::vector<std::uint64_t>;
    std::vector<std::map<key, big_count>> memo(a_list.size());

    auto solve = [&](auto&& self, std::size_t pos, key& used) -> big_count {
      if (pos == a_list.size()) {
        big_count rest = 1;
        for (std::size_t i = 0; i < comps.size(); ++i)
          if (!(used[i / 64] >> (i % 64) & 1U)) rest *= idle(comps[i]);
        return rest;
      }
      if (auto it = memo[pos].find(used); it != memo[pos].end()) return it->second;
      const std::size_t j = a_list[pos];
      big_count sum = 0;
      for (std::size_t z : nbrs[j]) {
        const std::size_t i = local[z];
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (used[i / 64] & bit) continue;
        big_count weight = attach(j, z);
        if (weight == 0) continue;
        used[i / 64] |= bit;
        sum += weight * self(self, pos + 1, used);
        used[i / 64] &= ~bit;
      }
      memo[pos].emplace(used, sum);
      return sum;
    };
    key used(words, 0);
    total *= solve(solve, 0, used);
    if (total == 0) break;
  }
  return total;
}

// Number of A-saturating matchings of the multigraph H (parallel edges count
// separately).
inline big_count count_aux_max(const auxiliary_bipartite& h) {
  if (auto bad = find_surplus_violation(h)) {
    throw surplus_violation("auxiliary graph lacks positive surplus at " + detail::describe_subset(h, *bad));
  }
  return sum_over_assignments(
      h, [&](std::size_t j, std::size_t z) { return big_count(h.multiplicity(j, z)); },
      [](std::size_t) { return big_count(1); });
}

struct component_summary {
  std::size_t size = 0;
  big_count npm;
};

struct count_breakdown {
  big_count m_pm_c = 1;     // perfect matchings of G[C]
  big_count aux_max = 1;    // A-saturating matchings of H
  big_count ad_factor = 1;  // maximum matchings of the subgraph induced by A and D
  std::vector<component_summary> components;
};

struct max_matching_count {
  big_count total;
  count_breakdown breakdown;
};

// Number of maximum matchings of g:
//   M_pm(G[C]) * sum over A-saturating assignments of H of
//     prod_{component B matched at w} M_pm(B - w) * prod_{B untouched} sum_v M_pm(B - v).
inline max_matching_count count_maximum_matchings(const graph& g, const count_limits& limits = {}) {
  max_matching_count out;
  if (g.order() <= 1) {
    out.total = 1;
    if (g.order() == 1) out.breakdown.components.push_back({1, 1});
    return out;
  }
  const ge_decomposition dec = decompose(g);
  const auxiliary_bipartite h = build_auxiliary(g, dec);

  for (const auto& comp : dec.d_components) detail::require_within(comp.size(), limits, "D-component");
  const graph gc = induced_subgraph(g, dec.c).g;
  for (const auto& comp : connected_components(gc)) detail::require_within(comp.size(), limits, "component of G[C]");

  // pm_minus per parent vertex of D
  std::vector<big_count> pm_minus(g.order(), 0);
  std::vector<big_count> npm;
  npm.reserve(dec.d_components.size());
  for (const auto& comp : dec.d_components) {
    const auto sub = induced_subgraph(g, comp);
    near_perfect_counts counts = count_near_perfect(sub.g, limits);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) pm_minus[sub.to_parent[i]] = counts.pm_minus[i];
    out.breakdown.components.push_back({comp.size(), counts.npm});
    npm.push_back(std::move(counts.npm));
  }

  out.breakdown.m_pm_c = count_perfect(gc, limits);
  out.breakdown.ad_factor = sum_over_assignments(
      h,
      [&](std::size_t j, std::size_t z) {
        big_count weight = 0;
        for (vertex w : h.attachments(j, z)) weight += pm_minus[w];
        return weight;
      },
      [&](std::size_t z) { return npm[z]; });
  out.breakdown.aux_max = sum_over_assignments(
      h, [&](std::size_t j, std::size_t z) { return big_count(h.multiplicity(j, z)); },
      [](std::size_t) { return big_count(1); });
  out.total = out.breakdown.m_pm_c * out.breakdown.ad_factor;
  return out;
}

}  // namespace maxmatch
