#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxmatch/blossom.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/graph.hpp"

namespace maxmatch {

// D: vertices missed by some maximum matching. A: vertices outside D with a
// neighbor in D. C: the rest.
struct ge_decomposition {
  vertex_set d;
  vertex_set a;
  vertex_set c;
  std::vector<vertex_set> d_components;  // components of G[D], by smallest member
  std::size_t nu = 0;
  std::vector<std::size_t> component_sizes;
};

inline ge_decomposition decompose(const graph& g) {
  ge_decomposition dec;
  dec.nu = matching_number(g);
  std::vector<vertex> d, a, c;
  std::vector<bool> in_d(g.order(), false);
  for (vertex v = 0; v < g.order(); ++v) {
    if (matching_number(remove_vertices(g, vertex_set({v})).g) == dec.nu) {
      in_d[v] = true;
      d.push_back(v);
    }
  }
  for (vertex v = 0; v < g.order(); ++v) {
    if (in_d[v]) continue;
    bool touches_d = false;
    for (vertex w : g.neighbors(v)) touches_d = touches_d || in_d[w];
    (touches_d ? a : c).push_back(v);
  }
  dec.d = vertex_set(std::move(d));
  dec.a = vertex_set(std::move(a));
  dec.c = vertex_set(std::move(c));

  auto sub = induced_subgraph(g, dec.d);
  for (const vertex_set& local : connected_components(sub.g)) {
    std::vector<vertex> members;
    members.reserve(local.size());
    for (vertex v : local) members.push_back(sub.to_parent[v]);
    dec.component_sizes.push_back(members.size());
    dec.d_components.emplace_back(std::move(members));
  }
  return dec;
}

// Bipartite multigraph between A and the contracted D-components. Parallel
// edges are kept as the list of attachment vertices inside the component.
class auxiliary_bipartite {
 public:
  auxiliary_bipartite() = default;
  auxiliary_bipartite(std::vector<vertex> a_vertices, std::vector<vertex_set> components,
                      std::vector<std::vector<std::vector<vertex>>> attachments)
      : a_vertices_(std::move(a_vertices)), components_(std::move(components)), attachments_(std::move(attachments)) {}

  std::size_t a_count() const { return a_vertices_.size(); }
  std::size_t component_count() const { return components_.size(); }
  const std::vector<vertex>& a_vertices() const { return a_vertices_; }
  const std::vector<vertex_set>& components() const { return components_; }

  std::span<const vertex> attachments(std::size_t j, std::size_t z) const { return attachments_[j][z]; }
  std::size_t multiplicity(std::size_t j, std::size_t z) const { return attachments_[j][z].size(); }

  // Number of H-edges at a-vertex j, counting parallel edges.
  std::size_t degree(std::size_t j) const {
    std::size_t total = 0;
    for (const auto& list : attachments_[j]) total += list.size();
    return total;
  }

  // Distinct components adjacent to a-vertex j.
  std::vector<std::size_t> neighbors(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < components_.size(); ++z)
      if (!attachments_[j][z].empty()) out.push_back(z);
    return out;
  }

 private:
  std::vector<vertex> a_vertices_;
  std::vector<vertex_set> components_;
  std::vector<std::vector<std::vector<vertex>>> attachments_;
};

inline constexpr std::size_t exhaustive_surplus_limit = 20;
inline constexpr std::size_t no_index = static_cast<std::size_t>(-1);

namespace detail {

class component_bits {
 public:
  explicit component_bits(std::size_t r) : words_((r + 63) / 64, 0) {}
  void set(std::size_t z) { words_[z / 64] |= std::uint64_t{1} << (z % 64); }
  void merge(const component_bits& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }
  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Depth-first walk over all nonempty subsets of A carrying the neighborhood
// union; stops at the first subset S with |N(S)| <= |S|.
inline bool find_small_neighborhood(const std::vector<component_bits>& nbrs, std::size_t next,
                                    const component_bits& acc, std::vector<std::size_t>& chosen) {
  for (std::size_t j = next; j < nbrs.size(); ++j) {
    component_bits grown = acc;
    grown.merge(nbrs[j]);
    chosen.push_back(j);
    if (grown.count() <= chosen.size()) return true;
    if (find_small_neighborhood(nbrs, j + 1, grown, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// Kuhn augmenting-path matching of left vertices into components.
inline bool augment_left(std::size_t left, const std::vector<std::vector<std::size_t>>& adj,
                         std::vector<std::size_t>& owner, std::vector<bool>& visited) {
  for (std::size_t z : adj[left]) {
    if (visited[z]) continue;
    visited[z] = true;
    if (owner[z] == no_index || augment_left(owner[z], adj, owner, visited)) {
      owner[z] = left;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Returns a subset S of a-vertex indices with at most |S| neighboring
// components, or nullopt when H has positive surplus from the A side. Exhaustive
// over all subsets up to exhaustive_surplus_limit a-vertices; beyond that the
// equivalent Hall test is used (for every x, A with x doubled must be
// matchable), which still returns a violating set.
inline std::optional<std::vector<std::size_t>> find_surplus_violation(const auxiliary_bipartite& h) {
  const std::size_t k = h.a_count();
  const std::size_t r = h.component_count();
  if (k == 0) return std::nullopt;
  if (k <= exhaustive_surplus_limit) {
    std::vector<detail::component_bits> nbrs(k, detail::component_bits(r));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t z : h.neighbors(j)) nbrs[j].set(z);
    std::vector<std::size_t> chosen;
    if (detail::find_small_neighborhood(nbrs, 0, detail::component_bits(r), chosen)) return chosen;
    return std::nullopt;
  }
  for (std::size_t doubled = 0; doubled < k; ++doubled) {
    std::vector<std::vector<std::size_t>> adj;  // left k+1 copies
    std::vector<std::size_t> source;
    for (std::size_t j = 0; j < k; ++j) {
      adj.push_back(h.neighbors(j));
      source.push_back(j);
    }
    adj.push_back(h.neighbors(doubled));
    source.push_back(doubled);
    std::vector<std::size_t> owner(r, no_index);
    for (std::size_t left = 0; left < adj.size(); ++left) {
      std::vector<bool> visited(r, false);
      if (detail::augment_left(left, adj, owner, visited)) continue;
      // Left vertices reachable by alternating paths from `left` form a Hall
      // violator in the doubled graph; merging copies keeps |N(S)| <= |S|.
      std::vector<bool> reached_left(adj.size(), false);
      std::vector<bool> reached_right(r, false);
      std::vector<std::size_t> stack{left};
      reached_left[left] = true;
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t z : adj[x]) {
          if (reached_right[z]) continue;
          reached_right[z] = true;
          std::size_t y = owner[z];
          if (y != no_index && !reached_left[y]) {
            reached_left[y] = true;
            stack.push_back(y);
          }
        }
      }
      std::vector<bool> in_s(k, false);
      for (std::size_t x = 0; x < adj.size(); ++x)
        if (reached_left[x]) in_s[source[x]] = true;
      std::vector<std::size_t> witness;
      for (std::size_t j = 0; j < k; ++j)
        if (in_s[j]) witness.push_back(j);
      return witness;
    }
  }
  return std::nullopt;
}

inline bool has_positive_surplus(const auxiliary_bipartite& h) { return !find_surplus_violation(h).has_value(); }

namespace detail {

inline std::vector<std::size_t> component_index(const graph& g, const ge_decomposition& dec) {
  std::vector<std::size_t> index(g.order(), no_index);
  for (std::size_t z = 0; z < dec.d_components.size(); ++z)
    for (vertex v : dec.d_components[z]) index[v] = z;
  return index;
}

inline std::string describe_subset(const auxiliary_bipartite& h, const std::vector<std::size_t>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(h.a_vertices()[subset[i]]);
  }
  return out + "}";
}

inline auxiliary_bipartite assemble_auxiliary(const graph& g, const ge_decomposition& dec) {
  const auto index = component_index(g, dec);
  const std::size_t r = dec.d_components.size();
  std::vector<std::vector<std::vector<vertex>>> attachments(dec.a.size(), std::vector<std::vector<vertex>>(r));
  for (std::size_t j = 0; j < dec.a.size(); ++j) {
    for (vertex w : g.neighbors(dec.a.members()[j])) {
      if (index[w] != no_index) attachments[j][index[w]].push_back(w);
    }
  }
  return auxiliary_bipartite(dec.a.members(), dec.d_components, std::move(attachments));
}

}  // namespace detail

// Contract each D-component, drop C and the edges inside A. Throws
// surplus_violation when the surplus condition fails.
inline auxiliary_bipartite build_auxiliary(const graph& g, const ge_decomposition& dec) {
  auxiliary_bipartite h = detail::assemble_auxiliary(g, dec);
  if (auto bad = find_surplus_violation(h)) {
    throw surplus_violation("a-vertices " + detail::describe_subset(h, *bad) +
                            " see too few D-components; decomposition is inconsistent");
  }
  return h;
}

struct structure_report {
  struct clause {
    std::string name;
    bool passed = true;
    std::string witness;  // empty when passed
  };
  std::vector<clause> clauses;

  bool ok() const {
    for (const auto& c : clauses)
      if (!c.passed) return false;
    return true;
  }
  const clause* find(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Checks a decomposition against the structure theorem: vertex partition,
// component list, neighborhood rules, factor-critical D-components, perfect
// matching on C, positive surplus of H and the matching-number identity.
inline structure_report verify_structure(const graph& g, const ge_decomposition& dec) {
  structure_report report;
  auto add = [&](std::string name, bool passed, std::string witness) {
    report.clauses.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  };
  const std::size_t n = g.order();

  // partition
  std::vector<int> label(n, -1);
  std::string partition_witness;
  auto place = [&](const vertex_set& s, int tag) {
    for (vertex v : s) {
      if (v >= n) {
        if (partition_witness.empty()) partition_witness = "vertex " + std::to_string(v) + " out of range";
        continue;
      }
      if (label[v] != -1 && partition_witness.empty())
        partition_witness = "vertex " + std::to_string(v) + " lies in two parts";
      label[v] = tag;
    }
  };
  place(dec.d, 0);
  place(dec.a, 1);
  place(dec.c, 2);
  for (vertex v = 0; v < n && partition_witness.empty(); ++v)
    if (label[v] == -1) partition_witness = "vertex " + std::to_string(v) + " lies in no part";
  const bool partition_ok = partition_witness.empty();
  add("partition", partition_ok, partition_witness);
  if (!partition_ok) return report;

  // components
  {
    std::string witness;
    auto sub = induced_subgraph(g, dec.d);
    std::vector<vertex_set> expected;
    for (const vertex_set& local : connected_components(sub.g)) {
      std::vector<vertex> members;
      for (vertex v : local) members.push_back(sub.to_parent[v]);
      expected.emplace_back(std::move(members));
    }
    if (expected != dec.d_components) {
      witness = "listed D-components differ from the components of G[D]";
    } else if (dec.component_sizes.size() != expected.size()) {
      witness = "component_sizes has wrong length";
    } else {
      for (std::size_t z = 0; z < expected.size() && witness.empty(); ++z)
        if (dec.component_sizes[z] != expected[z].size()) witness = "component " + std::to_string(z) + " size mismatch";
    }
    add("components", witness.empty(), witness);
  }

  // neighbourhood
  {
    std::string witness;
    for (vertex v : dec.a) {
      bool touches = false;
      for (vertex w : g.neighbors(v)) touches = touches || label[w] == 0;
      if (!touches) {
        witness = "A-vertex " + std::to_string(v) + " has no neighbor in D";
        break;
      }
    }
    for (vertex v : dec.c) {
      if (!witness.empty()) break;
      for (vertex w : g.neighbors(v)) {
        if (label[w] == 0) {
          witness = "C-vertex " + std::to_string(v) + " is adjacent to D-vertex " + std::to_string(w);
          break;
        }
      }
    }
    add("neighbourhood", witness.empty(), witness);
  }

  // (i) factor-critical D-components
  {
    std::string witness;
    for (std::size_t z = 0; z < dec.d_components.size() && witness.empty(); ++z) {
      if (!is_factor_critical(induced_subgraph(g, dec.d_components[z]).g))
        witness = "D-component " + std::to_string(z) + " (smallest vertex " +
                  std::to_string(dec.d_components[z].front()) + ") is not factor-critical";
    }
    add("factor-critical components", witness.empty(), witness);
  }

  // (ii) perfect matching on C
  {
    const graph gc = induced_subgraph(g, dec.c).g;
    const bool ok = has_perfect_matching(gc);
    add("perfect matching on C", ok,
        "G[C] has " + std::to_string(gc.order()) + " vertices but matching number " + std::to_string(matching_number(gc)));
  }

  // (iv) positive surplus
  {
    std::string witness;
    auto bad = find_surplus_violation(detail::assemble_auxiliary(g, dec));
    if (bad) witness = "a-vertices " + detail::describe_subset(detail::assemble_auxiliary(g, dec), *bad) +
                       " have too few neighboring components";
    add("positive surplus", !bad.has_value(), witness);
  }

  // (v) matching number identity
  {
    const std::size_t nu = matching_number(g);
    const std::size_t r = dec.d_components.size();
    const bool ok = dec.nu == nu && n + dec.a.size() >= r && 2 * nu == n - r + dec.a.size();
    add("matching number", ok,
        "nu=" + std::to_string(nu) + " recorded=" + std::to_string(dec.nu) + " but (n - r + |A|)/2 with n=" +
            std::to_string(n) + " r=" + std::to_string(r) + " |A|=" + std::to_string(dec.a.size()));
  }
  return report;
}

enum class edge_label { allowed, forbidden };

// Labels aligned with g.edges(): any edge touching D is allowed, edges inside A
// or between A and C are forbidden, and an edge inside C is allowed iff it lies
// in some perfect matching of G[C].
inline std::vector<edge_label> classify_edges(const graph& g, const ge_decomposition& dec) {
  std::vector<int> label(g.order(), 2);
  for (vertex v : dec.d) label[v] = 0;
  for (vertex v : dec.a) label[v] = 1;
  const auto sub_c = induced_subgraph(g, dec.c);
  std::vector<vertex> local(g.order(), no_vertex);
  for (std::size_t i = 0; i < sub_c.to_parent.size(); ++i) local[sub_c.to_parent[i]] = static_cast<vertex>(i);

  std::vector<edge_label> out;
  out.reserve(g.size());
  for (const edge& e : g.edges()) {
    const int lu = label[e.u];
    const int lv = label[e.v];
    if (lu == 0 || lv == 0) {
      out.push_back(edge_label::allowed);
    } else if (lu == 1 || lv == 1) {
      out.push_back(edge_label::forbidden);
    } else {
      const graph rest = remove_vertices(sub_c.g, vertex_set({local[e.u], local[e.v]})).g;
      out.push_back(has_perfect_matching(rest) ? edge_label::allowed : edge_label::forbidden);
    }
  }
  return out;
}

}  // namespace maxmatch
