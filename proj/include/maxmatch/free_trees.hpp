#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxmatch/errors.hpp"
#include "maxmatch/graph.hpp"

namespace maxmatch {

inline constexpr std::size_t default_tree_cap = 16;

// Streams one representative of every isomorphism class of free trees on n
// vertices, without storing previously emitted trees.
//
// Trees are encoded as level sequences of a rooted tree (depth of each vertex
// in preorder). The stream walks rooted trees in decreasing lexicographic order
// (Beyer-Hedetniemi successor) and keeps only the sequences that are canonical
// for the free tree: rooted at the center, the first root subtree no taller,
// and no larger, than the remainder (Wright-Richmond-Odlyzko-McKay), jumping
// over non-canonical runs.
class free_tree_generator {
 public:
  explicit free_tree_generator(std::size_t n, std::size_t cap = default_tree_cap) : n_(n) {
    if (n == 0) throw graph_error("free trees need at least one vertex");
    if (n > cap) {
      throw cap_exceeded("free-tree enumeration at n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    if (n == 1) {
      single_pending_ = true;
      return;
    }
    // Path rooted at its center.
    for (std::size_t i = 0; i <= n / 2; ++i) layout_.push_back(static_cast<int>(i));
    for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout_.push_back(static_cast<int>(i));
    active_ = true;
  }

  std::optional<graph> next() {
    if (n_ == 1) {
      if (!single_pending_) return std::nullopt;
      single_pending_ = false;
      return graph(1, {});
    }
    if (!active_) return std::nullopt;
    make_canonical();
    graph tree = to_graph(layout_);
    active_ = next_rooted(std::nullopt);
    return tree;
  }

  std::size_t order() const { return n_; }

 private:
  using layout = std::vector<int>;

  // Splits off the first subtree of the root: (subtree levels shifted up by
  // one, remaining tree).
  static std::pair<layout, layout> split(const layout& seq) {
    std::size_t second_child = seq.size();
    bool seen_first = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] != 1) continue;
      if (seen_first) {
        second_child = i;
        break;
      }
      seen_first = true;
    }
    layout left;
    for (std::size_t i = 1; i < second_child; ++i) left.push_back(seq[i] - 1);
    layout rest{0};
    for (std::size_t i = second_child; i < seq.size(); ++i) rest.push_back(seq[i]);
    return {std::move(left), std::move(rest)};
  }

  // Successor in the rooted-tree order; p is the position to vary (default:
  // last vertex deeper than level 1). Returns false when exhausted.
  bool next_rooted(std::optional<std::size_t> fixed_p) {
    std::size_t p;
    if (fixed_p) {
      p = *fixed_p;
    } else {
      p = layout_.size() - 1;
      while (layout_[p] == 1) --p;
    }
    if (p == 0) return false;
    std::size_t q = p - 1;
    while (layout_[q] != layout_[p] - 1) --q;
    for (std::size_t i = p; i < layout_.size(); ++i) layout_[i] = layout_[i - p + q];
    return true;
  }

  void make_canonical() {
    auto [left, rest] = split(layout_);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return;

    const std::size_t p = left.size();
    const bool deep = layout_[p] > 2;
    next_rooted(p);
    if (deep) {
      auto [new_left, new_rest] = split(layout_);
      const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
      const std::size_t suffix = static_cast<std::size_t>(new_left_height) + 1;
      for (std::size_t i = 0; i < suffix; ++i) layout_[layout_.size() - suffix + i] = static_cast<int>(i) + 1;
    }
  }

  static graph to_graph(const layout& seq) {
    std::vector<std::pair<vertex, vertex>> pairs;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!stack.empty()) {
        while (seq[stack.back()] >= seq[i]) stack.pop_back();
        pairs.emplace_back(static_cast<vertex>(stack.back()), static_cast<vertex>(i));
      }
      stack.push_back(i);
    }
    return graph(seq.size(), std::move(pairs));
  }

  std::size_t n_;
  layout layout_;
  bool active_ = false;
  bool single_pending_ = false;
};

template <class Visitor>
void for_each_free_tree(std::size_t n, Visitor&& visit, std::size_t cap = default_tree_cap) {
  free_tree_generator stream(n, cap);
  while (auto tree = stream.next()) visit(*tree);
}

inline std::vector<graph> enumerate_free_trees(std::size_t n, std::size_t cap = default_tree_cap) {
  std::vector<graph> out;
  for_each_free_tree(n, [&](const graph& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace maxmatch
