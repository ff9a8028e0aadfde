#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxmatch/big_count.hpp"
#include "maxmatch/free_trees.hpp"
#include "maxmatch/graph.hpp"
#include "maxmatch/match_count.hpp"

namespace maxmatch {

// Building blocks of the extremal trees, named after their shape: a chain of
// k copies of the gadget C, closed by a leaf (CL), by nothing (C), by a P3
// (CP3), by the variant C_* (Cstar), by F (CF), by F minus a leaf (CFminusL),
// or by F plus a leaf (CFL).
enum class gadget { CL, C, CP3, Cstar, CF, CFminusL, CFL };

inline constexpr std::array<gadget, 7> all_gadgets{gadget::CL,  gadget::C,        gadget::CP3, gadget::Cstar,
                                                    gadget::CF, gadget::CFminusL, gadget::CFL};

inline std::string_view gadget_name(gadget kind) {
  switch (kind) {
    case gadget::CL: return "CL";
    case gadget::C: return "C";
    case gadget::CP3: return "CP3";
    case gadget::Cstar: return "Cstar";
    case gadget::CF: return "CF";
    case gadget::CFminusL: return "CFminusL";
    case gadget::CFL: return "CFL";
  }
  return "?";
}

// Maximum-matching counts of the gadget chains, k >= 1, grown on demand.
//   CL(k)       = 11 CL(k-1) - 9 CL(k-2)     CL(1) = 11, CL(2) = 112
//   C(k)        = 5 CL(k-1) + 3 C(k-1)        C(1) = 8
//   CP3(k)      = 13 CL(k-1) + 6 C(k-1)       CP3(1) = 19
//   Cstar(k)    = 5 C(k-1) + 3 Cstar(k-1)     Cstar(1) = 5
//   CF(k)       = 3 C(k) + 6 CL(k-1)          CF(1) = 30
//   CFminusL(k) = 5 CF(k-1) + 3 CFminusL(k-1) CFminusL(1) = 21
//   CFL(k)      = 5 CF(k-1) + 3 CFL(k-1)      CFL(1) = 21
// Not synchronized; give each thread its own series.
class gadget_series {
 public:
  gadget_series() {
    for (auto& list : values_) list.resize(2);
    at(gadget::CL)[1] = 11;
    at(gadget::C)[1] = 8;
    at(gadget::CP3)[1] = 19;
    at(gadget::Cstar)[1] = 5;
    at(gadget::CF)[1] = 30;
    at(gadget::CFminusL)[1] = 21;
    at(gadget::CFL)[1] = 21;
  }

  const big_count& value(gadget kind, std::size_t k) {
    if (k == 0) throw std::invalid_argument("gadget chains are indexed from k = 1");
    extend(k);
    return at(kind)[k];
  }

  std::size_t computed() const { return values_[0].size() - 1; }

 private:
  std::vector<big_count>& at(gadget kind) { return values_[static_cast<std::size_t>(kind)]; }

  void extend(std::size_t k) {
    while (computed() < k) {
      const std::size_t i = computed() + 1;
      for (auto& list : values_) list.emplace_back();
      auto& cl = at(gadget::CL);
      auto& c = at(gadget::C);
      cl[i] = i == 2 ? big_count(112) : big_count(11 * cl[i - 1] - 9 * cl[i - 2]);
      c[i] = 5 * cl[i - 1] + 3 * c[i - 1];
      at(gadget::CP3)[i] = 13 * cl[i - 1] + 6 * c[i - 1];
      at(gadget::Cstar)[i] = 5 * c[i - 1] + 3 * at(gadget::Cstar)[i - 1];
      auto& cf = at(gadget::CF);
      cf[i] = 3 * c[i] + 6 * cl[i - 1];
      at(gadget::CFminusL)[i] = 5 * cf[i - 1] + 3 * at(gadget::CFminusL)[i - 1];
      at(gadget::CFL)[i] = 5 * cf[i - 1] + 3 * at(gadget::CFL)[i - 1];
    }
  }

  std::array<std::vector<big_count>, 7> values_;
};

inline big_count gadget_value(gadget kind, std::size_t k) {
  gadget_series series;
  return series.value(kind, k);
}

// --- closed forms per residue class ---------------------------------------------

struct gadget_factor {
  gadget kind;
  std::size_t k;
};

struct formula_term {
  big_count coefficient = 1;
  std::vector<gadget_factor> factors;
};

struct opt_tree_index {
  std::size_t n = 0;
  std::size_t residue = 0;  // n mod 7
  std::string regime;
  std::vector<std::size_t> k_values;
  std::optional<big_count> special;  // value taken from the table
  std::vector<formula_term> terms;   // empty unless regime is a closed form
};

namespace detail {

// Values of the extremal count that are tabulated rather than produced by a
// closed form.
inline const std::map<std::size_t, big_count>& exceptional_values() {
  static const std::map<std::size_t, big_count> table{{1, 1},   {2, 1},    {6, 5},
                                                      {10, 21}, {13, 56},  {20, 571},
                                                      {34, 59049}};
  return table;
}

inline const std::map<std::size_t, big_count>& printed_values() {
  static const std::map<std::size_t, big_count> table{
      {7, 8},                                                             // 0 mod 7
      {17, 216},        {24, 2187},       {31, 22140},   {38, 224100},   // 3 mod 7
      {12, 41},         {19, 418},                                       // 5 mod 7
      {9, 15},          {16, 153},        {23, 1560},    {30, 15807},    // 2 mod 7
      {27, 5832},       {41, 597861},     {48, 6052320}, {55, 61268400}, // 6 mod 7
      {62, 620136000},  {69, big_count("6276690000")}};
  return table;
}

class term_builder {
 public:
  explicit term_builder(const std::vector<std::size_t>& k) : k_(k) {}

  // Product of factors, each (kind, index into k_values).
  formula_term operator()(std::initializer_list<std::pair<gadget, std::size_t>> parts, big_count coefficient = 1) const {
    formula_term t;
    t.coefficient = std::move(coefficient);
    for (auto [kind, j] : parts) t.factors.push_back({kind, k_[j]});
    return t;
  }

 private:
  const std::vector<std::size_t>& k_;
};

inline std::vector<std::size_t> floor_indices(std::size_t n, long offset, long step, long divisor, std::size_t count,
                                              std::size_t first_j = 0) {
  std::vector<std::size_t> k;
  for (std::size_t j = first_j; j < first_j + count; ++j) {
    const long numerator = static_cast<long>(n) + offset + step * static_cast<long>(j);
    k.push_back(numerator < 0 ? 0 : static_cast<std::size_t>(numerator / divisor));
  }
  return k;
}

}  // namespace detail

// Which branch applies at order n, its chain lengths and (for closed forms)
// the sum-of-products over gadget values that gives the count.
inline opt_tree_index index_opt_tree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tree order must be at least 1");
  using G = gadget;
  opt_tree_index idx;
  idx.n = n;
  idx.residue = n % 7;

  if (auto it = detail::exceptional_values().find(n); it != detail::exceptional_values().end()) {
    idx.regime = "exceptional";
    idx.special = it->second;
    return idx;
  }
  if (auto it = detail::printed_values().find(n); it != detail::printed_values().end()) {
    idx.regime = "printed";
    idx.special = it->second;
    return idx;
  }
  if (n <= 5) {
    // n = 3, 4, 5: too small for any chain; settled by enumerating the trees.
    idx.regime = "exhaustive";
    return idx;
  }

  auto& k = idx.k_values;
  auto& terms = idx.terms;
  switch (idx.residue) {
    case 1: {  // C^k L
      idx.regime = "chain-CL";
      k = {(n - 1) / 7};
      terms.push_back(detail::term_builder(k)({{G::CL, 0}}));
      break;
    }
    case 4: {  // C^k F
      idx.regime = "chain-CF";
      k = {(n - 4) / 7};
      terms.push_back(detail::term_builder(k)({{G::CF, 0}}));
      break;
    }
    case 0: {  // n >= 14
      idx.regime = "residue-0";
      k = {(n - 7) / 7};
      detail::term_builder t(k);
      terms = {t({{G::CFminusL, 0}}, 3), t({{G::CF, 0}}, 6)};
      break;
    }
    case 3: {  // n >= 45, k_j = floor((n - 17 + 7j) / 28), j = 0..3
      idx.regime = "residue-3";
      k = detail::floor_indices(n, -17, 7, 28, 4);
      detail::term_builder t(k);
      terms = {
          t({{G::CF, 0}, {G::CF, 1}, {G::CF, 2}, {G::CFL, 3}}),
          t({{G::CF, 0}, {G::CF, 1}, {G::CF, 3}, {G::CFminusL, 2}}),
          t({{G::CF, 0}, {G::CF, 2}, {G::CF, 3}, {G::CFminusL, 1}}),
          t({{G::CF, 1}, {G::CF, 2}, {G::CF, 3}, {G::CFminusL, 0}}),
      };
      break;
    }
    case 5: {  // n >= 26, k_j = floor((n - 5 + 7j) / 21), j = 0..2
      idx.regime = "residue-5";
      k = detail::floor_indices(n, -5, 7, 21, 3);
      detail::term_builder t(k);
      terms = {
          t({{G::CL, 1}, {G::CL, 2}, {G::CP3, 0}}),
          t({{G::CL, 0}, {G::CL, 1}, {G::C, 2}}),
          t({{G::CL, 0}, {G::CL, 2}, {G::C, 1}}),
      };
      break;
    }
    case 2: {  // n >= 37; k_0 = max(0, floor((n - 37) / 35)), k_j = floor((n - 2 + 7j) / 35)
      const std::size_t k0 = n >= 72 ? (n - 37) / 35 : 0;
      k = {k0};
      for (std::size_t kj : detail::floor_indices(n, -2, 7, 35, 4, 1)) k.push_back(kj);
      detail::term_builder t(k);
      if (n <= 65) {
        idx.regime = "residue-2-mid";
        terms = {
            t({{G::CP3, 1}, {G::CP3, 2}, {G::CL, 3}, {G::CL, 4}}),
            t({{G::CP3, 1}, {G::CL, 2}, {G::CL, 3}, {G::C, 4}}),
            t({{G::CP3, 1}, {G::CL, 2}, {G::CL, 3}, {G::CL, 4}}),
            t({{G::CP3, 2}, {G::CL, 1}, {G::CL, 4}, {G::C, 3}}),
            t({{G::CP3, 2}, {G::CL, 1}, {G::CL, 3}, {G::CL, 4}}),
            t({{G::CL, 1}, {G::CL, 2}, {G::C, 3}, {G::C, 4}}),
            t({{G::CL, 1}, {G::CL, 2}, {G::CL, 4}, {G::C, 3}}),
            t({{G::CL, 1}, {G::CL, 2}, {G::CL, 3}, {G::C, 4}}),
        };
      } else {
        idx.regime = "residue-2-large";
        terms = {
            t({{G::CL, 0}, {G::CL, 3}, {G::CL, 4}, {G::CP3, 1}, {G::CP3, 2}}),
            t({{G::CP3, 1}, {G::CL, 0}, {G::CL, 2}, {G::CL, 3}, {G::C, 4}}),
            t({{G::CP3, 1}, {G::CL, 2}, {G::CL, 3}, {G::CL, 4}, {G::C, 0}}),
            t({{G::CP3, 2}, {G::CL, 0}, {G::CL, 1}, {G::CL, 4}, {G::C, 3}}),
            t({{G::CP3, 2}, {G::CL, 1}, {G::CL, 3}, {G::CL, 4}, {G::C, 0}}),
            t({{G::CL, 0}, {G::CL, 1}, {G::CL, 2}, {G::C, 3}, {G::C, 4}}),
            t({{G::C, 0}, {G::C, 3}, {G::CL, 1}, {G::CL, 2}, {G::CL, 4}}),
            t({{G::C, 0}, {G::C, 4}, {G::CL, 1}, {G::CL, 2}, {G::CL, 3}}),
            t({{G::Cstar, 0}, {G::CL, 1}, {G::CL, 2}, {G::CL, 3}, {G::CL, 4}}),
        };
      }
      break;
    }
    case 6: {  // n >= 76, k_j = floor((n - 27 + 7j) / 49), j = 0..6
      idx.regime = "residue-6";
      k = detail::floor_indices(n, -27, 7, 49, 7);
      detail::term_builder t(k);
      auto f = [](std::size_t j) { return std::pair{G::CF, j}; };
      auto fl = [](std::size_t j) { return std::pair{G::CFL, j}; };
      auto fm = [](std::size_t j) { return std::pair{G::CFminusL, j}; };
      // Leading chain closed by a leaf.
      terms = {
          t({{G::CL, 0}, f(1), f(3), f(4), f(6), fl(2), fl(5)}),
          t({{G::CL, 0}, fl(2), f(1), f(4), f(5), f(6), fm(3)}),
          t({{G::CL, 0}, fl(2), f(3), f(4), f(5), f(6), fm(1)}),
          t({{G::CL, 0}, fl(5), f(1), f(2), f(3), f(6), fm(4)}),
          t({{G::CL, 0}, fl(5), f(1), f(2), f(3), f(4), fm(6)}),
          t({{G::CL, 0}, f(1), f(2), f(5), f(6), fm(3), fm(4)}),
          t({{G::CL, 0}, f(1), f(2), f(4), f(5), fm(3), fm(6)}),
          t({{G::CL, 0}, f(2), f(3), f(5), f(6), fm(1), fm(4)}),
          t({{G::CL, 0}, f(2), f(3), f(4), f(5), fm(1), fm(6)}),
      };
      // Leading chain left open.
      const std::vector<formula_term> open = {
          t({{G::C, 0}, f(1), f(2), f(3), f(4), f(6), fl(5)}),
          t({{G::C, 0}, f(1), f(2), f(4), f(5), f(6), fm(3)}),
          t({{G::C, 0}, f(2), f(3), f(4), f(5), f(6), fm(1)}),
          t({{G::C, 0}, f(1), f(3), f(4), f(5), f(6), fl(2)}),
          t({{G::C, 0}, f(1), f(2), f(3), f(5), f(6), fm(4)}),
          t({{G::C, 0}, f(1), f(2), f(3), f(4), f(5), fm(6)}),
          t({{G::Cstar, 0}, f(1), f(2), f(3), f(4), f(5), f(6)}),
      };
      terms.insert(terms.end(), open.begin(), open.end());
      break;
    }
  }
  return idx;
}

inline big_count evaluate_term(const formula_term& term, gadget_series& series) {
  big_count product = term.coefficient;
  for (const auto& f : term.factors) product *= series.value(f.kind, f.k);
  return product;
}

struct extremal_result {
  big_count max = 0;
  std::vector<graph> witnesses;  // every tree attaining the maximum
};

// Exhaustive check: the largest number of maximum matchings over all free trees
// of order n, with every tree attaining it.
inline extremal_result extremal_search(std::size_t n, std::size_t tree_cap = default_tree_cap,
                                       const count_limits& limits = {}) {
  extremal_result result;
  for_each_free_tree(
      n,
      [&](const graph& tree) {
        big_count value = count_maximum_matchings(tree, limits).total;
        if (value > result.max) {
          result.max = value;
          result.witnesses.clear();
        }
        if (value == result.max) result.witnesses.push_back(tree);
      },
      tree_cap);
  return result;
}

inline big_count opt_tree_count(const opt_tree_index& idx) {
  if (idx.special) return *idx.special;
  if (idx.regime == "exhaustive") return extremal_search(idx.n).max;
  gadget_series series;
  big_count total = 0;
  for (const auto& term : idx.terms) total += evaluate_term(term, series);
  return total;
}

inline big_count opt_tree_count(std::size_t n) { return opt_tree_count(index_opt_tree(n)); }

struct consistency_line {
  std::size_t n = 0;
  big_count formula;
  big_count search;
  bool match() const { return formula == search; }

  std::string text() const {
    if (match()) return "n=" + std::to_string(n) + " MATCH " + to_decimal(search);
    return "n=" + std::to_string(n) + " MISMATCH formula=" + to_decimal(formula) + " search=" + to_decimal(search);
  }
};

// Compares opt_tree_count against extremal_search for 4 <= n <= n_max. Lines
// are reported as found; nothing is reconciled.
inline std::vector<consistency_line> consistency_report(std::size_t n_max, std::size_t tree_cap = default_tree_cap,
                                                        const count_limits& limits = {}) {
  if (n_max > tree_cap) {
    throw cap_exceeded("consistency report up to n=" + std::to_string(n_max) + " exceeds tree cap " +
                       std::to_string(tree_cap));
  }
  std::vector<consistency_line> lines;
  for (std::size_t n = 4; n <= n_max; ++n) {
    lines.push_back({n, opt_tree_count(n), extremal_search(n, tree_cap, limits).max});
  }
  return lines;
}

}  // namespace maxmatch
