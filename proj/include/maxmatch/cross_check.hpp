#pragma once

#include <string>
#include <vector>

#include "maxmatch/blossom.hpp"
#include "maxmatch/gallai_edmonds.hpp"
#include "maxmatch/match_count.hpp"
#include "maxmatch/oracle.hpp"

namespace maxmatch {

struct check_report {
  struct line {
    std::string name;
    bool ok = true;
    std::string detail;
  };
  std::vector<line> lines;

  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
  std::vector<line> failures() const {
    std::vector<line> out;
    for (const auto& l : lines)
      if (!l.ok) out.push_back(l);
    return out;
  }
};

// Every cross-module identity on one graph: oracle vs blossom, oracle vs the
// decomposition and edge labels, oracle vs the k-matching table, and the
// decomposition pipeline vs both counters.
inline check_report cross_check(const graph& g, const count_limits& limits = {}, const oracle_limits& oracle = {}) {
  check_report report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.lines.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };

  const matching_profile profile = enumerate_profile(g, oracle);
  const matching m = maximum_matching(g);
  add("blossom size", m.is_valid_for(g) && m.size() == profile.nu,
      "blossom " + std::to_string(m.size()) + " vs oracle " + std::to_string(profile.nu));

  const ge_decomposition dec = decompose(g);
  const structure_report structure = verify_structure(g, dec);
  std::string broken;
  for (const auto& c : structure.clauses)
    if (!c.passed) broken += c.name + ": " + c.witness + "; ";
  add("structure", structure.ok(), broken);
  add("D equals missed vertices", dec.d == profile.missed_vertices, "decomposition D differs from oracle");

  const auto labels = classify_edges(g, dec);
  std::vector<edge> allowed;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == edge_label::allowed) allowed.push_back(g.edges()[i]);
  add("allowed edges", allowed == profile.max_edges, "edge labels differ from oracle");

  const auto phi = matching_counts(g, limits);
  add("k-matching table", phi == profile.phi, "Phi_k table differs from oracle");

  const max_matching_count counted = count_maximum_matchings(g, limits);
  const big_count& truth = profile.phi[profile.nu];
  add("maximum matching count", counted.total == truth,
      "pipeline " + to_decimal(counted.total) + " vs oracle " + to_decimal(truth));
  add("count via k-matchings", count_k_matchings(g, profile.nu, limits) == truth, "Phi_nu differs from oracle");
  add("perfect matching count", (count_perfect(g, limits) > 0) == (2 * profile.nu == g.order()),
      "perfect-matching existence disagrees with nu");
  return report;
}

}  // namespace maxmatch
