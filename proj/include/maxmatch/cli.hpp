#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "maxmatch/blossom.hpp"
#include "maxmatch/cross_check.hpp"
#include "maxmatch/free_trees.hpp"
#include "maxmatch/gallai_edmonds.hpp"
#include "maxmatch/graph.hpp"
#include "maxmatch/match_count.hpp"
#include "maxmatch/opt_trees.hpp"
#include "maxmatch/oracle.hpp"
#include "maxmatch/random_graphs.hpp"

namespace maxmatch::cli {

enum exit_code : int { ok = 0, mismatch = 1, usage = 2, over_cap = 3 };

struct run_config {
  std::string subcommand;
  std::string input;
  std::size_t cap_component = 24;
  std::size_t cap_oracle = 16;
  std::size_t cap_oracle_edges = 24;
  std::size_t cap_trees = default_tree_cap;
  std::uint64_t seed = 0;
  std::string format = "json";

  bool oracle_check = false;
  std::optional<std::size_t> opt_n;
  std::optional<std::size_t> opt_check;
  std::size_t gen_n = 0;
  std::optional<std::size_t> check_trees;
  std::optional<std::size_t> check_random;
  std::size_t check_max_n = 10;

  count_limits counting() const { return {cap_component}; }
  oracle_limits oracle() const { return {cap_oracle, cap_oracle_edges}; }
  bool json() const { return format == "json"; }
};

using json = nlohmann::ordered_json;

namespace detail {

inline graph load_graph(const std::string& source, std::istream& in) {
  if (source == "-") return parse_graph(in);
  static const std::regex inline_spec(R"((path|cycle|star|complete):(\d+))");
  std::smatch m;
  if (!std::filesystem::exists(source) && std::regex_match(source, m, inline_spec)) {
    const std::string kind = m[1];
    const std::size_t n = std::stoul(m[2]);
    if (kind == "path") return make_path(n);
    if (kind == "cycle") return make_cycle(n);
    if (kind == "star") return make_star(n);
    return make_complete(n);
  }
  std::ifstream file(source);
  if (!file) throw graph_error("cannot open input '" + source + "'");
  return parse_graph(file);
}

inline json vertex_list(const vertex_set& s) {
  json out = json::array();
  for (vertex v : s) out.push_back(v);
  return out;
}

inline json edge_list(const std::vector<edge>& edges) {
  json out = json::array();
  for (const edge& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

inline std::string join(const vertex_set& s) {
  std::string out;
  for (vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

inline std::string one_line(const graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + ":";
  for (const edge& e : g.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

inline int do_count(const run_config& cfg, std::istream& in, std::ostream& out) {
  const graph g = load_graph(cfg.input, in);
  const max_matching_count result = count_maximum_matchings(g, cfg.counting());
  const std::size_t nu = matching_number(g);
  if (cfg.json()) {
    json components = json::array();
    for (const auto& c : result.breakdown.components)
      components.push_back({{"size", c.size}, {"npm", to_decimal(c.npm)}});
    json doc = {{"n", g.order()},
                {"m", g.size()},
                {"nu", nu},
                {"m_max", to_decimal(result.total)},
                {"breakdown",
                 {{"m_pm_C", to_decimal(result.breakdown.m_pm_c)},
                  {"aux_max", to_decimal(result.breakdown.aux_max)},
                  {"components", components}}}};
    out << doc.dump(2) << "\n";
  } else {
    out << "n " << g.order() << "\nm " << g.size() << "\nnu " << nu << "\nm_max " << result.total << "\nm_pm_C "
        << result.breakdown.m_pm_c << "\naux_max " << result.breakdown.aux_max << "\n";
    for (const auto& c : result.breakdown.components) out << "component size " << c.size << " npm " << c.npm << "\n";
  }
  return ok;
}

inline int do_decompose(const run_config& cfg, std::istream& in, std::ostream& out) {
  const graph g = load_graph(cfg.input, in);
  const ge_decomposition dec = decompose(g);
  if (cfg.json()) {
    json components = json::array();
    for (const auto& c : dec.d_components) components.push_back(vertex_list(c));
    json doc = {{"D", vertex_list(dec.d)},
                {"A", vertex_list(dec.a)},
                {"C", vertex_list(dec.c)},
                {"components", components},
                {"nu", dec.nu}};
    out << doc.dump(2) << "\n";
  } else {
    out << "D: " << join(dec.d) << "\nA: " << join(dec.a) << "\nC: " << join(dec.c) << "\n";
    for (const auto& c : dec.d_components) out << "component: " << join(c) << "\n";
    out << "nu " << dec.nu << "\n";
  }
  return ok;
}

inline json failures_json(const check_report& report) {
  json out = json::array();
  for (const auto& f : report.failures()) out.push_back({{"check", f.name}, {"detail", f.detail}});
  return out;
}

inline int do_oracle(const run_config& cfg, std::istream& in, std::ostream& out) {
  const graph g = load_graph(cfg.input, in);
  const matching_profile p = enumerate_profile(g, cfg.oracle());
  std::optional<check_report> report;
  if (cfg.oracle_check) report = cross_check(g, cfg.counting(), cfg.oracle());
  if (cfg.json()) {
    json phi = json::array();
    for (const auto& x : p.phi) phi.push_back(to_decimal(x));
    json doc = {{"n", g.order()},
                {"m", g.size()},
                {"nu", p.nu},
                {"phi", phi},
                {"m_max", to_decimal(p.phi[p.nu])},
                {"missed", vertex_list(p.missed_vertices)},
                {"allowed_edges", edge_list(p.max_edges)}};
    if (report) doc["check"] = {{"ok", report->ok()}, {"failures", failures_json(*report)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "nu " << p.nu << "\nphi";
    for (const auto& x : p.phi) out << " " << x;
    out << "\nm_max " << p.phi[p.nu] << "\nmissed: " << join(p.missed_vertices) << "\n";
    if (report) {
      for (const auto& l : report->lines) out << (l.ok ? "ok   " : "FAIL ") << l.name << (l.ok ? "" : ": " + l.detail) << "\n";
    }
  }
  return report && !report->ok() ? mismatch : ok;
}

inline int do_opt_tree(const run_config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.opt_check) {
    const auto lines = consistency_report(*cfg.opt_check, cfg.cap_trees, cfg.counting());
    bool hard_failure = false;
    json rows = json::array();
    for (const auto& l : lines) {
      const opt_tree_index idx = index_opt_tree(l.n);
      // Published values at small n are firm; anything else is a diagnostic.
      const bool firm = l.n <= 13;
      if (firm && !l.match()) hard_failure = true;
      if (cfg.json()) {
        rows.push_back({{"n", l.n},
                        {"regime", idx.regime},
                        {"formula", to_decimal(l.formula)},
                        {"search", to_decimal(l.search)},
                        {"status", l.match() ? "MATCH" : "MISMATCH"}});
      } else {
        out << l.text() << "\n";
      }
    }
    if (cfg.json()) out << json{{"check_max", *cfg.opt_check}, {"ok", !hard_failure}, {"lines", rows}}.dump(2) << "\n";
    if (hard_failure) err << "opt-tree: a published value disagrees with the exhaustive search\n";
    return hard_failure ? mismatch : ok;
  }
  if (!cfg.opt_n) {
    err << "opt-tree: give n or --check N\n";
    return usage;
  }
  const opt_tree_index idx = index_opt_tree(*cfg.opt_n);
  const big_count value = opt_tree_count(idx);
  if (cfg.json()) {
    out << json{{"n", idx.n}, {"residue", idx.residue}, {"regime", idx.regime}, {"value", to_decimal(value)}}.dump(2)
        << "\n";
  } else {
    out << "n " << idx.n << "\nresidue " << idx.residue << "\nregime " << idx.regime << "\nvalue " << value << "\n";
  }
  return ok;
}

inline int do_gen_trees(const run_config& cfg, std::ostream& out) {
  const auto trees = enumerate_free_trees(cfg.gen_n, cfg.cap_trees);
  if (cfg.json()) {
    json list = json::array();
    for (const auto& t : trees) list.push_back(edge_list(t.edges()));
    out << json{{"n", cfg.gen_n}, {"count", trees.size()}, {"trees", list}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < trees.size(); ++i) out << "# tree " << i << "\n" << serialize_graph(trees[i]);
  }
  return ok;
}

inline int do_check(const run_config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.input.empty() && !cfg.check_trees && !cfg.check_random) {
    err << "check: give an input graph, --trees N or --random COUNT\n";
    return usage;
  }
  std::size_t checked = 0;
  json failures = json::array();
  std::vector<std::string> failure_text;
  auto run_one = [&](const graph& g, const std::string& origin) {
    const check_report report = cross_check(g, cfg.counting(), cfg.oracle());
    ++checked;
    for (const auto& f : report.failures()) {
      failures.push_back({{"origin", origin}, {"graph", one_line(g)}, {"check", f.name}, {"detail", f.detail}});
      failure_text.push_back(origin + " [" + one_line(g) + "] " + f.name + ": " + f.detail);
    }
  };

  if (!cfg.input.empty()) run_one(load_graph(cfg.input, in), cfg.input);
  if (cfg.check_trees) {
    for (std::size_t n = 1; n <= *cfg.check_trees; ++n) {
      std::size_t i = 0;
      for_each_free_tree(
          n, [&](const graph& t) { run_one(t, "tree n=" + std::to_string(n) + " #" + std::to_string(i++)); },
          cfg.cap_trees);
    }
  }
  if (cfg.check_random) {
    random_engine rng(cfg.seed);
    for (std::size_t i = 0; i < *cfg.check_random; ++i) {
      const std::size_t n = uniform_index(rng, 1, cfg.check_max_n);
      const std::size_t edge_bound = std::min(n * (n - 1) / 2, cfg.cap_oracle_edges);
      const std::size_t m = uniform_index(rng, 0, edge_bound);
      run_one(random_gnm(n, m, rng), "random #" + std::to_string(i));
    }
  }

  if (cfg.json()) {
    out << json{{"checked", checked}, {"ok", failures.empty()}, {"failures", failures}}.dump(2) << "\n";
  } else {
    out << "checked " << checked << "\n";
    for (const auto& line : failure_text) out << "FAIL " << line << "\n";
    out << (failure_text.empty() ? "ok" : "mismatch") << "\n";
  }
  return failures.empty() ? ok : mismatch;
}

}  // namespace detail

// Parses args (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  run_config cfg;
  CLI::App app{"Count maximum matchings via the Gallai-Edmonds decomposition", "maxmatch"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap-component", cfg.cap_component, "largest component handled by the exact counters")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-oracle", cfg.cap_oracle, "largest vertex count the oracle accepts")->check(CLI::PositiveNumber);
  app.add_option("--cap-oracle-edges", cfg.cap_oracle_edges, "largest edge count the oracle accepts (at most 64)")
      ->check(CLI::Range(1, 64));
  app.add_option("--cap-trees", cfg.cap_trees, "largest order for free-tree enumeration")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for generated instances");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));

  const std::string input_help = "edge-list file, '-' for stdin, or path:N, cycle:N, star:N, complete:N";
  auto* count = app.add_subcommand("count", "number of maximum matchings with its breakdown");
  count->add_option("input", cfg.input, input_help)->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "Gallai-Edmonds sets D, A, C");
  decompose_cmd->add_option("input", cfg.input, input_help)->required();
  auto* oracle = app.add_subcommand("oracle", "brute-force matching profile");
  oracle->add_option("input", cfg.input, input_help)->required();
  oracle->add_flag("--check", cfg.oracle_check, "compare every module against the oracle");
  auto* opt = app.add_subcommand("opt-tree", "largest maximum-matching count over trees of order n");
  opt->add_option("n", cfg.opt_n, "tree order")->check(CLI::PositiveNumber);
  opt->add_option("--check", cfg.opt_check, "compare closed forms with exhaustive search for 4..N")
      ->check(CLI::PositiveNumber);
  auto* gen = app.add_subcommand("gen-trees", "all free trees of order n");
  gen->add_option("n", cfg.gen_n, "tree order")->required()->check(CLI::PositiveNumber);
  auto* check = app.add_subcommand("check", "cross-module equality suite");
  check->add_option("input", cfg.input, input_help);
  check->add_option("--trees", cfg.check_trees, "all free trees of order 1..N")->check(CLI::PositiveNumber);
  check->add_option("--random", cfg.check_random, "number of seeded G(n, m) graphs");
  check->add_option("--max-n", cfg.check_max_n, "largest order of the random graphs")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return usage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    if (cfg.subcommand == "count") return detail::do_count(cfg, in, out);
    if (cfg.subcommand == "decompose") return detail::do_decompose(cfg, in, out);
    if (cfg.subcommand == "oracle") return detail::do_oracle(cfg, in, out);
    if (cfg.subcommand == "opt-tree") return detail::do_opt_tree(cfg, out, err);
    if (cfg.subcommand == "gen-trees") return detail::do_gen_trees(cfg, out);
    return detail::do_check(cfg, in, out, err);
  } catch (const cap_exceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return over_cap;
  } catch (const surplus_violation& e) {
    err << "verification failed: " << e.what() << "\n";
    return mismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace maxmatch::cli
