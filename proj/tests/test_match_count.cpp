#include <gtest/gtest.h>

#include "maxmatch/blossom.hpp"
#include "maxmatch/free_trees.hpp"
#include "maxmatch/match_count.hpp"
#include "maxmatch/oracle.hpp"
#include "maxmatch/random_graphs.hpp"

using namespace maxmatch;

namespace {

graph disjoint_union(const graph& a, const graph& b) {
  std::vector<std::pair<vertex, vertex>> edges;
  for (const edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  const auto shift = static_cast<vertex>(a.order());
  for (const edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return graph(a.order() + b.order(), edges);
}

const oracle_limits wide{16, 64};

}  // namespace

TEST(CountPerfect, Examples) {
  EXPECT_EQ(count_perfect(make_complete(4)), 3);
  EXPECT_EQ(count_perfect(make_cycle(5)), 0);
  EXPECT_EQ(count_perfect(make_cycle(6)), 2);
  EXPECT_EQ(count_perfect(make_complete(6)), 15);
  EXPECT_EQ(count_perfect(graph(0, {})), 1);
  EXPECT_EQ(count_perfect(build_graph(4, {{0, 1}})), 0);
  // 3x4 grid has 11 domino tilings.
  std::vector<std::pair<vertex, vertex>> grid;
  for (vertex r = 0; r < 3; ++r)
    for (vertex c = 0; c < 4; ++c) {
      if (c + 1 < 4) grid.emplace_back(4 * r + c, 4 * r + c + 1);
      if (r + 1 < 3) grid.emplace_back(4 * r + c, 4 * (r + 1) + c);
    }
  EXPECT_EQ(count_perfect(graph(12, grid)), 11);
}

TEST(CountPerfect, PositiveIffNuIsHalf) {
  random_engine rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = uniform_index(rng, 1, 16);
    const graph g = random_gnp(n, 0.3, rng);
    EXPECT_EQ(count_perfect(g) > 0, 2 * matching_number(g) == n);
  }
}

TEST(CountPerfect, ComponentCap) {
  EXPECT_THROW(count_perfect(make_cycle(26)), cap_exceeded);
  EXPECT_EQ(count_perfect(make_cycle(26), {26}), 2);
  // Many small components are fine under a small cap.
  graph g = make_cycle(4);
  for (int i = 0; i < 10; ++i) g = disjoint_union(g, make_cycle(4));
  EXPECT_EQ(count_perfect(g, {4}), big_count(1) << 11);
}

TEST(KMatchings, Examples) {
  EXPECT_EQ(count_k_matchings(make_path(3), 1), 2);
  EXPECT_EQ(count_k_matchings(make_cycle(5), 2), 5);
  EXPECT_EQ(count_k_matchings(make_cycle(5), 3), 0);
  EXPECT_EQ(count_k_matchings(make_complete(4), 0), 1);
  EXPECT_EQ(matching_counts(make_complete(4)), (std::vector<big_count>{1, 6, 3}));
}

TEST(KMatchings, DeletionIdentity) {
  random_engine rng(101);
  int pairs = 0;
  while (pairs < 200) {
    const std::size_t n = uniform_index(rng, 2, 14);
    const graph g = random_gnp(n, 0.3, rng);
    if (g.size() == 0) continue;
    ++pairs;
    const edge uv = g.edges()[uniform_index(rng, 0, g.size() - 1)];
    const auto whole = matching_counts(g);
    const auto minus_edge = matching_counts(without_edge(g, uv));
    const auto minus_ends = matching_counts(remove_vertices(g, vertex_set({uv.u, uv.v})).g);
    auto at = [](const std::vector<big_count>& phi, std::size_t k) { return k < phi.size() ? phi[k] : big_count(0); };
    for (std::size_t k = 0; k < whole.size(); ++k) {
      const big_count rhs = at(minus_edge, k) + (k == 0 ? big_count(0) : at(minus_ends, k - 1));
      EXPECT_EQ(whole[k], rhs) << "k=" << k << "\n" << serialize_graph(g);
    }
  }
}

TEST(KMatchings, AgreeWithOracle) {
  random_engine rng(55);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = uniform_index(rng, 1, 10);
    const graph g = random_gnm(n, uniform_index(rng, 0, n * (n - 1) / 2), rng);
    EXPECT_EQ(matching_counts(g), enumerate_profile(g, wide).phi);
  }
}

TEST(NearPerfect, Examples) {
  const auto c5 = count_near_perfect(make_cycle(5));
  EXPECT_EQ(c5.npm, 5);
  EXPECT_EQ(c5.pm_minus, (std::vector<big_count>(5, 1)));
  EXPECT_EQ(count_near_perfect(build_graph(1, {})).npm, 1);
  EXPECT_EQ(count_near_perfect(make_complete(3)).npm, 3);
}

TEST(FactorCriticalCount, Examples) {
  EXPECT_EQ(count_max_factor_critical(make_cycle(5)), 5);
  EXPECT_EQ(count_max_factor_critical(make_cycle(7)), 7);
  EXPECT_EQ(count_max_factor_critical(make_complete(5)), 15);
  EXPECT_THROW(count_max_factor_critical(make_path(3)), not_factor_critical);
}

TEST(FactorCriticalCount, OddCyclesAndEars) {
  for (std::size_t n = 3; n <= 11; n += 2)
    EXPECT_EQ(count_max_factor_critical(make_cycle(n)), enumerate_profile(make_cycle(n)).phi.back());
  random_engine rng(12);
  int done = 0;
  while (done < 50) {
    const graph g = random_factor_critical(uniform_index(rng, 1, 4), 4, rng);
    if (g.order() > 16 || g.size() > 40) continue;
    ++done;
    const matching_profile p = enumerate_profile(g, wide);
    EXPECT_EQ(count_max_factor_critical(g), p.phi[p.nu]) << serialize_graph(g);
  }
}

TEST(AuxMax, Examples) {
  const graph p3 = make_path(3);
  EXPECT_EQ(count_aux_max(build_auxiliary(p3, decompose(p3))), 2);
  EXPECT_EQ(count_aux_max(auxiliary_bipartite()), 1);
  // Two a-vertices, three singleton components, complete attachments: 3 * 2.
  std::vector<std::vector<std::vector<vertex>>> att{{{2}, {3}, {4}}, {{2}, {3}, {4}}};
  const auxiliary_bipartite h({0, 1}, {vertex_set({2}), vertex_set({3}), vertex_set({4})}, att);
  EXPECT_EQ(count_aux_max(h), 6);
  // A parallel pair doubles the choices through that component.
  att[0][0] = {2, 5};
  const auxiliary_bipartite h2({0, 1}, {vertex_set({2, 5, 6}), vertex_set({3}), vertex_set({4})}, att);
  EXPECT_EQ(count_aux_max(h2), 8);
}

TEST(MaximumMatchings, Examples) {
  EXPECT_EQ(count_maximum_matchings(graph(0, {})).total, 1);
  EXPECT_EQ(count_maximum_matchings(build_graph(1, {})).total, 1);
  EXPECT_EQ(count_maximum_matchings(make_path(3)).total, 2);
  EXPECT_EQ(count_maximum_matchings(make_cycle(5)).total, 5);
  EXPECT_EQ(count_maximum_matchings(make_star(7)).total, 6);
  EXPECT_EQ(count_maximum_matchings(make_complete(7)).total, 105);
  EXPECT_EQ(count_maximum_matchings(build_graph(3, {})).total, 1);
}

TEST(MaximumMatchings, BreakdownOfPathOnThree) {
  const max_matching_count r = count_maximum_matchings(make_path(3));
  EXPECT_EQ(r.breakdown.m_pm_c, 1);
  EXPECT_EQ(r.breakdown.aux_max, 2);
  ASSERT_EQ(r.breakdown.components.size(), 2u);
  EXPECT_EQ(r.breakdown.components[0].size, 1u);
  EXPECT_EQ(r.breakdown.components[0].npm, 1);
}

TEST(MaximumMatchings, PerfectMatchingGraphsReduceToCountPerfect) {
  random_engine rng(44);
  int done = 0;
  while (done < 100) {
    const graph g = random_gnp(2 * uniform_index(rng, 1, 8), 0.35, rng);
    if (count_perfect(g) == 0) continue;
    ++done;
    EXPECT_EQ(count_maximum_matchings(g).total, count_perfect(g));
  }
}

TEST(MaximumMatchings, ProductOverComponents) {
  random_engine rng(9);
  for (int i = 0; i < 100; ++i) {
    const graph a = random_gnp(uniform_index(rng, 1, 9), 0.3, rng);
    const graph b = random_gnp(uniform_index(rng, 1, 9), 0.3, rng);
    EXPECT_EQ(count_maximum_matchings(disjoint_union(a, b)).total,
              count_maximum_matchings(a).total * count_maximum_matchings(b).total);
  }
}

TEST(MaximumMatchings, AgreeWithOracleAndKMatchings) {
  random_engine rng(606);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = uniform_index(rng, 1, 10);
    const graph g = random_gnm(n, uniform_index(rng, 0, n * (n - 1) / 2), rng);
    const matching_profile p = enumerate_profile(g, wide);
    EXPECT_EQ(count_maximum_matchings(g).total, p.phi[p.nu]) << serialize_graph(g);
    EXPECT_EQ(count_k_matchings(g, p.nu), p.phi[p.nu]);
  }
  for (std::size_t n = 1; n <= 10; ++n)
    for (const graph& t : enumerate_free_trees(n)) {
      const matching_profile p = enumerate_profile(t);
      EXPECT_EQ(count_maximum_matchings(t).total, p.phi[p.nu]);
    }
}

TEST(MaximumMatchings, ComponentCapErrors) {
  EXPECT_THROW(count_maximum_matchings(make_cycle(27)), cap_exceeded);
  EXPECT_EQ(count_maximum_matchings(make_cycle(27), {27}).total, 27);
  EXPECT_THROW(count_maximum_matchings(make_cycle(5), {4}), cap_exceeded);
}
