#include <gtest/gtest.h>

#include "maxmatch/graph_enumeration.hpp"
#include "maxmatch/opt_trees.hpp"

using namespace maxmatch;

namespace {

std::vector<big_count> term_values(std::size_t n) {
  const opt_tree_index idx = index_opt_tree(n);
  gadget_series series;
  std::vector<big_count> out;
  for (const auto& t : idx.terms) out.push_back(evaluate_term(t, series));
  return out;
}

big_count power(big_count base, unsigned e) {
  big_count r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

TEST(Gadgets, BaseValues) {
  EXPECT_EQ(gadget_value(gadget::CL, 1), 11);
  EXPECT_EQ(gadget_value(gadget::CL, 2), 112);
  EXPECT_EQ(gadget_value(gadget::C, 1), 8);
  EXPECT_EQ(gadget_value(gadget::CP3, 1), 19);
  EXPECT_EQ(gadget_value(gadget::Cstar, 1), 5);
  EXPECT_EQ(gadget_value(gadget::CF, 1), 30);
  EXPECT_EQ(gadget_value(gadget::CFminusL, 1), 21);
  EXPECT_EQ(gadget_value(gadget::CFL, 1), 21);
}

TEST(Gadgets, RecurrenceSteps) {
  EXPECT_EQ(gadget_value(gadget::CL, 3), 11 * 112 - 9 * 11);
  EXPECT_EQ(gadget_value(gadget::C, 2), 5 * 11 + 3 * 8);
  EXPECT_EQ(gadget_value(gadget::C, 3), 5 * 112 + 3 * 79);
  EXPECT_EQ(gadget_value(gadget::CP3, 2), 13 * 11 + 6 * 8);
  EXPECT_EQ(gadget_value(gadget::CP3, 3), 13 * 112 + 6 * 79);
  EXPECT_EQ(gadget_value(gadget::Cstar, 2), 5 * 8 + 3 * 5);
  EXPECT_EQ(gadget_value(gadget::CF, 2), 3 * 79 + 6 * 11);
  EXPECT_EQ(gadget_value(gadget::CFminusL, 2), 5 * 30 + 3 * 21);
  EXPECT_EQ(gadget_value(gadget::CFL, 2), 5 * 30 + 3 * 21);
}

TEST(Gadgets, IndexStartsAtOne) { EXPECT_THROW(gadget_value(gadget::CL, 0), std::invalid_argument); }

TEST(Gadgets, SeriesGrowsLazily) {
  gadget_series series;
  EXPECT_EQ(series.computed(), 1u);
  const big_count far = series.value(gadget::CL, 40);
  EXPECT_EQ(series.computed(), 40u);
  EXPECT_EQ(far, 11 * series.value(gadget::CL, 39) - 9 * series.value(gadget::CL, 38));
  EXPECT_GT(far, big_count(1) << 64);
}

TEST(OptTreeCount, PrintedValues) {
  const std::vector<std::pair<std::size_t, const char*>> table{
      {17, "216"},       {24, "2187"},      {31, "22140"},     {38, "224100"},    {12, "41"},
      {19, "418"},       {9, "15"},         {16, "153"},       {23, "1560"},      {30, "15807"},
      {27, "5832"},      {41, "597861"},    {48, "6052320"},   {55, "61268400"},  {62, "620136000"},
      {69, "6276690000"}, {6, "5"},         {10, "21"},        {13, "56"},        {20, "571"},
      {34, "59049"},     {72, "16915082240"}, {76, "63503190000"}, {7, "8"},      {8, "11"}};
  for (const auto& [n, value] : table) EXPECT_EQ(to_decimal(opt_tree_count(n)), value) << "n=" << n;
}

TEST(OptTreeCount, SmallOrders) {
  EXPECT_EQ(opt_tree_count(1), 1);
  EXPECT_EQ(opt_tree_count(2), 1);
  EXPECT_EQ(opt_tree_count(3), 2);  // P3 has two maximum matchings
  EXPECT_EQ(index_opt_tree(3).regime, "exhaustive");
  EXPECT_EQ(opt_tree_count(4), 3);
  EXPECT_EQ(opt_tree_count(5), 4);
  EXPECT_THROW(index_opt_tree(0), std::invalid_argument);
}

TEST(OptTreeCount, Regimes) {
  EXPECT_EQ(index_opt_tree(8).regime, "chain-CL");
  EXPECT_EQ(index_opt_tree(11).regime, "chain-CF");
  EXPECT_EQ(index_opt_tree(14).regime, "residue-0");
  EXPECT_EQ(index_opt_tree(45).regime, "residue-3");
  EXPECT_EQ(index_opt_tree(26).regime, "residue-5");
  EXPECT_EQ(index_opt_tree(37).regime, "residue-2-mid");
  EXPECT_EQ(index_opt_tree(65).regime, "residue-2-mid");
  EXPECT_EQ(index_opt_tree(72).regime, "residue-2-large");
  EXPECT_EQ(index_opt_tree(76).regime, "residue-6");
  EXPECT_EQ(index_opt_tree(34).regime, "exceptional");
  EXPECT_EQ(index_opt_tree(69).regime, "printed");
  EXPECT_EQ(index_opt_tree(72).residue, 2u);
  EXPECT_EQ(index_opt_tree(72).k_values, (std::vector<std::size_t>{1, 2, 2, 2, 2}));
  EXPECT_EQ(index_opt_tree(76).k_values, (std::vector<std::size_t>(7, 1)));
}

TEST(OptTreeTerms, ResidueZeroAtFourteen) {
  EXPECT_EQ(term_values(14), (std::vector<big_count>{3 * 21, 6 * 30}));
}

TEST(OptTreeTerms, ResidueThreeAtFortyFive) {
  EXPECT_EQ(index_opt_tree(45).k_values, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(term_values(45), (std::vector<big_count>(4, 30 * 30 * 30 * 21)));
}

TEST(OptTreeTerms, ResidueFiveAtTwentySix) {
  EXPECT_EQ(term_values(26), (std::vector<big_count>{11 * 11 * 19, 11 * 11 * 8, 11 * 11 * 8}));
}

TEST(OptTreeTerms, ResidueTwoMidAtThirtySeven) {
  EXPECT_EQ(term_values(37), (std::vector<big_count>{19 * 19 * 11 * 11, 19 * 11 * 11 * 8, 19 * 11 * 11 * 11,
                                                      19 * 11 * 11 * 8, 19 * 11 * 11 * 11, 11 * 11 * 8 * 8,
                                                      11 * 11 * 11 * 8, 11 * 11 * 11 * 8}));
}

TEST(OptTreeTerms, ResidueTwoLargeAtSeventyTwo) {
  // k = (1, 2, 2, 2, 2): CL(1) = 11, CL(2) = 112, CP3(2) = 191, C(2) = 79, C(1) = 8, Cstar(1) = 5.
  const big_count l = 112;
  const std::vector<big_count> expected{
      11 * power(l, 2) * 191 * 191, 191 * 11 * power(l, 2) * 79, 191 * power(l, 3) * 8, 191 * 11 * power(l, 2) * 79,
      191 * power(l, 3) * 8,        11 * power(l, 2) * 79 * 79,  8 * 79 * power(l, 3),  8 * 79 * power(l, 3),
      5 * power(l, 4)};
  EXPECT_EQ(term_values(72), expected);
}

TEST(OptTreeTerms, ResidueSixAtSeventySix) {
  // Every chain has length 1: CL = 11, CF = 30, CFL = CFminusL = 21, C = 8, Cstar = 5.
  std::vector<big_count> expected(9, 11 * power(30, 4) * 21 * 21);
  for (int i = 0; i < 6; ++i) expected.push_back(8 * power(30, 5) * 21);
  expected.push_back(5 * power(30, 6));
  EXPECT_EQ(term_values(76), expected);
}

TEST(ExtremalSearch, SmallOrders) {
  const auto four = extremal_search(4);
  EXPECT_EQ(four.max, 3);
  ASSERT_EQ(four.witnesses.size(), 1u);
  EXPECT_TRUE(are_isomorphic(four.witnesses[0], make_star(4)));
  const auto six = extremal_search(6);
  EXPECT_EQ(six.max, 5);
  EXPECT_EQ(six.witnesses.size(), 2u);
  EXPECT_EQ(extremal_search(10).max, 21);
  EXPECT_EQ(extremal_search(13).max, 56);
}

TEST(ExtremalSearch, PublishedValuesUpToThirteen) {
  for (std::size_t n = 4; n <= 13; ++n) {
    const opt_tree_index idx = index_opt_tree(n);
    if (idx.regime == "exhaustive") continue;
    EXPECT_EQ(extremal_search(n).max, opt_tree_count(idx)) << "n=" << n;
  }
}

TEST(ExtremalSearch, Caps) { EXPECT_THROW(extremal_search(17), cap_exceeded); }

TEST(ConsistencyReport, Lines) {
  const auto lines = consistency_report(14);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines.front().n, 4u);
  EXPECT_EQ(lines[9 - 4].text(), "n=9 MATCH 15");
  EXPECT_EQ(lines[13 - 4].text(), "n=13 MATCH 56");
  EXPECT_EQ(lines.back().n, 14u);
  EXPECT_EQ(lines.back().formula, 243);
  EXPECT_THROW(consistency_report(17), cap_exceeded);
}
