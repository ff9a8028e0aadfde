#include <gtest/gtest.h>

#include <sstream>

#include "maxmatch/cli.hpp"

using nlohmann::json;

namespace {

struct outcome {
  int code;
  std::string out;
  std::string err;
};

outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = maxmatch::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string data_dir = MAXMATCH_DATA_DIR;

}  // namespace

TEST(Cli, CountPathFile) {
  const outcome r = run({"count", data_dir + "/p3.edges"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["m"], 2);
  EXPECT_EQ(doc["nu"], 1);
  EXPECT_EQ(doc["m_max"], "2");
  EXPECT_EQ(doc["breakdown"]["aux_max"], "2");
  EXPECT_EQ(doc["breakdown"]["components"].size(), 2u);
}

TEST(Cli, KeyOrderIsStable) {
  const outcome r = run({"count", "cycle:5"});
  EXPECT_EQ(r.out.find("\"n\""), r.out.find('"'));
  EXPECT_LT(r.out.find("\"nu\""), r.out.find("\"m_max\""));
  EXPECT_LT(r.out.find("\"m_max\""), r.out.find("\"breakdown\""));
}

TEST(Cli, Deterministic) {
  const auto a = run({"check", "--random", "30", "--seed", "7"});
  const auto b = run({"check", "--random", "30", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"decompose", "star:6"}).out, run({"decompose", "star:6"}).out);
}

TEST(Cli, Stdin) {
  const outcome r = run({"count", "-"}, "4 3\n0 1\n1 2\n2 3\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["m_max"], "1");
}

TEST(Cli, Decompose) {
  const outcome r = run({"decompose", "path:3"});
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["D"], json::parse("[0,2]"));
  EXPECT_EQ(doc["A"], json::parse("[1]"));
  EXPECT_EQ(doc["C"], json::parse("[]"));
  EXPECT_EQ(doc["components"], json::parse("[[0],[2]]"));
  EXPECT_EQ(doc["nu"], 1);
}

TEST(Cli, OptTree) {
  const outcome r = run({"opt-tree", "72"});
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["n"], 72);
  EXPECT_EQ(doc["residue"], 2);
  EXPECT_EQ(doc["regime"], "residue-2-large");
  EXPECT_EQ(doc["value"], "16915082240");
  EXPECT_EQ(json::parse(run({"opt-tree", "76"}).out)["value"], "63503190000");
}

TEST(Cli, OptTreeCheck) {
  const outcome r = run({"opt-tree", "--check", "10", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=9 MATCH 15"), std::string::npos);
  EXPECT_EQ(run({"opt-tree", "--check", "20"}).code, 3);
}

TEST(Cli, OracleCheck) {
  const outcome r = run({"oracle", "--check", data_dir + "/petersen.edges"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["nu"], 5);
  EXPECT_EQ(doc["m_max"], "6");
  EXPECT_EQ(doc["check"]["ok"], true);
}

TEST(Cli, CheckTrees) {
  const outcome r = run({"check", "--trees", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["checked"], 987);
}

TEST(Cli, GenTrees) {
  const outcome r = run({"gen-trees", "7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["count"], 11);
}

TEST(Cli, FlagsAfterSubcommand) {
  EXPECT_EQ(run({"count", "complete:26"}).code, 3);
  EXPECT_EQ(run({"count", "complete:26", "--cap-component", "26"}).code, 0);
  EXPECT_EQ(run({"--cap-component", "26", "count", "complete:26"}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count"}).code, 2);
  EXPECT_EQ(run({"count", "/nonexistent/graph.edges"}).code, 2);
  EXPECT_EQ(run({"count", "-"}, "2 1\n0 2\n").code, 2);
  EXPECT_EQ(run({"count", "cycle:5", "--cap-component", "0"}).code, 2);
  EXPECT_EQ(run({"count", "cycle:5", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"oracle", "path:20"}).code, 3);
  EXPECT_EQ(run({"check"}).code, 2);
  const outcome err = run({"count", "-"}, "3 x\n");
  EXPECT_EQ(err.code, 2);
  EXPECT_TRUE(err.out.empty());
  EXPECT_FALSE(err.err.empty());
}

TEST(Cli, TextFormat) {
  const outcome r = run({"count", "cycle:5", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m_max 5"), std::string::npos);
}
