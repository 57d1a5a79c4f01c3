#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stlab/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "stlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = stlab::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnumerateJson) {
  auto r = run({"enumerate", "--m", "6", "--delta", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 6);
  EXPECT_EQ(j["elements"].size(), 6u);
  EXPECT_EQ(j["elements"][0]["kind"], "odd");
}

TEST(Cli, EnumerateTable) {
  auto r = run({"enumerate", "--m", "6", "--delta", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 triangulations of C(6,4)\n0  {135,136,146}\n1  {136,146,246}\n");
}

TEST(Cli, HasseDotAndJson) {
  auto dot = run({"hasse", "--m", "6", "--delta", "3"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.out.find("rankdir=BT"), std::string::npos);
  auto json = run({"hasse", "--m", "6", "--delta", "3", "--format", "json"});
  auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["hasse1"].size(), 6u);
}

TEST(Cli, HasseHasNoDashedEdgesWhenOrdersAgree) {
  auto r = run({"hasse", "--m", "6", "--delta", "4"});
  EXPECT_EQ(r.out.find("dashed"), std::string::npos);
}

TEST(Cli, CompareOrders) {
  auto r = run({"compare-orders", "--m", "8", "--delta", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equal\n");
  auto j = nlohmann::json::parse(run({"compare-orders", "--m", "8", "--delta", "4", "--format", "json"}).out);
  EXPECT_TRUE(j["equal"].get<bool>());
  EXPECT_TRUE(j["witness"].is_null());
}

TEST(Cli, CheckLattice) {
  auto yes = run({"check-lattice", "--m", "8", "--delta", "4"});
  EXPECT_EQ(yes.out, "lattice\n");
  auto no = run({"check-lattice", "--m", "9", "--delta", "4", "--threads", "2"});
  ASSERT_EQ(no.code, 0);
  EXPECT_EQ(no.out.rfind("not a lattice\nwitness: ", 0), 0u);
  auto second = run({"check-lattice", "--m", "9", "--delta", "4", "--order", "2", "--format", "json"});
  auto j = nlohmann::json::parse(second.out);
  EXPECT_EQ(j["order"], 2);
  EXPECT_FALSE(j["lattice"].get<bool>());
}

TEST(Cli, Embed) {
  auto r = run({"embed", "--m", "6", "--delta", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ground set {246} (1)"), std::string::npos);
  EXPECT_NE(r.out.find("injective: yes"), std::string::npos);
  EXPECT_NE(r.out.find("order-compatible: yes"), std::string::npos);
}

TEST(Cli, Green) {
  auto r = run({"green", "--n", "3", "--d", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("6 classes", 0), 0u);
  auto j = nlohmann::json::parse(run({"green", "--n", "4", "--d", "1", "--frame", "tilting", "--format", "json"}).out);
  EXPECT_EQ(j["classes"].size(), 6u);
  EXPECT_EQ(j["frame"], "tilting");
}

TEST(Cli, TablesSmall) {
  auto r = run({"tables", "--max-c", "4", "--max-delta", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("✓"), std::string::npos);
  auto j = nlohmann::json::parse(run({"tables", "--max-c", "4", "--max-delta", "5", "--format", "json"}).out);
  EXPECT_TRUE(j.is_object());
}

TEST(Cli, TablesCapReturnsExitTwo) {
  auto r = run({"tables", "--max-c", "5", "--max-delta", "5", "--max-elements", "50"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("—"), std::string::npos);
}

TEST(Cli, ElementCapOnSingleCommand) {
  auto r = run({"enumerate", "--m", "10", "--delta", "4", "--max-elements", "20"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"enumerate", "--m", "6"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"enumerate", "--m", "6", "--delta", "3", "--format", "dot"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--m", "3", "--delta", "3"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, OutputFile) {
  const std::string path = testing::TempDir() + "stlab_cli_out.json";
  auto r = run({"enumerate", "--m", "6", "--delta", "4", "--format", "json", "--output", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["count"], 2);
  std::remove(path.c_str());
}
