#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arcv/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = arcv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, CharacterReport) {
  const auto r = call({"character", "--l", "2", "--n", "1", "--qmax", "4", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["command"], "character");
  ASSERT_EQ(doc["character"].size(), 3u);
  for (const auto& entry : doc["character"]) {
    EXPECT_EQ(entry["q"], json::parse("[1,1,1,1,1]"));
  }
  EXPECT_EQ(doc["character"][0]["weight"], -2);
  EXPECT_EQ(doc["character"][2]["weight"], 2);
  EXPECT_EQ(doc["timing_ms"], 0);
}

TEST(Cli, GoldenOutput) {
  const auto r = call({"character", "--l", "2", "--n", "1", "--qmax", "4", "--no-timing"});
  EXPECT_EQ(r.out, slurp(std::string(ARCV_GOLDEN_DIR) + "/character_l2_n1_q4.json"));
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"jet", "--l", "2", "--n", "2", "--qmax", "3", "--no-timing"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, JetCompare) {
  const auto r =
      call({"jet", "--l", "2", "--n", "2", "--qmax", "4", "--ideal", "q", "--compare"});
  EXPECT_EQ(r.code, 0) << r.err;
  for (const auto& c : json::parse(r.out)["checks"]) EXPECT_EQ(c["status"], "pass");
}

TEST(Cli, GeneratorDump) {
  const auto r = call({"jet", "--l", "2", "--n", "2", "--qmax", "1", "--dump-generators"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json gens = json::parse(r.out)["generators"];
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0]["polynomial"], "-x1_0^2 + x0_0*x2_0");
}

TEST(Cli, ShortSeriesExitThree) {
  const auto r = call({"jet", "--l", "2", "--n", "2", "--qmax", "4", "--tmax", "2"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, FiberAndInconclusive) {
  auto r = call({"fiber", "--l", "2", "--n", "2", "--point", "0,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["fiber"]["dimension"], 9);
  r = call({"fiber", "--l", "2", "--n", "2", "--point", "0,0", "--qmax", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out)["checks"][0]["status"], "inconclusive");
}

TEST(Cli, FusionCompare) {
  const auto r =
      call({"fusion", "--levels", "1,1,1", "--points", "0, 1/2, -3", "--qmax", "4", "--compare"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, Identities) {
  const auto r = call({"identities", "--l", "2", "--n", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["top_coefficient"], 2);
}

TEST(Cli, SupernomialCsv) {
  const auto r = call({"supernomial", "--l", "2", "--n", "1", "--a", "0", "--qmax", "2",
                       "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "weight,qdeg,coefficient\n0,0,1\n");
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(call({"character", "--bogus"}).code, 2);
  EXPECT_NE(call({"character", "--bogus"}).err.find("Usage"), std::string::npos);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"character", "--l", "0"}).code, 2);
  EXPECT_EQ(call({"character", "--qmax", "40"}).code, 2);
  EXPECT_EQ(call({"fiber", "--l", "2", "--n", "2", "--point", "1/0,1"}).code, 2);
  EXPECT_EQ(call({"fiber", "--l", "2", "--n", "2", "--point", "1"}).code, 2);
  EXPECT_EQ(call({"fusion", "--levels", "1,1", "--points", "2,2"}).code, 2);
  EXPECT_EQ(call({"character", "--format", "xml"}).code, 2);
}

TEST(Cli, LargeQmaxNeedsOverride) {
  EXPECT_EQ(call({"character", "--l", "1", "--n", "1", "--qmax", "14", "--allow-large"}).code, 0);
}

TEST(Cli, ConfigFile) {
  const std::string path = ::testing::TempDir() + "arcv_cli_test.cfg";
  {
    std::ofstream cfg(path);
    cfg << "# test\nl = 3\nn = 1\nqmax = 2\nno-timing = true\n";
  }
  auto r = call({"character", "--config", path});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["params"]["l"], 3);
  EXPECT_EQ(doc["character"].size(), 4u);
  EXPECT_EQ(doc["timing_ms"], 0);
  // flags win over the file
  r = call({"character", "--config", path, "--l", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["params"]["l"], 1);
  std::remove(path.c_str());
}

TEST(Cli, SplitList) {
  EXPECT_EQ(arcv::cli::split_list(" 1, -2 ,3/4,"), (std::vector<std::string>{"1", "-2", "3/4"}));
}
