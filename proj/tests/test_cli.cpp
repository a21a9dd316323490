#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "output.hpp"

namespace permstat::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, StatAnchor) {
  const auto r = invoke({"stat", "--format", "json", "--algo", "all", "1 4 7 2 5 8 3 6 9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  ASSERT_EQ(doc["results"].size(), 3u);
  for (const auto& row : doc["results"]) {
    EXPECT_EQ(row["d"], 4);
    EXPECT_EQ(row["mj"], 3);
  }
}

TEST(Cli, StatFromStdinCsv) {
  const auto r = invoke({"stat", "--format", "csv"}, "1 2\n\n2,4,1,3\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header, "index,n,algorithm,d,mj,seconds");
  EXPECT_EQ(first.rfind("1,2,adaptive,2,1,", 0), 0u);
  EXPECT_EQ(second.rfind("2,4,adaptive,3,2,", 0), 0u);
}

TEST(Cli, StatErrors) {
  auto r = invoke({"stat", "1 1 2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("duplicate value 1"), std::string::npos) << r.err;
  r = invoke({"stat", "1 x 2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("offset"), std::string::npos) << r.err;
  r = invoke({"stat", "--algo", "quick", "1 2"});
  EXPECT_EQ(r.code, kExitUsage);
  r = invoke({"nonsense"});
  EXPECT_EQ(r.code, kExitUsage);
  r = invoke({});
  EXPECT_EQ(r.code, kExitUsage);
  r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
}

TEST(Cli, SampleIsByteStable) {
  const auto a = invoke({"sample", "--n", "10", "--seed", "2024", "--count", "3"});
  const auto b = invoke({"sample", "--n", "10", "--seed", "2024", "--count", "3"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "10 2 9 1 3 7 8 4 5 6");
  const auto j = Json::parse(invoke({"sample", "--n", "5", "--format", "json"}).out);
  EXPECT_TRUE(j["generator"]["seed"].is_string());
  EXPECT_EQ(j["permutations"][0].size(), 5u);
}

TEST(Cli, EnumerateJsonSchema) {
  const auto r = invoke({"enumerate", "--n", "4", "--statistic", "breadth", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["statistic"], "breadth");
  EXPECT_EQ(doc["counts"]["2"], "22");
  EXPECT_EQ(doc["counts"]["3"], "2");
  EXPECT_EQ(doc["total"], "24");
}

TEST(Cli, EnumerateBudget) {
  EXPECT_EQ(invoke({"enumerate", "--n", "12"}).code, kExitBudget);
  EXPECT_EQ(invoke({"enumerate", "--n", "5", "--statistic", "what"}).code, kExitUsage);
}

TEST(Cli, PredictCsv) {
  const auto r = invoke({"predict", "--format", "csv", "--trials", "10000000"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("expected,2,8646647.16"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("moment,1,2.13782018168687"), std::string::npos) << r.out;
}

TEST(Cli, SmTable) {
  const auto r = invoke({"sm", "--n", "6", "--d", "1", "--m", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["probability"], "1/8");
  EXPECT_EQ(doc["rows"][2]["S_m_formula"], "16/15");
  EXPECT_EQ(doc["rows"][2]["S_m_exact"], "16/15");
  EXPECT_EQ(doc["rows"][5]["bracket_lower"], "1/8");
  const auto breadth = invoke({"sm", "--n", "20", "--statistic", "breadth"});
  EXPECT_EQ(breadth.code, kExitBudget);
}

TEST(Cli, ZStarEdgeList) {
  const auto r = invoke({"zstar", "--n", "10", "--d", "1", "--format", "csv"}, "# path\n0 1 red\n1 2 red\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "vertices,edges,red_edges,n,d,Z,Z_star\n3,2,2,10,1,34,16\n");
  const auto blue = invoke({"zstar", "--format", "csv"}, "0 1 red\n1 2 blue\n");
  EXPECT_EQ(blue.out.substr(blue.out.find('\n') + 1), "3,2,1,10,1,18,\n");
  EXPECT_EQ(invoke({"zstar"}, "0 1 green\n").code, kExitUsage);
  EXPECT_EQ(invoke({"zstar"}, "0 0 red\n").code, kExitUsage);
}

TEST(Cli, TrialsDeterministicJson) {
  const std::vector<std::string> args{"trials", "--n", "100", "--trials", "2000", "--seed", "9",
                                      "--d", "1", "--format", "json", "--threads", "2"};
  auto a = Json::parse(invoke(args).out);
  auto b = Json::parse(invoke(args).out);
  a.erase("timings");
  b.erase("timings");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["config"]["workers"], 2);
  EXPECT_EQ(a["generator"]["streams"], 2);
  EXPECT_TRUE(a["closepairs"].is_object());
  EXPECT_EQ(invoke({"trials", "--n", "100000", "--trials", "10000000"}).code, kExitBudget);
}

TEST(Cli, TrialsCsvColumns) {
  const auto r = invoke({"trials", "--n", "50", "--trials", "500", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,value,observed,expected,z");
}

TEST(Cli, BenchSingleRowHasNoRatio) {
  const auto r = invoke({"bench", "--n-list", "256", "--reps", "1", "--format", "json", "--min-seconds", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_TRUE(doc["rows"][0]["doubling_ratio"].is_null());
}

TEST(Output, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  Table t;
  t.columns = {"k", "v"};
  t.add({"x,y", nullptr});
  std::ostringstream out;
  write_csv(out, t);
  EXPECT_EQ(out.str(), "k,v\n\"x,y\",\n");
}

}  // namespace
}  // namespace permstat::cli
