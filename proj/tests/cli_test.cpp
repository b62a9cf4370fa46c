#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "extremal");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  int code = extremal::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

extremal::Json json_of(const Result& r) {
  return extremal::Json::parse(r.out);
}

}  // namespace

TEST(Cli, AnalyzeCounterexample) {
  for (const char* spelling : {"g6:1-2,1-3,2-3,3-4,4-5,4-6", "1-2,1-3,2-3,3-4,4-5,4-6"}) {
    auto r = run({"analyze", "--graph", spelling});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json_of(r);
    EXPECT_EQ(j["alpha"], 3);
    EXPECT_EQ(j["alpha_star"], "7/2");
    EXPECT_EQ(j["C2"], "3/8");
    EXPECT_EQ(j["A"], "3");
    EXPECT_EQ(j["automorphisms"], 4);
    EXPECT_EQ(j["weightings"], 145);
    EXPECT_TRUE(j["counterexample"].get<bool>());
  }
  auto byname = run({"analyze", "--builtin", "G6"});
  auto bygraph6 = run({"analyze", "--graph", "g6:" + extremal::write_graph6(extremal::g6_graph())});
  EXPECT_EQ(json_of(byname)["spectrum"], json_of(bygraph6)["spectrum"]);
}

TEST(Cli, CrossoverFromDefaultScan) {
  auto r = run({"crossover", "--builtin", "G6", "--q1", "1", "--q2", "0.7071067811865476"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto roots = json_of(r)["crossovers"];
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].get<double>(), 0.01613474, 1e-6);

  auto b = run({"crossover", "--builtin", "P2", "--q1", "0", "--q2", "1", "--bracket", "0.3:0.7",
                "--format", "csv"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.out.substr(0, 13), "index,beta\n0,");
  EXPECT_NEAR(std::stod(b.out.substr(13)), 0.5, 1e-9);
}

TEST(Cli, ProfileFlipsAtOneHalf) {
  auto r = run({"profile", "--builtin", "P2", "--beta", "0.001:1:200"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "beta,f_T,q_star,t_S,t_K,winner");
  double last_s = -1;
  double first_k = 2;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    double beta = std::stod(line.substr(0, line.find(',')));
    char w = line.back();
    if (w == 'S') {
      last_s = std::max(last_s, beta);
    } else if (w == 'K') {
      first_k = std::min(first_k, beta);
    } else {
      ADD_FAILURE() << line;
    }
  }
  EXPECT_EQ(rows, 200);
  EXPECT_LT(last_s, 0.5 + 1e-9);
  EXPECT_GE(first_k, 0.5 - 1e-9);
  EXPECT_LT(first_k, last_s + 0.006);
}

TEST(Cli, ClassifyAndSweep) {
  auto r = run({"classify", "--builtin", "P4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["pattern"], "SK");
  EXPECT_NEAR(j["gamma"].get<double>(), 0.0865, 5e-4);

  auto all = run({"classify-all", "--max-v", "3"});
  ASSERT_EQ(all.code, 0) << all.err;
  EXPECT_EQ(all.out.substr(0, all.out.find('\n')), "graph6,v,e,alpha,alpha_star,A,pattern,gamma,delta");
  EXPECT_EQ(std::count(all.out.begin(), all.out.end(), '\n'), 4);
}

TEST(Cli, OracleAndBudget) {
  auto r = run({"oracle", "--builtin", "K2", "--beta", "0.5", "--q", "1", "--n-list", "50,100",
                "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["rows"].size(), 2u);

  auto b = run({"oracle", "--builtin", "G6", "--n-list", "120", "--budget", "100"});
  EXPECT_EQ(b.code, extremal::cli::kExitBudget);
  EXPECT_NE(b.err.find("nodes visited"), std::string::npos);
}

TEST(Cli, SearchLpAndEx) {
  auto s = run({"search", "--max-v", "6", "--format", "json"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json_of(s).size(), 3u);

  auto lp = run({"lp", "--builtin", "C5", "--epsilon", "1/3"});
  ASSERT_EQ(lp.code, 0) << lp.err;
  EXPECT_EQ(json_of(lp)["primal"], "25/6");

  auto ex = run({"ex", "--builtin", "K3", "--n", "5", "--e", "6"});
  ASSERT_EQ(ex.code, 0) << ex.err;
  EXPECT_EQ(json_of(ex)["ex"], "4");
}

TEST(Cli, InvalidInputExitsWithTwo) {
  EXPECT_EQ(run({"analyze", "--graph", "1-1"}).code, 2);
  EXPECT_EQ(run({"analyze", "--graph", "A`"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--builtin", "K3", "--graph", "1-2"}).code, 2);
  EXPECT_EQ(run({"analyze", "--builtin", "Q9"}).code, 2);
  EXPECT_EQ(run({"profile", "--builtin", "K3", "--grid", "10"}).code, 2);
  EXPECT_EQ(run({"lp", "--builtin", "K3", "--epsilon", "3/2"}).code, 2);
  EXPECT_EQ(run({"crossover", "--builtin", "K3", "--q", "2"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"analyze", "--builtin", "K3", "--format", "xml"}).code, 2);
  auto bad = run({"analyze", "--graph", "1-1"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, HelpSucceeds) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}

TEST(Cli, OutputIsDeterministicAndWrittenToFile) {
  auto path = std::filesystem::temp_directory_path() / "extremal_cli_test.csv";
  std::vector<std::string> args = {"profile", "--builtin", "G6", "--beta", "0.001:0.05:30"};
  auto first = run(args);
  auto second = run(args);
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);

  args.insert(args.end(), {"--out", path.string()});
  auto filed = run(args);
  ASSERT_EQ(filed.code, 0);
  EXPECT_TRUE(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::string contents((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(contents, first.out);
  std::filesystem::remove(path);

  auto unwritable = run({"analyze", "--builtin", "K2", "--out", "/nonexistent-dir/x.json"});
  EXPECT_EQ(unwritable.code, 2);
}
