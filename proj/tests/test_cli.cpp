#include "run.hpp"
#include "json_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using khup::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "khup");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = khup::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("khup_test_" + name);
}

}  // namespace

TEST(Cli, SubgroupSupportExample) {
  const auto r = cli({"check", "donoho-stark", "--group", "2,2,3", "--vector", "subgroup:0,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["reports"][0]["theorem_id"], "support-up");
  EXPECT_NEAR(j["reports"][0]["ratio"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["environment"]["program"], "khup");
}

TEST(Cli, VarianceSweepExample) {
  const auto r = cli({"sweep", "heisenberg-q", "--q", "1.5:8:0.5", "--family", "fab", "--a", "2", "--b", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 15u);
  EXPECT_EQ(ls[0], "theorem_id,q,a,b,lhs,rhs,ratio,pass,seed");
  for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_NE(ls[i].find(",true,1"), std::string::npos) << ls[i];
}

TEST(Cli, Pg2CertifyExample) {
  const auto r = cli({"certify", "--construct", "pg2", "--q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_NEAR(j["certificate"]["k"].get<double>(), 9.0 / 7.0, 1e-12);
  EXPECT_EQ(j["seed"], 1);
}

TEST(Cli, PositionalConstruction) {
  const auto r = cli({"construct", "fourier", "--factors", "2,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["rows"], 12);
  EXPECT_EQ(j["data"].size(), 144u);
}

TEST(Cli, CounterexampleSweep) {
  const auto r = cli({"sweep", "counterexample", "--n", "4,16,64,256,1024", "--p", "2", "--q", "inf"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_NE(ls[i].find(",true,"), std::string::npos);
}

TEST(Cli, GcSweepIsMonotone) {
  const auto r = cli({"sweep", "family-gc", "--c", "1:100:11", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  double prev = 0;
  for (const auto& row : j["rows"]) {
    const double v = row["report"]["lhs"].get<double>();
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(Cli, RandomTrialSweep) {
  const auto r = cli({"sweep", "supp1-vs-supp2", "--n", "32", "--eps", "0.2,0.5", "--trials", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 401u);
  EXPECT_EQ(ls[0], "theorem_id,n,eps,trial,lhs,rhs,ratio,pass,seed");
}

TEST(Cli, ByteStable) {
  const std::vector<std::string> args = {"sweep", "primary-up", "--group", "16", "--trials", "50", "--seed", "7"};
  const auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = cli({"sweep", "primary-up", "--group", "16", "--trials", "50", "--seed", "8"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, ExitCodeTwoOnBadInput) {
  const auto unknown = cli({"check", "nope"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("donoho-stark"), std::string::npos);
  const auto construction = cli({"construct", "--construct", "nope"});
  EXPECT_EQ(construction.code, 2);
  EXPECT_NE(construction.err.find("sylvester"), std::string::npos);
  EXPECT_EQ(cli({"sweep", "primary-up", "--group", "4", "--eps", "1:0:1"}).code, 2);
  EXPECT_EQ(cli({"check", "hausdorff-young", "--group", "4", "--p", "3"}).code, 2);
  EXPECT_EQ(cli({"check", "donoho-stark", "--group", "6", "--vector", "subgroup:0,1"}).code, 2);
  EXPECT_EQ(cli({"check", "meshulam"}).code, 2);
  EXPECT_EQ(cli({"check", "primary-up", "--matrix", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(cli({"--bogus-flag"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"check", "heisenberg-q", "--lct", "1,0,0,1"}).code, 2);
}

TEST(Cli, ExitCodeOneOnViolation) {
  // Certified inputs cannot violate a theorem; a coverage grid that misses its span can.
  const auto r = cli({"check", "f-coverage", "--a", "2", "--c", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("violation"), std::string::npos);
}

TEST(Cli, MatchMissIsWarningOnly) {
  const auto r = cli({"check", "family-gc", "--c", "10", "--samples", "33"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_FALSE(j["reports"][0]["pass"].get<bool>());
  EXPECT_EQ(j["warnings"].size(), 1u);
}

TEST(Cli, MatrixFileRoundTrip) {
  const auto path = temp_file("matrix.json");
  ASSERT_EQ(cli({"construct", "sylvester", "--m", "3", "--out", path.string()}).code, 0);
  const auto r = cli({"certify", "--matrix", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["certificate"]["k"].get<double>(), 8.0, 1e-9);
  const auto c = cli({"check", "primary-up", "--matrix", path.string(), "--vector", "delta:2"});
  EXPECT_EQ(c.code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, GroupFileAndVectorFile) {
  const auto gpath = temp_file("group.json");
  {
    std::ofstream os(gpath);
    os << R"({"order": 3, "cayley": [[0,1,2],[1,2,0],[2,0,1]], "labels": ["e","a","b"]})";
  }
  const auto r = cli({"check", "meshulam", "--group", "file:" + gpath.string(), "--vector", "values:1,2,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto vpath = temp_file("vector.json");
  {
    std::ofstream os(vpath);
    os << R"({"rows": 3, "cols": 1, "data": [[1,0],[0,1],[0,0]]})";
  }
  EXPECT_EQ(cli({"check", "kuperberg", "--group", "file:" + gpath.string(), "--vector", "file:" + vpath.string()}).code, 0);
  std::filesystem::remove(gpath);
  std::filesystem::remove(vpath);
}

TEST(Cli, GridFunctionFile) {
  const auto path = temp_file("grid.json");
  {
    std::ofstream os(path);
    Json data = Json::array();
    const int n = 512;
    const double dx = 16.0 / n;
    for (int m = 0; m < n; ++m) {
      const double x = -(n - 1) * dx / 2 + m * dx;
      data.push_back({std::exp(-3.14159265358979 * x * x), 0.0});
    }
    os << Json{{"x0", -(n - 1) * dx / 2}, {"dx", dx}, {"samples", data}}.dump();
  }
  EXPECT_EQ(cli({"check", "primary-up-grid", "--function", "file:" + path.string()}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, NonAbelianAndGridChecks) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "kuperberg", "--group", "Q8"},
           {"check", "factor-4", "--group", "D4", "--vector", "random:3"},
           {"check", "n2-hadamard", "--group", "S3", "--trials", "20"},
           {"check", "min-support-up", "--group", "dihedral:5"},
           {"check", "heisenberg-q", "--lct", "1,2,0,1", "--q", "inf"},
           {"check", "moment-up", "--function", "gc", "--c", "3", "--r", "3", "--s", "4", "--q", "1.5"},
           {"check", "variance-bound", "--function", "lorentzian", "--q", "2"},
           {"check", "support-measure", "--transform", "lct:0,0.5,-2,0"},
           {"check", "approx-support-l2", "--construct", "paley", "--prime", "7", "--eps", "0.1", "--eta", "0.2"},
           {"search", "--construct", "fourier", "--group", "12"},
       }) {
    const auto r = cli(args);
    EXPECT_EQ(r.code, 0) << args[1] << ": " << r.err;
  }
}

TEST(Cli, ReportBattery) {
  const auto r = cli({"report"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], j["total"]);
  EXPECT_GT(j["total"].get<int>(), 25);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli({"--help"}).code, 0); }
