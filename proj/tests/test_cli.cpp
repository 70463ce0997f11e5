#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ginient/cli.hpp"
#include "ginient/sample.hpp"

using namespace ginient;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ginient-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, Version) {
  const Result r = run_cli({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ginient 1.0.0"), std::string::npos);
}

TEST(Cli, DiscreteEntropy) {
  const Result r = run_cli({"entropy", "--alpha", "0.5", "--probs", "0.5,0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 8), "0.585786");
  EXPECT_EQ(run_cli({"entropy", "--alpha", "1", "--probs", "0.5,0.5"}).out.substr(0, 8), "0.693147");
}

TEST(Cli, ContinuousEntropy) {
  const Result r = run_cli({"entropy", "--alpha", "0.5", "--family", "exponential", "--theta", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(std::stod(r.out), 2.0 / 3.0, 1e-10);
}

TEST(Cli, CompareCsvTable) {
  const Result r = run_cli({"compare", "--data", "builtin", "--nu", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0], "family,mle,loglik,ks,pvalue,aic,bic,n");
  EXPECT_EQ(rows[1].substr(0, 12), "maxentlomax,");
  const auto cells = split_csv_record(rows[1]);
  EXPECT_NEAR(std::stod(cells[5]), 172.8832, 1e-4);
}

TEST(Cli, CompareIsByteStable) {
  const Result a = run_cli({"compare", "--data", "builtin"});
  const Result b = run_cli({"compare", "--data", "builtin"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("172.8832"), std::string::npos);
}

TEST(Cli, CompareJsonShape) {
  const Result r = run_cli({"compare", "--data", "builtin", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dataset"], "ca-earthquake-1971-1994");
  EXPECT_EQ(j["nu"], 3.0);
  EXPECT_EQ(j["n"], 24);
  ASSERT_EQ(j["reports"].size(), 8u);
  for (const char* key : {"family", "mle", "loglik", "ks", "pvalue", "aic", "bic", "n"}) {
    EXPECT_TRUE(j["reports"][0].contains(key)) << key;
  }
}

TEST(Cli, CompareWritesFileAtomically) {
  const fs::path p = temp_path("compare.csv");
  fs::remove(p);
  const Result r = run_cli({"compare", "--data", "builtin", "--format", "csv", "--out", p.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run_cli({"compare", "--data", "builtin", "--format", "csv"}).out);
  for (const auto& entry : fs::directory_iterator(p.parent_path())) {
    EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos) << entry.path();
  }
}

TEST(Cli, FitExponential) {
  const Result r = run_cli({"fit", "--family", "exponential", "--data", "builtin"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.009333437"), std::string::npos);
  const Result j = run_cli({"fit", "--family", "exponential", "--data", "builtin", "--format", "json"});
  EXPECT_NEAR(nlohmann::json::parse(j.out)["mle"].get<double>(), 0.009333437, 1e-9);
}

TEST(Cli, FitFromCsvFile) {
  const fs::path p = temp_path("data.csv");
  write_csv(builtin_dataset(), p);
  const Result r = run_cli({"fit", "--family", "maxentlomax", "--data", p.string(), "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("maxentlomax,0.96976"), std::string::npos);
}

TEST(Cli, InequalityModelsAndData) {
  EXPECT_NEAR(std::stod(run_cli({"inequality", "--index", "gini", "--family", "exponential", "--theta", "2"}).out), 0.5,
              1e-9);
  EXPECT_NEAR(
      std::stod(run_cli({"inequality", "--index", "ggini", "--nu", "3", "--family", "exponential", "--theta", "2"}).out),
      2.0 / 3.0, 1e-9);
  EXPECT_NEAR(std::stod(run_cli({"inequality", "--index", "gmd", "--family", "exponential", "--theta", "4"}).out), 0.25,
              1e-9);
  const Result d = run_cli({"inequality", "--index", "gini", "--data", "builtin"});
  EXPECT_EQ(d.code, 0);
  EXPECT_GT(std::stod(d.out), 0.9);
  const Result lorenz = run_cli({"inequality", "--index", "lorenz", "--family", "lindley", "--theta", "1", "--grid", "11"});
  EXPECT_EQ(lorenz.code, 0);
  EXPECT_EQ(lines(lorenz.out).size(), 12u);
  EXPECT_EQ(lines(lorenz.out).front(), "u,L");
}

TEST(Cli, MonteCarloCrossCheckIsSeeded) {
  const std::vector<std::string> args = {"--seed", "5", "inequality", "--index", "gini", "--family", "exponential",
                                         "--theta", "1", "--mc-draws", "2000"};
  const Result a = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run_cli(args).out);
  EXPECT_NE(a.out.find("monte-carlo"), std::string::npos);
}

TEST(Cli, PathwayGrid) {
  const Result r = run_cli({"pathway", "--alpha", "0", "--a", "1", "--delta", "1", "--gamma", "1", "--grid", "4",
                            "--xmax", "0.8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "x,f,F");
  const auto cells = split_csv_record(rows[2]);  // x = 0.4, f = 2 (1 - x), F = 1 - (1 - x)^2
  EXPECT_NEAR(std::stod(cells[1]), 1.2, 1e-9);
  EXPECT_NEAR(std::stod(cells[2]), 0.64, 1e-9);
  EXPECT_EQ(run_cli({"pathway", "--alpha", "1", "--a", "1", "--delta", "1", "--gamma", "1", "--grid", "2", "--xmax",
                     "1"})
                .code,
            0);
}

TEST(Cli, UsageErrorsExitOne) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"--bogus"},
           {"fit", "--family", "lomax", "--data", "builtin"},
           {"fit", "--family", "akash"},
           {"fit", "--family", "akash", "--data", "builtin", "--format", "xml"},
           {"entropy", "--alpha", "0.5"},
           {"inequality", "--index", "theil", "--data", "builtin"},
           {"compare", "--data", "builtin", "--unknown-flag"},
       }) {
    const Result r = run_cli(args);
    EXPECT_EQ(r.code, 1) << (args.empty() ? "" : args[0]);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
  }
}

TEST(Cli, DataAndDomainErrorsExitTwo) {
  const fs::path bad = temp_path("bad.csv");
  std::ofstream(bad) << "1.0\n2.0\nabc\n";
  const Result r = run_cli({"fit", "--family", "akash", "--data", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run_cli({"fit", "--family", "akash", "--data", temp_path("nope.csv").string()}).code, 2);
  const Result dom = run_cli({"entropy", "--alpha", "2.5", "--probs", "1"});
  EXPECT_EQ(dom.code, 2);
  EXPECT_NE(dom.err.find("alpha"), std::string::npos);
  EXPECT_EQ(run_cli({"entropy", "--alpha", "0.5", "--probs", "0.5,0.6"}).code, 2);
}

TEST(Cli, NumericErrorsExitThree) {
  const Result r = run_cli({"inequality", "--index", "gini", "--family", "maxentlomax", "--theta", "0.9697608",
                            "--model-nu", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("infinite"), std::string::npos);
}
