#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "benchmark_suite.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "report_io.hpp"

using namespace rootclust;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "rootclust");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string strip_stats(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  j.erase("stats");
  return j.dump();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST(ParseFamilySpec, NameAndParameters) {
  auto [name, params] = parse_family_spec("mignotte:a=14,d=64");
  EXPECT_EQ(name, "mignotte");
  EXPECT_EQ(params.at("a"), 14);
  EXPECT_EQ(params.at("d"), 64);
  EXPECT_THROW(parse_family_spec("mignotte:a"), std::invalid_argument);
  EXPECT_THROW(parse_family_spec("mignotte:a=x"), std::invalid_argument);
  EXPECT_THROW(parse_family_spec(":a=1"), std::invalid_argument);
}

TEST(ParseRoi, ExactComponents) {
  const Box b = parse_roi("-1.75,0,0.0625");
  EXPECT_EQ(b.center.re, Dyadic(-7).mul_2exp(-2));
  EXPECT_EQ(b.width, Dyadic(1).mul_2exp(-4));
  EXPECT_THROW(parse_roi("0,0"), std::invalid_argument);
  EXPECT_THROW(parse_roi("0,0,-1"), std::invalid_argument);
  EXPECT_THROW(parse_roi("0.1,0,1"), std::invalid_argument);
}

TEST(RunCli, MignotteJsonReport) {
  const auto r = run({"--family", "mignotte:a=14,d=16", "--roi", "0,0,16", "--eps", "53", "--algo", "real-ps",
                      "--out", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["degree"], 16);
  EXPECT_EQ(j["algo"], "real-ps");
  EXPECT_EQ(j["epsilon_exp"], 53);
  EXPECT_EQ(j["roi"]["w"], "16");
  EXPECT_EQ(j["clusters"].size(), 15u);
  long total = 0;
  for (const auto& c : j["clusters"]) total += c["multiplicity"].get<long>();
  EXPECT_EQ(total, 16);
  for (const char* key : {"depth", "tree_size", "c0_calls", "cstar_calls", "pstar_calls", "tstar_calls", "wall_ms"}) {
    EXPECT_TRUE(j["stats"].contains(key)) << key;
  }
}

TEST(RunCli, DefaultAlgorithmDependsOnRealness) {
  const auto real = run({"--family", "mandelbrot:k=3", "--roi", "0,0,8", "--eps", "20"});
  ASSERT_EQ(real.code, 0) << real.err;
  EXPECT_EQ(nlohmann::json::parse(real.out)["algo"], "real-ps");
  const std::string path = temp_path("rc_cli_complex.txt");
  std::ofstream(path) << "0,1\n0\n1\n";
  const auto cplx = run({"--poly", path, "--roi", "0,0,4", "--eps", "20"});
  ASSERT_EQ(cplx.code, 0) << cplx.err;
  EXPECT_EQ(nlohmann::json::parse(cplx.out)["algo"], "ps");
}

TEST(RunCli, JsonRoundTripIsExact) {
  const auto r = run({"--family", "mandelbrot:k=4", "--roi", "0,0,1000", "--eps", "53", "--stats"});
  ASSERT_EQ(r.code, 0) << r.err;
  const ClusterReport parsed = parse_report_json(r.out);
  EXPECT_EQ(parsed.clusters.size(), 15u);
  EXPECT_EQ(emit_report(parsed, OutputFormat::csv), run({"--family", "mandelbrot:k=4", "--roi", "0,0,1000",
                                                          "--eps", "53", "--out", "csv"}).out);
  EXPECT_EQ(strip_stats(emit_report(parsed, OutputFormat::json)), strip_stats(r.out));
  EXPECT_TRUE(nlohmann::json::parse(r.out)["stats"].contains("pstar_precisions"));
}

TEST(RunCli, OutputIsDeterministic) {
  const std::vector<std::string> args{"--family", "runnels:k=4", "--roi", "0,0,1000", "--eps", "40"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip_stats(a.out), strip_stats(b.out));
  auto csv = args;
  csv.insert(csv.end(), {"--out", "csv"});
  EXPECT_EQ(run(csv).out, run(csv).out);
}

TEST(RunCli, TextSvgAndOutPath) {
  const std::string path = temp_path("rc_cli_out.svg");
  std::remove(path.c_str());
  const auto r = run({"--family", "mignotte:a=4,d=8", "--roi", "0,0,8", "--eps", "30", "--out", "svg",
                      "--out-path", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream svg;
  svg << in.rdbuf();
  const std::string text = svg.str();
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  std::size_t circles = 0;
  for (std::size_t pos = text.find("<circle"); pos != std::string::npos; pos = text.find("<circle", pos + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 8u);
  const auto txt = run({"--family", "mignotte:a=4,d=8", "--roi", "0,0,8", "--eps", "30", "--out", "txt"});
  EXPECT_NE(txt.out.find("8 clusters, total multiplicity 8"), std::string::npos);
}

TEST(RunCli, UsageErrors) {
  EXPECT_EQ(run({"--family", "mignotte:a=14"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--family", "mignotte:a=3,d=5", "--algo", "bogus"}).code, 1);
  EXPECT_EQ(run({"--family", "mignotte:a=3,d=5", "--out", "xml"}).code, 1);
  EXPECT_EQ(run({"--family", "mignotte:a=3,d=5", "--roi", "1,2"}).code, 1);
  EXPECT_EQ(run({"--family", "mignotte:a=3,d=5", "--poly", "x.txt"}).code, 1);
  EXPECT_EQ(run({"--family", "mignotte:a=3,d=5", "--roi", "0,1,4", "--algo", "real"}).code, 1);
  const auto missing = run({"--family", "mignotte:a=14"});
  EXPECT_NE(missing.err.find("d"), std::string::npos);
  EXPECT_NE(missing.err.find("--family"), std::string::npos);
  const std::string bad = temp_path("rc_cli_bad.txt");
  std::ofstream(bad) << "1\nabc\n";
  const auto fe = run({"--poly", bad});
  EXPECT_EQ(fe.code, 1);
  EXPECT_NE(fe.err.find(":2:"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(RunCli, SolverErrors) {
  const auto r = run({"--family", "mignotte:a=14,d=16", "--roi", "0,0,4", "--eps", "53", "--max-depth", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("depth"), std::string::npos);
}

TEST(RunCli, VerifyAndAnnulus) {
  const auto ok = run({"--family", "mandelbrot:k=3", "--roi", "0,0,8", "--eps", "30", "--verify",
                       "--check-annulus"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(ok.err.empty()) << ok.err;
  // Roots of Man_3 lie in [-2, 0.5]; a region of width 1 around -1.5 leaves some in the annulus.
  const auto warn = run({"--family", "mandelbrot:k=3", "--roi", "-0.25,0,1", "--eps", "20", "--check-annulus"});
  EXPECT_NE(warn.err.find("warning"), std::string::npos);
}

TEST(Executable, RunsFromTheCommandLine) {
  const std::string out = temp_path("rc_exe.json");
  const std::string cmd = std::string(ROOTCLUST_CLI_PATH) + " --family mignotte:a=3,d=5 --roi 0,0,4 --eps 20 --out-path " + out;
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(out);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(s.str())["degree"], 5);
  EXPECT_NE(std::system((std::string(ROOTCLUST_CLI_PATH) + " --family nosuch:k=1 2>/dev/null").c_str()), 0);
}

TEST(BenchmarkSuite, QuickSuiteRowsAreConsistent) {
  EXPECT_EQ(suite_cases("paper-table3").size(), 8u);
  EXPECT_EQ(suite_cases("paper-table1").size(), 6u);
  EXPECT_THROW(suite_cases("nope"), std::invalid_argument);
  const auto rows = benchmark_run("quick");
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.consistent) << r.label;
    EXPECT_EQ(r.runs.size(), 3u);
    EXPECT_EQ(r.total_multiplicity, r.degree) << r.label;
  }
  const std::string csv = bench_csv(rows);
  EXPECT_NE(csv.find("t1_over_t3"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}
