#include "gegenmetric/linear_form.hpp"
#include "gegenmetric_cli/run.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace gegenmetric::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gegenmetric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  const auto parsed = parse_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  r.code = parsed.config ? run(*parsed.config, out, err) : parsed.exit_code;
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, HamiltonianSingleSite) {
  const auto r = invoke({"hamiltonian", "--N", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["schema"], "v1");
  EXPECT_EQ(j["entries"], nlohmann::json::parse(R"([["0"]])"));
}

TEST(Cli, HamiltonianNumericInstantiation) {
  const auto r = invoke({"hamiltonian", "--N", "3", "--a", "1/2", "--digits", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["a"], "1/2");
  EXPECT_EQ(j["digits"], 20);
  EXPECT_EQ(j["exact"][0][1], "1");
  EXPECT_EQ(j["exact"][1][0], "1/3");
}

TEST(Cli, MetricN4MatchesGolden) {
  const auto r = invoke({"metric", "--N", "4", "--first-row", "k,b,c,d"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  const nlohmann::json* golden = nullptr;
  for (const auto& entry : test::oracle()["metrics"]) {
    if (entry["N"] == 4 && entry["first_row"][0] == "k") golden = &entry;
  }
  ASSERT_NE(golden, nullptr);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      // Round trip: emitted strings re-parse to the oracle's values.
      EXPECT_EQ(parse_linear_form(j["entries"][i][k].get<std::string>()),
                parse_linear_form((*golden)["entries"][i][k].get<std::string>()));
    }
  EXPECT_EQ(j["entries"][1][3], "(1+a)/(4*a+2*a^2)*c");
}

TEST(Cli, MetricNumericNeedsEveryParameter) {
  auto r = invoke({"metric", "--N", "3", "--first-row", "2*a^2,2*a*g,0", "--a", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("'g'"), std::string::npos) << r.err;
  r = invoke({"metric", "--N", "3", "--first-row", "2*a^2,2*a*g,0", "--a", "1", "--set",
              "g=1/2", "--digits", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["exact"][1][1], "2");
  EXPECT_EQ(j["exact"][2][2], "1");
  EXPECT_EQ(j["exact"][1][2], "1/2");
}

TEST(Cli, ResidualOfEmittedMetricIsZero) {
  const auto metric = invoke({"metric", "--N", "5", "--convention", "recurrence"});
  ASSERT_EQ(metric.code, 0);
  const auto path = std::filesystem::temp_directory_path() / "gegenmetric_cli_theta.json";
  {
    std::ofstream f(path);
    f << metric.out;
  }
  const auto r = invoke({"residual", "--N", "5", "--convention", "recurrence", "--theta",
                         path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json_of(r)["zero"].get<bool>());
  // The same metric is not a solution for the other convention.
  const auto path2 = std::filesystem::temp_directory_path() / "gegenmetric_cli_theta2.json";
  {
    std::ofstream f(path2);
    f << metric.out;
  }
  const auto other = invoke({"residual", "--N", "5", "--theta", path2.string()});
  std::filesystem::remove(path2);
  ASSERT_EQ(other.code, 0);
  EXPECT_FALSE(json_of(other)["zero"].get<bool>());
}

TEST(Cli, DomainToyExample) {
  const auto r = invoke({"domain", "--N", "3", "--a", "1", "--line", "toy", "--range", "-1:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  ASSERT_EQ(j["intervals"].size(), 1u);
  EXPECT_NEAR(j["intervals"][0][0].get<double>(), -0.816496580927726, 1e-10);
  EXPECT_NEAR(j["intervals"][0][1].get<double>(), 0.816496580927726, 1e-10);
  EXPECT_EQ(j["a0"], "1");
  EXPECT_EQ(j["digits"], 50);
  EXPECT_TRUE(j["line"]["sign_flip_symmetric"].get<bool>());
}

TEST(Cli, CustomLineAndCsvCurves) {
  const auto r = invoke({"curves", "--N", "3", "--line", "custom", "--base", "2*a^2,0,0",
                         "--direction", "0,2*a,0", "--grid", "3", "--format", "csv",
                         "--digits", "15"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t,p1,p2,p3");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  const auto svg = invoke({"curves", "--N", "3", "--line", "toy", "--grid", "9", "--format",
                           "svg", "--digits", "15"});
  ASSERT_EQ(svg.code, 0);
  EXPECT_NE(svg.out.find("p(g)"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"curves", "--N", "4", "--grid", "11", "--digits", "30"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  const auto d1 = invoke({"domain", "--N", "4", "--grid", "21"});
  const auto d2 = invoke({"domain", "--N", "4", "--grid", "21"});
  EXPECT_EQ(d1.out, d2.out);
}

TEST(Cli, SpectrumAndBasis) {
  auto r = invoke({"spectrum", "--N", "2", "--a", "1", "--digits", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["alpha"], "1");
  EXPECT_EQ(j["roots"].size(), 2u);
  EXPECT_EQ(j["roots"][1], "5.00000000000000000000e-01");
  r = invoke({"basis", "--N", "3", "--a", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json_of(r);
  EXPECT_EQ(j["basis"].size(), 3u);
  EXPECT_EQ(j["basis"][0][0][0], "1");
}

TEST(Cli, HermitizeReportsDefects) {
  auto r = invoke({"hermitize", "--N", "3", "--first-row", "2,1,0", "--digits", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["spectrum"].size(), 3u);
  EXPECT_LT(std::stod(j["symmetry_defect"].get<std::string>()), 1e-25);
  r = invoke({"hermitize", "--N", "3", "--first-row", "2,2,0"});
  EXPECT_EQ(r.code, 2);
  r = invoke({"hermitize", "--N", "3", "--first-row", "2,g,0"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, PreconditionViolationsExitTwoNamingTheField) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"hamiltonian", "--N", "3", "--convention", "sideways"}, "--convention"},
      {{"hamiltonian", "--N", "0"}, "--N"},
      {{"hamiltonian", "--N", "3", "--a", "x/2"}, "--a"},
      {{"hamiltonian", "--N", "3", "--a", "-1"}, "--a"},
      {{"spectrum", "--N", "3", "--digits", "10"}, "--digits"},
      {{"spectrum", "--N", "3", "--a", "0"}, "--a"},
      {{"metric", "--N", "3", "--first-row", "k,b"}, "--first-row"},
      {{"metric", "--N", "3", "--first-row", "k*b,1,1"}, "--first-row entry 1"},
      {{"domain", "--N", "3", "--range", "1"}, "--range"},
      {{"domain", "--N", "3", "--range", "1:-1"}, "--range"},
      {{"domain", "--N", "3", "--grid", "1"}, "--grid"},
      {{"domain", "--N", "4", "--line", "toy"}, "--line"},
      {{"domain", "--N", "3", "--line", "custom", "--base", "1,0,0", "--direction",
        "0,1/(a-1),0"},
       "--direction entry 2"},
      {{"domain", "--N", "3", "--refine-tol", "0"}, "--refine-tol"},
      {{"curves", "--N", "3", "--format", "pdf"}, "--format"},
      {{"curves", "--N", "3", "--ordering", "random"}, "--ordering"},
  };
  for (const auto& [args, field] : cases) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, 2) << args[0] << " " << r.err;
    EXPECT_NE(r.err.find(field), std::string::npos) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({"hamiltonian"}).code, 2);
}

TEST(Cli, WritesToOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "gegenmetric_cli_out.json";
  const auto r = invoke({"hamiltonian", "--N", "2", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["entries"][0][1], "1/(2*a)");
  std::filesystem::remove(path);
}

TEST(Cli, DigitsDefaultComesFromEnvironment) {
  ::setenv("GEGENMETRIC_DIGITS", "30", 1);
  EXPECT_EQ(default_digits(), 30);
  ::setenv("GEGENMETRIC_DIGITS", "7", 1);
  EXPECT_EQ(default_digits(), 50);
  ::setenv("GEGENMETRIC_DIGITS", "abc", 1);
  EXPECT_EQ(default_digits(), 50);
  ::unsetenv("GEGENMETRIC_DIGITS");
  EXPECT_EQ(default_digits(), 50);
}

}  // namespace
}  // namespace gegenmetric::cli
