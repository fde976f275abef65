#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace precint::cli {
namespace {

const std::string kExample = "(x+2)^2 + x*S^2 + (x+2)*S^3";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SolutionTable) {
  const Result r = call({"solutions", "-L", kExample, "--orbit", "0", "--from", "-2", "--to", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("b_1: 1 | 0 | 0 | -q | (-q + q^2)/(1 + q)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("b_3: 0 | 0 | 1 | (2 - q)/q | (2 - 3*q + q^2)/(q + q^2)"), std::string::npos) << r.out;
}

TEST(Cli, SolutionTableJson) {
  const Result r = call({"solutions", "-L", "S - (x+1)", "--orbit", "0", "--from", "0", "--to", "1", "--anchor", "0",
                         "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["solutions"][0][1]["num"], "1 + q");
  EXPECT_EQ(j["solutions"][0][1]["den"], "1");
}

TEST(Cli, Values) {
  EXPECT_EQ(call({"val", "-L", kExample, "-B", "S", "--at", "0"}).out, "-1\n");
  EXPECT_EQ(call({"val", "-L", kExample, "-B", "1", "--at", "0"}).out, "0\n");
  EXPECT_EQ(call({"val", "-L", kExample, "-B", "x*S", "--at", "0"}).out, "0\n");
  const Result high = call({"val", "-L", kExample, "-B", "S^3", "--at", "0"});
  EXPECT_EQ(high.code, kUsageError);
  EXPECT_NE(high.err.find("reduce"), std::string::npos);
}

TEST(Cli, Growth) {
  const Result r = call({"growth", "-L", kExample, "--orbit", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["growths"], nlohmann::json({1, 0, -1}));
}

TEST(Cli, LocalBasis) {
  const Result r = call({"local-basis", "-L", kExample, "--at", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("B_2 = (-2 + x)/x^2 + (1/x)*S"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("B_3 = -2/x + S^2"), std::string::npos) << r.out;
}

TEST(Cli, GlobalBasisJsonSchemaAndStability) {
  const std::vector<std::string> args{"global-basis", "-L", kExample, "--right-bound", "Z=0", "--format", "json"};
  const Result a = call(args), b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["order"], 3);
  EXPECT_EQ(j["basis"].size(), 3u);
  EXPECT_EQ(j["basis"][1][0]["num"], "-2 + x");
  EXPECT_EQ(j["basis"][1][0]["den"], "x^2");
  EXPECT_EQ(j["verified_points"], nlohmann::json({"-2", "-1", "0"}));
}

TEST(Cli, MissingRightBound) {
  const Result r = call({"global-basis", "-L", kExample});
  EXPECT_EQ(r.code, kMissingRightBound);
  EXPECT_NE(r.err.find("orbit Z"), std::string::npos);
  EXPECT_NE(r.err.find("growth"), std::string::npos);
}

TEST(Cli, TrivialOperator) {
  const Result r = call({"global-basis", "-L", "S^2-1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("B_1 = 1\nB_2 = S\n"), std::string::npos);
  EXPECT_EQ(call({"verify", "-L", "S^2-1"}).code, 0);
}

TEST(Cli, VerifyComputedAndScaledBases) {
  EXPECT_EQ(call({"verify", "-L", kExample, "--right-bound", "Z=0", "--samples", "50"}).code, 0);
  const Result g = call({"global-basis", "-L", kExample, "--right-bound", "Z=0", "--format", "json"});
  auto j = nlohmann::json::parse(g.out);
  // Scale the second row by x.
  for (auto& e : j["basis"][1]) {
    if (e["num"] != "0") e["num"] = "x*(" + e["num"].get<std::string>() + ")";
  }
  const std::string path = ::testing::TempDir() + "precint_scaled_basis.json";
  std::ofstream(path) << j.dump();
  const Result r = call({"verify", "-L", kExample, "--right-bound", "Z=0", "--basis", path, "--samples", "50"});
  EXPECT_EQ(r.code, kVerificationFailed) << r.out << r.err;
  EXPECT_NE(r.out.find("module-equal no"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, Discriminant) {
  EXPECT_EQ(call({"discriminant", "-L", kExample, "--at", "0"}).out, "1\n");
  EXPECT_EQ(call({"discriminant", "-L", kExample, "--at", "0", "--row", "1", "--row", "(x-2)/x^2 + (1/x)*S", "--row",
                  "-2/x + S^2"})
                .out,
            "0\n");
}

TEST(Cli, AlgebraicPipeline) {
  const Result r = call({"global-basis", "-L", "x^2 - 2 + S^2", "--right-bound", "x^2-2=1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verified: root(-2 + x^2) root(-2 + x^2)+1"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsageError);
  EXPECT_EQ(call({"val", "-L", "x + "}).code, kUsageError);
  const Result r = call({"val", "-L", "x + * S", "-B", "1", "--at", "0"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("position 4"), std::string::npos);
  EXPECT_EQ(call({"val", "-L", kExample, "-B", "1", "--at", "root(x^2-1)"}).code, kUsageError);
  EXPECT_EQ(call({"global-basis", "-L", kExample, "--right-bound", "Z"}).code, kUsageError);
  EXPECT_EQ(call({"solutions", "-L", kExample, "--orbit", "0", "--from", "2", "--to", "1"}).code, kUsageError);
  EXPECT_EQ(call({"--help"}).code, 0);
}

}  // namespace
}  // namespace precint::cli
