#include "rootcircles/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace rootcircles::cli {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ModelSpecs, RoundTrip) {
  const std::vector<std::string> canonical = {
      "projective:4",    "quadric:5",        "grassmannian:2,5",
      "flag:1,2,1",      "spinor:5",         "lagrangian:3",
  };
  for (const auto& s : canonical) EXPECT_EQ(format_model(parse_model(s)), s);
  // formatting is idempotent even when parsing canonicalizes
  for (const auto& s : canonical) {
    const auto once = format_model(parse_model(s));
    EXPECT_EQ(format_model(parse_model(once)), once);
  }
}

TEST(ModelSpecs, GrassmannianOfLinesCanonicalizesToProjective) {
  EXPECT_EQ(format_model(parse_model("grassmannian:1,4")), "projective:3");
  EXPECT_EQ(format_model(parse_model("grassmannian:3,4")), "projective:3");
  EXPECT_EQ(format_model(parse_model("grassmannian:2,4")), "grassmannian:2,4");
}

TEST(ModelSpecs, ParseErrors) {
  EXPECT_THROW(parse_model(""), std::invalid_argument);
  EXPECT_THROW(parse_model("projective"), std::invalid_argument);
  EXPECT_THROW(parse_model("projective:"), std::invalid_argument);
  EXPECT_THROW(parse_model("projective:0"), std::invalid_argument);
  EXPECT_THROW(parse_model("projective:2,3"), std::invalid_argument);
  EXPECT_THROW(parse_model("mobius:3"), std::invalid_argument);
  EXPECT_THROW(parse_model("grassmannian:4,4"), std::invalid_argument);
  EXPECT_THROW(parse_model("flag:"), std::invalid_argument);
  EXPECT_THROW(parse_model("flag:1,x"), std::invalid_argument);
}

TEST(Cli, ReportProjectivePlaneJson) {
  const auto r = run_cli({"report", "--model", "projective:2", "--all-alphas",
                          "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc.at("model").get<std::string>(), "projective:2");
  EXPECT_EQ(doc.at("dim_g").get<int>(), 8);
  EXPECT_EQ(doc.at("dim_gp").get<int>(), 2);
  const auto& alphas = doc.at("alphas");
  ASSERT_EQ(alphas.size(), 2u);
  for (const auto& entry : alphas) {
    const auto& tangent = entry.at("tangent");
    EXPECT_EQ(tangent.at("2").get<int>(), 1);
    EXPECT_EQ(tangent.at("1").get<int>(), 1);
    // degree keys are emitted highest-first
    std::vector<std::string> keys;
    for (auto it = tangent.begin(); it != tangent.end(); ++it)
      keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"2", "1"}));
    EXPECT_EQ(entry.at("curvature").at("-3").get<int>(), 8);
    EXPECT_EQ(entry.at("h0").get<int>(), 0);
    EXPECT_EQ(entry.at("alpha_slot_max_degree").get<int>(), -3);
    EXPECT_TRUE(entry.at("contraction_vanishes").get<bool>());
    EXPECT_EQ(entry.at("strings").size(), 2u);
  }
  EXPECT_TRUE(doc.at("verdict").get<bool>());
}

TEST(Cli, ReportSingleAlphaText) {
  const auto r = run_cli(
      {"report", "--model", "projective:2", "--alpha=-1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alpha = (-1,0)"), std::string::npos);
  EXPECT_NE(r.out.find("O(2) + O(1)"), std::string::npos);
  EXPECT_NE(r.out.find("O(-3)^8"), std::string::npos);
  EXPECT_NE(r.out.find("contraction vanishes"), std::string::npos);
}

TEST(Cli, ReportRejectsNonOmittedAlpha) {
  const auto r = run_cli(
      {"report", "--model", "projective:2", "--alpha=0,-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(0,-1)"), std::string::npos);
  EXPECT_NE(r.err.find("not an omitted root"), std::string::npos);
  // the message lists the valid choices
  EXPECT_NE(r.err.find("(-1,0)"), std::string::npos);
  EXPECT_NE(r.err.find("(-1,-1)"), std::string::npos);
}

TEST(Cli, ReportRequiresAlphaSelection) {
  const auto r = run_cli({"report", "--model", "projective:2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, GenericParabolicViaTypeAndCross) {
  const auto r = run_cli({"flatness", "--type", "D4", "--cross", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  // six omitted root circles, every one of them flat
  size_t count = 0;
  size_t pos = 0;
  while ((pos = r.out.find("vanishes", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  EXPECT_EQ(count, 6u);
  EXPECT_NE(r.out.find("verdict: flat"), std::string::npos);
}

TEST(Cli, FlatnessJsonMatchesReportAllAlphas) {
  const auto a = run_cli({"flatness", "--model", "lagrangian:2", "--format",
                          "json"});
  const auto b = run_cli({"report", "--model", "lagrangian:2", "--all-alphas",
                          "--format", "json"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AuditGrassmannianFlagsOffByOne) {
  const auto r = run_cli({"audit", "--model", "grassmannian:2,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(i,j)=(3,1)"), std::string::npos);
  EXPECT_NE(r.out.find("off_by_one"), std::string::npos);
  EXPECT_NE(r.out.find("equal"), std::string::npos);
  // audits report discrepancies without failing
  EXPECT_EQ(run_cli({"audit", "--model", "spinor:4"}).code, 0);
  EXPECT_EQ(run_cli({"audit", "--model", "lagrangian:2"}).code, 0);
}

TEST(Cli, AuditRejectsModelsWithoutClosedFormCounts) {
  const auto r = run_cli({"audit", "--model", "quadric:5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("quadric:5"), std::string::npos);
}

TEST(Cli, RootsSubcommand) {
  const auto r = run_cli({"roots", "--type", "B2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("B2"), std::string::npos);
  EXPECT_NE(r.out.find("dim g = 10"), std::string::npos);
  EXPECT_NE(r.out.find("(1,2)"), std::string::npos);  // highest root
  EXPECT_NE(r.out.find("positive roots (4)"), std::string::npos);
}

TEST(Cli, P1Subcommand) {
  const auto r = run_cli({"p1", "--rep", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("weights: 2 0 -2"), std::string::npos);
  EXPECT_NE(r.out.find("O(0)^3"), std::string::npos);
  EXPECT_NE(r.out.find("equivariantly trivial: yes"), std::string::npos);

  const auto s = run_cli({"p1", "--rep", "1,1"});
  ASSERT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("O(-1)"), std::string::npos);
  EXPECT_NE(s.out.find("equivariantly trivial: no"), std::string::npos);
}

TEST(Cli, RankThreeDSeriesGetsANote) {
  const auto r = run_cli({"report", "--model", "quadric:4", "--all-alphas",
                          "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("D3"), std::string::npos);
  EXPECT_NO_THROW(nlohmann::ordered_json::parse(r.out));

  const auto t = run_cli({"report", "--model", "quadric:4", "--all-alphas"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("D3"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"report"}).code, 2);  // no model
  EXPECT_EQ(run_cli({"report", "--model", "mobius:3", "--all-alphas"}).code, 2);
  EXPECT_EQ(run_cli({"report", "--model", "projective:2", "--type", "A2",
                     "--cross", "1", "--all-alphas"})
                .code,
            2);  // ambiguous model selection
  EXPECT_EQ(run_cli({"roots", "--type", "Z9"}).code, 2);
  EXPECT_EQ(run_cli({"p1", "--rep", "2"}).code, 2);
  EXPECT_EQ(run_cli({"p1", "--rep", "2,0"}).code, 2);
  const auto bad = run_cli({"roots", "--type", "Z9"});
  EXPECT_NE(bad.err.find("Z9"), std::string::npos);
}

TEST(Cli, OutputIsByteDeterministic) {
  const std::vector<std::vector<std::string>> invocations = {
      {"report", "--model", "spinor:4", "--all-alphas", "--format", "json"},
      {"flatness", "--type", "F4", "--cross", "1,4"},
      {"audit", "--model", "flag:1,1,1"},
      {"roots", "--type", "G2"},
  };
  for (const auto& args : invocations) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.err, second.err);
  }
}

TEST(Cli, HelpExitsCleanly) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"report", "--help"}).code, 0);
}

}  // namespace
}  // namespace rootcircles::cli
