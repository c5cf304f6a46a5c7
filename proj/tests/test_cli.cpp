#include <gtest/gtest.h>

#include <sstream>

#include "csp/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "csp_cli");
  std::ostringstream out, err;
  const int code = csp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyYTwoTwoJson) {
  const auto r = invoke({"verify", "--family", "thm-word-bicsp-Y", "--n", "2", "--k", "2", "--output", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 4u);
  EXPECT_TRUE(j["all_ok"].get<bool>());
  for (const auto& row : j["rows"]) EXPECT_TRUE(row["ok"].get<bool>());
}

TEST(Cli, EmptyLocusWarnsButSucceeds) {
  const auto r = invoke({"locus", "--family", "Y", "--n", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 points"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, PolyWeakCompositions) {
  const auto r = invoke({"poly", "--family", "wcomp-csp", "--n", "2", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + q + q^2\n");
}

TEST(Cli, UnknownFamilyIsUsageError) {
  const auto r = invoke({"verify", "--family", "no-such-thing", "--n", "2", "--k", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, MissingSubcommandAndBadFlagsAreUsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"poly", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"poly", "--family", "wcomp-csp", "--n", "two"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--family", "word-bicsp-X", "--n", "2", "--k", "2", "--output", "yaml"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--family", "word-bicsp-Y", "--n", "3", "--k", "2"}).code, 2);
  EXPECT_EQ(invoke({"locus", "--family", "tanisaki", "--mu", "2,1", "--a", "1"}).code, 2);
}

TEST(Cli, BudgetExceededIsResourceError) {
  const auto r = invoke({"harmonics", "--locus", "X", "--n", "4", "--k", "6", "--hilbert"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, HarmonicsModes) {
  EXPECT_EQ(invoke({"harmonics", "--locus", "Z", "--n", "3", "--k", "2", "--check-presentation"}).code, 0);
  EXPECT_EQ(invoke({"harmonics", "--locus", "X", "--n", "2", "--k", "3", "--frobenius"}).code, 0);
  const auto h = invoke({"harmonics", "--locus", "Y", "--n", "2", "--k", "2", "--hilbert", "--output", "json"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(nlohmann::json::parse(h.out)["hilbert"], "1 + q");
  const auto o = invoke({"harmonics", "--locus", "Y", "--n", "2", "--k", "2", "--oracle", "Hr", "--output", "json"});
  EXPECT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["oracle"], "1");
  EXPECT_TRUE(j["matches_closed_form"].get<bool>());
  EXPECT_EQ(invoke({"harmonics", "--locus", "X", "--n", "2", "--k", "2", "--hilbert", "--frobenius"}).code, 2);
  EXPECT_EQ(invoke({"harmonics", "--locus", "X", "--n", "2", "--k", "2", "--check-presentation", "--recipe", "hrs"}).code,
            2);
}

TEST(Cli, TanisakiThroughCli) {
  const auto r = invoke({"verify", "--family", "tanisaki-bicsp", "--mu", "2,1,2,1", "--a", "2", "--output", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["params"]["a"], 2);
  EXPECT_EQ(j["rows"].size(), 12u);
}

TEST(Cli, OutputFormats) {
  const std::vector<std::string> base{"verify", "--family", "subset-csp", "--n", "2", "--k", "3", "--output"};
  auto with = [&](const std::string& fmt) {
    auto args = base;
    args.push_back(fmt);
    return invoke(args);
  };
  EXPECT_EQ(with("csv").out.rfind("r,s,fixed,value,ok\n", 0), 0u);
  EXPECT_NE(with("latex").out.find("\\end{tabular}"), std::string::npos);
  EXPECT_NE(with("pretty").out.find("all checks passed"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify", "--family", "necklace-X", "--n", "4", "--k", "3", "--output", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, SuiteSingleCriterion) {
  const auto r = invoke({"suite", "--criterion", "5", "--max-n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("criterion 5"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}
