#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace harvest::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Ht(std::vector<std::string> args) {
  args.insert(args.begin(), "ht");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) { return oracle::DataPath(name).string(); }

std::filesystem::path TempFile(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("ht_cli_" + name);
  std::ofstream(path) << body;
  return path;
}

TEST(CliTest, Game) {
  const Result r = Ht({"game", Data("napa.csv"), "--price", "1.70"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* v : {"148500", "170100", "109600", "348300", "312000",
                        "356400", "554400"}) {
    EXPECT_NE(r.out.find(v), std::string::npos) << v;
  }
}

TEST(CliTest, Value) {
  const Result r = Ht({"value", Data("napa.csv"), "--price", "1.70",
                       "--coalition", "2,3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("v = 356400"), std::string::npos) << r.out;
  const Result by_id = Ht({"value", Data("korca_case1.csv"), "--price", "0.70",
                           "--coalition", "24", "--ids"});
  EXPECT_EQ(by_id.code, kExitOk);
  EXPECT_NE(by_id.out.find("{24}"), std::string::npos);
}

TEST(CliTest, AllocHtrDefaultsToHalfThresholds) {
  const Result r = Ht({"alloc", Data("napa.csv"), "--price", "1.70",
                       "--method", "htr"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("(173250, 214725, 166425)"), std::string::npos) << r.out;
}

TEST(CliTest, AllocExplicitRates) {
  const Result btc = Ht({"alloc", Data("napa.csv"), "--price", "1.70",
                         "--method", "btc", "--alpha", "0.0833333333333333"});
  EXPECT_NE(btc.out.find("(163350, 202125, 188925)"), std::string::npos);
  const Result co = Ht({"alloc", Data("napa.csv"), "--price", "1.70",
                        "--method", "co"});
  EXPECT_NE(co.out.find("(178200, 170100, 206100)"), std::string::npos);
  const Result above = Ht({"alloc", Data("napa.csv"), "--price", "1.70",
                           "--method", "htr", "--alpha", "0.1"});
  EXPECT_EQ(above.code, kExitInputError);
  EXPECT_NE(above.err.find("ParamAboveHalfThreshold"), std::string::npos);
}

TEST(CliTest, Thresholds) {
  const Result r = Ht({"thresholds", Data("napa.csv"), "--price", "1.70",
                       "--binding"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("alpha_bar = 0.166667"), std::string::npos);
  EXPECT_NE(r.out.find("beta_bar = 0.218341"), std::string::npos);
  EXPECT_NE(r.out.find("{1} plain"), std::string::npos);
  EXPECT_NE(r.out.find("{2,3} pi"), std::string::npos);
}

TEST(CliTest, Props) {
  const Result r = Ht({"props", Data("napa.csv"), "--price", "1.70"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("convex         fails"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("198000 < v(S) - v(S\\i) = 202400"), std::string::npos);
}

TEST(CliTest, CheckCore) {
  const auto good = TempFile("good.csv", "id,amount\n1,173250\n2,214725\n3,166425\n");
  const Result in = Ht({"check-core", Data("napa.csv"), "--price", "1.70",
                        "--alloc", good.string()});
  EXPECT_EQ(in.code, kExitOk);
  EXPECT_EQ(in.out.rfind("in core", 0), 0u) << in.out;
  const auto bad = TempFile("bad.csv", "id,amount\n1,100000\n2,250000\n3,204400\n");
  const Result out = Ht({"check-core", Data("napa.csv"), "--price", "1.70",
                         "--alloc", bad.string()});
  EXPECT_EQ(out.code, kExitOk);
  EXPECT_NE(out.out.find("not in core"), std::string::npos);
  EXPECT_NE(out.out.find("violated by {1}"), std::string::npos);
}

TEST(CliTest, SimulateCostsIsSeeded) {
  const auto base = TempFile("base.csv", "id,harvest_kg,capacity_kg\n1,10,20\n2,5,3\n");
  const std::vector<std::string> args{"simulate-costs", base.string(), "--mean",
                                      "0.495", "--sd", "0.03", "--clip",
                                      "0.44,0.55", "--seed", "11"};
  const Result a = Ht(args);
  const Result b = Ht(args);
  EXPECT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  const Situation s = ParseRoster(in, 0.70);
  for (const Player& p : s.players()) {
    EXPECT_GE(p.unit_cost, 0.44);
    EXPECT_LE(p.unit_cost, 0.55);
  }
  const Result bad_clip = Ht({"simulate-costs", base.string(), "--seed", "1",
                              "--clip", "0.44"});
  EXPECT_EQ(bad_clip.code, kExitInputError);
}

TEST(CliTest, ReportFormatsAreDeterministic) {
  for (const char* f : {"text", "csv", "json"}) {
    const std::vector<std::string> args{"report", Data("korca_case1.csv"),
                                        "--price", "0.70", "--format", f};
    const Result a = Ht(args);
    EXPECT_EQ(a.code, kExitOk) << f;
    EXPECT_EQ(a.out, Ht(args).out) << f;
  }
  EXPECT_EQ(Ht({"report", Data("napa.csv"), "--price", "1.70", "--format",
                "xml"}).code,
            kExitInputError);
}

TEST(CliTest, Validate) {
  EXPECT_EQ(Ht({"validate", Data("napa.csv"), "--price", "1.70"}).code, kExitOk);
  const Result r = Ht({"validate", Data("napa.csv"), "--price", "0.85"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("CostNotBelowPrice"), std::string::npos) << r.err;
}

TEST(CliTest, ExitCodes) {
  const Result missing = Ht({"game", Data("napa.csv")});
  EXPECT_EQ(missing.code, kExitInputError);
  EXPECT_NE(missing.err.find("--price"), std::string::npos) << missing.err;
  const Result bad_price = Ht({"game", Data("napa.csv"), "--price", "abc"});
  EXPECT_EQ(bad_price.code, kExitInputError);
  EXPECT_NE(bad_price.err.find("--price"), std::string::npos);
  const Result unknown_flag = Ht({"game", Data("napa.csv"), "--price", "1.7",
                                  "--bogus"});
  EXPECT_EQ(unknown_flag.code, kExitInputError);
  EXPECT_NE(unknown_flag.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(Ht({"game", Data("korca49.csv"), "--price", "0.70"}).code,
            kExitComputeError);
  EXPECT_EQ(Ht({"game", Data("missing.csv"), "--price", "0.70"}).code,
            kExitInputError);
  EXPECT_EQ(Ht({}).code, kExitInputError);
  EXPECT_EQ(Ht({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace harvest::cli
