#include "harvest/thresholds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "harvest/analysis.hpp"
#include "oracle.hpp"

namespace harvest {
namespace {

Coalition Ids(const Situation& s, std::vector<std::string> ids) {
  std::vector<int> idx;
  for (const auto& id : ids) idx.push_back(s.IndexOf(id));
  return Coalition::FromIndices(idx);
}

double OracleOrZero(double x) { return std::isinf(x) ? 0.0 : x; }

TEST(AlphaThresholdTest, Napa) {
  const Situation s = oracle::Napa();
  const GameTable t = EnumerateGame(s);
  const ThresholdReport r = AlphaThreshold(s, t);
  EXPECT_NEAR(r.value, 1.0 / 6.0, 1e-12);
  ASSERT_EQ(r.binding.size(), 1u);
  EXPECT_EQ(r.binding[0].coalition, Coalition(0b001));
  EXPECT_EQ(r.binding[0].branch, BoundBranch::kPlain);
  EXPECT_EQ(r.binding_count, 1u);
}

TEST(BetaThresholdTest, Napa) {
  const Situation s = oracle::Napa();
  const GameTable t = EnumerateGame(s);
  const ThresholdReport r = BetaThreshold(s, t);
  EXPECT_NEAR(r.value, 19800.0 / 90684.0, 1e-12);
  EXPECT_NEAR(r.value, 0.218335, 1e-4);
  ASSERT_EQ(r.binding.size(), 1u);
  EXPECT_EQ(r.binding[0].coalition, Coalition(0b110));
  EXPECT_EQ(r.binding[0].branch, BoundBranch::kPi);
}

TEST(BoundTest, NapaPerCoalition) {
  const Situation s = oracle::Napa();
  const GameTable t = EnumerateGame(s);
  const CoalitionBound single = AlphaBound(s, t, Coalition(0b001));
  EXPECT_EQ(single.kind, BoundKind::kBound);
  EXPECT_NEAR(single.slack, 29700, 1e-6);
  EXPECT_NEAR(single.denominator, 178200, 1e-6);

  // Contains the cheapest player and both others' shares: lambda branch.
  const CoalitionBound with_m = AlphaBound(s, t, Coalition(0b011));
  EXPECT_EQ(with_m.kind, BoundKind::kSkipped);
  EXPECT_EQ(with_m.branch, BoundBranch::kLambda);

  EXPECT_EQ(AlphaBound(s, t, Coalition(0b111)).kind, BoundKind::kUnconstrained);
  EXPECT_EQ(AlphaBound(s, t, Coalition(0b010)).kind, BoundKind::kUnconstrained);
  EXPECT_EQ(BetaBound(s, t, Coalition(0b011)).kind, BoundKind::kUnconstrained);
  const CoalitionBound pi = BetaBound(s, t, Coalition(0b110));
  EXPECT_EQ(pi.branch, BoundBranch::kPi);
  EXPECT_NEAR(pi.denominator, 90684, 1e-6);
}

TEST(KorcaCase1Test, ThresholdsAndAppliedHalves) {
  const Situation s = oracle::Load("korca_case1.csv", 0.70);
  const GameTable t = EnumerateGame(s);
  const double alpha_bar = AlphaThreshold(s, t).value;
  const double beta_bar = BetaThreshold(s, t).value;
  EXPECT_NEAR(alpha_bar, 0.077387, 1e-5);
  EXPECT_NEAR(beta_bar, 0.294118, 1e-5);
  EXPECT_NEAR(alpha_bar / 2.0, 0.038694, 1e-5);
  EXPECT_NEAR(beta_bar / 2.0, 0.147058, 1e-5);
}

TEST(KorcaCase2Test, ZeroSlackPiCoalition) {
  const Situation s = oracle::Load("korca_case2.csv", 0.70);
  const GameTable t = EnumerateGame(s);
  const CoalitionBound b = BetaBound(s, t, Ids(s, {"26", "49"}));
  EXPECT_EQ(b.kind, BoundKind::kBound);
  EXPECT_EQ(b.branch, BoundBranch::kPi);
  EXPECT_EQ(b.slack, 0.0);
  EXPECT_EQ(b.bound, 0.0);
}

TEST(ThresholdTest, BalancedPlayersDoNotLoosenBeta) {
  // c is balanced (K == Q) and sits in a coalition with the taxed player a.
  const Situation s = Situation::Create({{"a", 100, 60, 0.55},
                                         {"b", 50, 120, 0.5},
                                         {"c", 40, 40, 0.45}},
                                        1.0);
  const GameTable t = EnumerateGame(s);
  const double beta_bar = BetaThreshold(s, t).value;
  EXPECT_NEAR(beta_bar, OracleOrZero(oracle::BetaBar(s)), 1e-12);
  const Allocation above = CrcAllocation(s, beta_bar * (1 + 1e-6) + 1e-9);
  const Allocation at = CrcAllocation(s, beta_bar);
  EXPECT_TRUE(IsCore(t, at.amounts, {.tolerance = 1e-12}).InCore());
  if (beta_bar < 1.0) {
    EXPECT_FALSE(IsCore(t, above.amounts, {.tolerance = 1e-12}).InCore());
  }
}

TEST(ThresholdTest, NothingToTaxReportsZero) {
  const Situation s = Situation::Create(
      {{"a", 10, 20, 0.5}, {"b", 30, 20, 0.5}}, 1.0);
  const GameTable t = EnumerateGame(s);
  const ThresholdReport r = AlphaThreshold(s, t);
  EXPECT_EQ(r.admissible, 0u);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_FALSE(r.note.empty());
}

TEST(ThresholdTest, MismatchedTableRejected) {
  const GameTable t = EnumerateGame(oracle::Napa());
  const Situation other = oracle::Load("korca_case1.csv", 0.70);
  EXPECT_THROW(AlphaThreshold(other, t), HarvestError);
  EXPECT_THROW(BetaBound(other, t, Coalition(1)), HarvestError);
}

TEST(ThresholdTest, BindingListIsCapped) {
  const Situation s = oracle::Load("korca_case1.csv", 0.70);
  const GameTable t = EnumerateGame(s);
  const ThresholdReport r = AlphaThreshold(s, t, {.max_binding = 4});
  EXPECT_EQ(r.binding.size(), 4u);
  EXPECT_GE(r.binding_count, 4u);
  for (std::size_t i = 1; i < r.binding.size(); ++i) {
    EXPECT_LT(r.binding[i - 1].coalition.mask(), r.binding[i].coalition.mask());
  }
}

TEST(ThresholdTest, MatchesBruteForceOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    InstanceParams p;
    p.n = 2 + static_cast<int>(seed % 8);
    p.seed = seed;
    const Situation s = RandomInstance(p);
    const GameTable t = EnumerateGame(s);
    EXPECT_NEAR(AlphaThreshold(s, t).value, OracleOrZero(oracle::AlphaBar(s)),
                1e-12)
        << seed;
    EXPECT_NEAR(BetaThreshold(s, t).value, OracleOrZero(oracle::BetaBar(s)),
                1e-12)
        << seed;
  }
}

TEST(ThresholdTest, BranchNames) {
  EXPECT_STREQ(BoundBranchName(BoundBranch::kPlain), "plain");
  EXPECT_STREQ(BoundBranchName(BoundBranch::kLambda), "lambda");
  EXPECT_STREQ(BoundBranchName(BoundBranch::kPi), "pi");
}

}  // namespace
}  // namespace harvest
