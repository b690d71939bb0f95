// Randomised invariants over seeded instances. Small quantity and cost ranges
// are used in some suites to force ties (several cheapest players, K_i == Q_i).

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "harvest/allocations.hpp"
#include "harvest/analysis.hpp"
#include "harvest/thresholds.hpp"
#include "oracle.hpp"

namespace harvest {
namespace {

InstanceParams Params(std::uint64_t seed, bool ties) {
  InstanceParams p;
  p.seed = seed;
  p.n = 2 + static_cast<int>(seed % 7);
  if (ties) {
    p.capacity_min = p.harvest_min = 1;
    p.capacity_max = p.harvest_max = 4;
    p.cost_min = p.cost_max = 0.5;
  }
  return p;
}

Situation TiedCosts(std::uint64_t seed) {
  // Costs drawn from {0.4, 0.5}, quantities from 1..4 kg.
  Situation base = RandomInstance(Params(seed, true));
  std::vector<Player> players(base.players().begin(), base.players().end());
  for (std::size_t i = 0; i < players.size(); ++i) {
    players[i].unit_cost = ((seed >> i) & 1U) ? 0.4 : 0.5;
  }
  return Situation::Create(std::move(players), 0.7);
}

class PropertyTest : public ::testing::TestWithParam<bool> {
 protected:
  Situation Instance(std::uint64_t seed) const {
    return GetParam() ? TiedCosts(seed) : RandomInstance(Params(seed, false));
  }
};

TEST_P(PropertyTest, AllocationsAreEfficientAndTransfersBalance) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Situation s = Instance(seed);
    const GameTable t = EnumerateGame(s);
    const double v_n = t.GrandValue();
    const double tol = 1e-9 * std::max(1.0, v_n);
    const Allocation g = CoAllocation(s);
    EXPECT_NEAR(g.Total(), v_n, tol) << seed;
    for (double rate : {0.0, 0.3, 1.0}) {
      EXPECT_NEAR(BtcAllocation(s, rate).Total(), v_n, tol) << seed;
      EXPECT_NEAR(CrcAllocation(s, rate).Total(), v_n, tol) << seed;
    }
    const auto want_t = oracle::Btc(s, 0.3);
    const auto want_r = oracle::Crc(s, 0.3);
    for (int i = 0; i < s.size(); ++i) {
      EXPECT_NEAR(BtcAllocation(s, 0.3)[i], want_t[i], tol) << seed;
      EXPECT_NEAR(CrcAllocation(s, 0.3)[i], want_r[i], tol) << seed;
    }
  }
}

TEST_P(PropertyTest, ThresholdsMatchOracleAndKeepCore) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Situation s = Instance(seed);
    const GameTable t = EnumerateGame(s);
    const double a = AlphaThreshold(s, t).value;
    const double b = BetaThreshold(s, t).value;
    const double oa = oracle::AlphaBar(s);
    const double ob = oracle::BetaBar(s);
    EXPECT_NEAR(a, std::isinf(oa) ? 0.0 : oa, 1e-12) << seed;
    EXPECT_NEAR(b, std::isinf(ob) ? 0.0 : ob, 1e-12) << seed;
    EXPECT_TRUE(oracle::InCore(s, BtcAllocation(s, a).amounts, 1e-9)) << seed;
    EXPECT_TRUE(oracle::InCore(s, CrcAllocation(s, b).amounts, 1e-9)) << seed;
    const HtrResult h = HtrAllocationAtHalfThresholds(s);
    EXPECT_TRUE(IsCore(t, h.allocation.amounts).InCore()) << seed;
  }
}

TEST_P(PropertyTest, SubgameThresholdsAreConsistent) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Situation s = Instance(seed);
    if (s.size() < 3) continue;
    const Coalition c(Coalition::Full(s.size()).mask() & ~std::uint64_t{1});
    const Situation sub = Subgame(s, c);
    if (sub.degenerate()) continue;
    std::vector<Player> direct(s.players().begin() + 1, s.players().end());
    const Situation rebuilt = Situation::Create(std::move(direct), s.price());
    const GameTable a = EnumerateGame(sub);
    const GameTable b = EnumerateGame(rebuilt);
    for (std::size_t m = 0; m < a.values().size(); ++m) {
      ASSERT_EQ(a.values()[m], b.values()[m]);
    }
    EXPECT_EQ(AlphaThreshold(sub, a).value, AlphaThreshold(rebuilt, b).value);
    EXPECT_EQ(BetaThreshold(sub, a).value, BetaThreshold(rebuilt, b).value);
  }
}

TEST_P(PropertyTest, ViolationCountGrowsWithRate) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Situation s = Instance(seed);
    const GameTable t = EnumerateGame(s);
    std::uint64_t previous = 0;
    for (double rate = 0.0; rate <= 1.0; rate += 0.125) {
      const std::uint64_t count =
          IsCore(t, BtcAllocation(s, rate).amounts).violation_count;
      EXPECT_GE(count, previous) << seed << " " << rate;
      previous = count;
    }
  }
}

TEST_P(PropertyTest, HtrDecomposes) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Situation s = Instance(seed);
    const GameTable t = EnumerateGame(s);
    const double a = AlphaThreshold(s, t).value / 2;
    const double b = BetaThreshold(s, t).value / 2;
    const Allocation h = HtrAllocation(s, a, b, 2 * a, 2 * b).allocation;
    const Allocation tt = BtcAllocation(s, 2 * a);
    const Allocation rr = CrcAllocation(s, 2 * b);
    for (int i = 0; i < s.size(); ++i) {
      const double want = 0.5 * tt[i] + 0.5 * rr[i];
      EXPECT_NEAR(h[i], want, 1e-9 * std::max(1.0, std::abs(want))) << seed;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rosters, PropertyTest, ::testing::Bool(),
                         [](const auto& info) {
                           return info.param ? "Ties" : "Generic";
                         });

TEST(DeterminismTest, RepeatedSolveIsBitIdentical) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Situation s = RandomInstance(Params(seed, false));
    const GameTable t = EnumerateGame(s);
    EXPECT_EQ(AlphaThreshold(s, t).value, AlphaThreshold(s, EnumerateGame(s)).value);
    EXPECT_EQ(HtrAllocationAtHalfThresholds(s).allocation.amounts,
              HtrAllocationAtHalfThresholds(s).allocation.amounts);
  }
}

}  // namespace
}  // namespace harvest
