#include "harvest/allocations.hpp"

#include <cmath>
#include <sstream>

#include "harvest/thresholds.hpp"

namespace harvest {
namespace {

void RequireNonNegative(double x, const char* name) {
  if (!(x >= 0.0)) {
    std::ostringstream msg;
    msg << name << " must be nonnegative, got " << x;
    throw HarvestError(ErrorCode::kNegativeParameter, msg.str());
  }
}

void RequireAtMostHalf(double param, double threshold, const char* name) {
  const double limit = threshold / 2.0;
  if (param > limit + kRelativeTolerance * std::max(1.0, std::abs(limit))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << name << " = " << param << " exceeds half of its core threshold ("
        << limit << ")";
    throw HarvestError(ErrorCode::kParamAboveHalfThreshold, msg.str());
  }
}

}  // namespace

double Allocation::Total() const {
  double total = 0.0;
  for (double x : amounts) total += x;
  return total;
}

std::vector<int> MinCostSet(const Situation& situation) {
  const double best = situation.MinCost();
  std::vector<int> out;
  for (int i = 0; i < situation.size(); ++i) {
    if (situation.player(i).unit_cost == best) out.push_back(i);
  }
  return out;
}

PlayerSets PartitionSets(const Situation& situation) {
  PlayerSets sets;
  sets.m_set = MinCostSet(situation);
  sets.capacity_bound = situation.TotalCapacity() <= situation.TotalHarvest();
  double h_harvest = 0.0;
  double h_capacity = 0.0;
  for (int i = 0; i < situation.size(); ++i) {
    const Player& p = situation.player(i);
    const bool in_h = sets.capacity_bound ? p.capacity_kg < p.harvest_kg
                                          : p.capacity_kg > p.harvest_kg;
    if (p.capacity_kg == p.harvest_kg) {
      sets.e_set.push_back(i);
    } else if (in_h) {
      sets.h_set.push_back(i);
      h_harvest += p.harvest_kg;
      h_capacity += p.capacity_kg;
    } else {
      sets.taxed_set.push_back(i);
    }
  }
  if (sets.e_set.size() == static_cast<std::size_t>(situation.size())) {
    throw HarvestError(ErrorCode::kDegenerateSituation,
                       "every player is balanced (K_i == Q_i); the "
                       "compensated set is undefined");
  }
  sets.h_imbalance = h_harvest - h_capacity;
  return sets;
}

Allocation CoAllocation(const Situation& situation) {
  const double margin = situation.price() - situation.MinCost();
  const bool capacity_bound =
      situation.TotalCapacity() <= situation.TotalHarvest();
  Allocation out;
  out.amounts.reserve(situation.size());
  for (const Player& p : situation.players()) {
    out.amounts.push_back(margin *
                          (capacity_bound ? p.capacity_kg : p.harvest_kg));
  }
  return out;
}

Allocation BtcAllocation(const Situation& situation, double alpha) {
  RequireNonNegative(alpha, "alpha");
  Allocation out = CoAllocation(situation);
  const std::vector<int> m_set = MinCostSet(situation);
  std::vector<bool> in_m(situation.size(), false);
  for (int i : m_set) in_m[i] = true;

  double tax_base = 0.0;
  for (int i = 0; i < situation.size(); ++i) {
    if (!in_m[i]) tax_base += out.amounts[i];
  }
  const double bonus = alpha / static_cast<double>(m_set.size()) * tax_base;
  for (int i = 0; i < situation.size(); ++i) {
    if (in_m[i]) {
      out.amounts[i] += bonus;
    } else {
      out.amounts[i] -= alpha * out.amounts[i];
    }
  }
  return out;
}

Allocation CrcAllocation(const Situation& situation, double beta) {
  RequireNonNegative(beta, "beta");
  const PlayerSets sets = PartitionSets(situation);
  Allocation out = CoAllocation(situation);

  double bonus_base = 0.0;
  for (int i : sets.taxed_set) bonus_base += out.amounts[i];
  for (int i : sets.taxed_set) out.amounts[i] -= beta * out.amounts[i];
  for (int i : sets.h_set) {
    const Player& p = situation.player(i);
    const double share = (p.harvest_kg - p.capacity_kg) / sets.h_imbalance;
    out.amounts[i] += share * beta * bonus_base;
  }
  return out;
}

HtrResult HtrAllocation(const Situation& situation, double alpha_star,
                        double beta_star, double alpha_bar, double beta_bar) {
  RequireNonNegative(alpha_star, "alpha*");
  RequireNonNegative(beta_star, "beta*");
  RequireAtMostHalf(alpha_star, alpha_bar, "alpha*");
  RequireAtMostHalf(beta_star, beta_bar, "beta*");

  HtrResult result;
  result.alpha_star = alpha_star;
  result.beta_star = beta_star;
  if (alpha_bar == 0.0 && beta_bar == 0.0) {
    result.branch = HtrBranch::kCo;
    result.allocation = CoAllocation(situation);
  } else if (beta_bar == 0.0) {
    result.branch = HtrBranch::kBtc;
    result.allocation = BtcAllocation(situation, alpha_star);
  } else if (alpha_bar == 0.0) {
    result.branch = HtrBranch::kCrc;
    result.allocation = CrcAllocation(situation, beta_star);
  } else {
    result.branch = HtrBranch::kCombined;
    const Allocation gamma = CoAllocation(situation);
    const Allocation btc = BtcAllocation(situation, alpha_star);
    const Allocation crc = CrcAllocation(situation, beta_star);
    result.allocation.amounts.resize(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      result.allocation.amounts[i] = btc[i] + crc[i] - gamma[i];
    }
  }
  return result;
}

HtrResult HtrAllocation(const Situation& situation, double alpha_star,
                        double beta_star) {
  const GameTable table = EnumerateGame(situation);
  const double alpha_bar = AlphaThreshold(situation, table).value;
  const double beta_bar =
      situation.degenerate() ? 0.0 : BetaThreshold(situation, table).value;
  return HtrAllocation(situation, alpha_star, beta_star, alpha_bar, beta_bar);
}

HtrResult HtrAllocationAtHalfThresholds(const Situation& situation) {
  const GameTable table = EnumerateGame(situation);
  const double alpha_bar = AlphaThreshold(situation, table).value;
  const double beta_bar =
      situation.degenerate() ? 0.0 : BetaThreshold(situation, table).value;
  return HtrAllocation(situation, alpha_bar / 2.0, beta_bar / 2.0, alpha_bar,
                       beta_bar);
}

const char* HtrBranchName(HtrBranch branch) {
  switch (branch) {
    case HtrBranch::kCo: return "co";
    case HtrBranch::kBtc: return "btc";
    case HtrBranch::kCrc: return "crc";
    case HtrBranch::kCombined: return "combined";
  }
  return "unknown";
}

}  // namespace harvest
