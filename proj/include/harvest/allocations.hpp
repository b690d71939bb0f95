#ifndef HARVEST_ALLOCATIONS_HPP_
#define HARVEST_ALLOCATIONS_HPP_

// Profit allocations for HarvestTech games.
//
// The collaborative (CO) allocation prices every player's capacity (when the
// grand coalition is capacity bound, K_N <= Q_N) or harvest (otherwise) at the
// grand coalition's margin p - c_N. The two compensation rules move a fraction
// of the CO payoff:
//
//   BTC (alpha): players outside the cheapest-cost set M pay alpha of their CO
//                share; M splits the proceeds equally.
//   CRC (beta):  the taxed players N \ (H u E) pay beta of their CO share; the
//                compensated set H splits the proceeds in proportion to
//                Q_i - K_i. Balanced players (E, with K_i == Q_i) are untouched.
//
// HTR combines both as T + R - gamma.

#include <span>
#include <vector>

#include "harvest/game.hpp"

namespace harvest {

struct Allocation {
  std::vector<double> amounts;  // index-aligned with the roster

  double Total() const;
  std::size_t size() const { return amounts.size(); }
  double operator[](std::size_t i) const { return amounts[i]; }
};

struct PlayerSets {
  std::vector<int> m_set;      // argmin of unit cost (all minimisers)
  std::vector<int> e_set;      // K_i == Q_i
  std::vector<int> h_set;      // compensated side
  std::vector<int> taxed_set;  // N \ (H u E)
  bool capacity_bound = false; // K_N <= Q_N
  double h_imbalance = 0.0;    // Q_H - K_H, nonzero whenever H is nonempty
};

// Cheapest-technology players. Defined for every situation.
std::vector<int> MinCostSet(const Situation& situation);

// Throws kDegenerateSituation when every player is balanced (E == N).
PlayerSets PartitionSets(const Situation& situation);

Allocation CoAllocation(const Situation& situation);

// Throws kNegativeParameter for alpha < 0. Core membership is not checked.
Allocation BtcAllocation(const Situation& situation, double alpha);

// Throws kNegativeParameter for beta < 0, kDegenerateSituation when E == N.
Allocation CrcAllocation(const Situation& situation, double beta);

enum class HtrBranch {
  kCo,        // both thresholds zero
  kBtc,       // only the BTC threshold is positive
  kCrc,       // only the CRC threshold is positive
  kCombined,  // T + R - gamma
};

struct HtrResult {
  Allocation allocation;
  HtrBranch branch = HtrBranch::kCo;
  double alpha_star = 0.0;
  double beta_star = 0.0;
};

// Combined allocation given the core thresholds alpha_bar and beta_bar.
// Requires 0 <= alpha_star <= alpha_bar / 2 and 0 <= beta_star <= beta_bar / 2
// (compared with a relative slack of 1e-9), otherwise throws
// kParamAboveHalfThreshold. For a degenerate situation CRC does not apply and
// beta_bar must be 0.
HtrResult HtrAllocation(const Situation& situation, double alpha_star,
                        double beta_star, double alpha_bar, double beta_bar);

// Same, computing both thresholds by enumeration.
HtrResult HtrAllocation(const Situation& situation, double alpha_star,
                        double beta_star);

// Defaults alpha_star = alpha_bar / 2, beta_star = beta_bar / 2.
HtrResult HtrAllocationAtHalfThresholds(const Situation& situation);

const char* HtrBranchName(HtrBranch branch);

}  // namespace harvest

#endif  // HARVEST_ALLOCATIONS_HPP_
