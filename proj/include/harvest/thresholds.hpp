#ifndef HARVEST_THRESHOLDS_HPP_
#define HARVEST_THRESHOLDS_HPP_

// Exact core-stability thresholds for the BTC and CRC compensation rules.
//
// The BTC allocation T(v, alpha) stays in the core exactly while alpha does
// not exceed alpha_bar, the minimum over two coalition families:
//
//   plain   S inside N \ M:   (sum_S gamma - v(S)) / sum_S gamma
//   lambda  S meeting M and N \ M, with a positive denominator:
//           (sum_S gamma - v(S)) /
//           (sum_{S \ M} gamma - |S n M| / |M| * sum_{N \ M} gamma)
//
// The CRC threshold beta_bar is the analogous minimum with the taxed set
// N \ (H u E) in place of N \ M and the CRC bonus shares
// (Q_{S n H} - K_{S n H}) / (Q_H - K_H) in place of |S n M| / |M| (the "pi"
// family). Coalitions whose denominator is not positive impose no upper bound
// and are counted as skipped.

#include <cstdint>
#include <string>
#include <vector>

#include "harvest/game.hpp"

namespace harvest {

enum class BoundBranch { kPlain, kLambda, kPi };

const char* BoundBranchName(BoundBranch branch);

struct BindingCoalition {
  Coalition coalition;
  double bound = 0.0;
  BoundBranch branch = BoundBranch::kPlain;
};

struct ThresholdReport {
  double value = 0.0;
  // Coalitions whose bound is within relative 1e-9 of `value`, lowest masks
  // first, at most ThresholdOptions::max_binding of them.
  std::vector<BindingCoalition> binding;
  std::uint64_t binding_count = 0;  // all coalitions within tolerance
  std::uint64_t admissible = 0;     // coalitions contributing a bound
  std::uint64_t skipped = 0;        // vacuous (non-positive) denominators
  // Set when no coalition bounds the parameter, e.g. every player already
  // has the cheapest technology. `value` is 0 in that case.
  std::string note;
};

struct ThresholdOptions {
  std::size_t max_binding = 32;
};

enum class BoundKind {
  kUnconstrained,  // S empty, S = N, or the constraint cannot tighten
  kSkipped,        // vacuous denominator
  kBound,
};

// Contribution of one coalition, evaluated directly. Useful for diagnostics
// and for checking the enumerated minimum.
struct CoalitionBound {
  BoundKind kind = BoundKind::kUnconstrained;
  BoundBranch branch = BoundBranch::kPlain;
  double slack = 0.0;        // sum_S gamma - v(S)
  double denominator = 0.0;  // change of sum_S x per unit of the parameter
  double bound = 0.0;        // slack / denominator when kind == kBound
};

// Both throw kTableMismatch if `table` was not enumerated from `situation`.
ThresholdReport AlphaThreshold(const Situation& situation,
                               const GameTable& table,
                               const ThresholdOptions& options = {});

// Also throws kDegenerateSituation when every player is balanced.
ThresholdReport BetaThreshold(const Situation& situation,
                              const GameTable& table,
                              const ThresholdOptions& options = {});

CoalitionBound AlphaBound(const Situation& situation, const GameTable& table,
                          Coalition coalition);
CoalitionBound BetaBound(const Situation& situation, const GameTable& table,
                         Coalition coalition);

}  // namespace harvest

#endif  // HARVEST_THRESHOLDS_HPP_
