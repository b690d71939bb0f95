#ifndef HARVEST_ANALYSIS_HPP_
#define HARVEST_ANALYSIS_HPP_

// Brute-force verification over a full game table: core membership of an
// allocation and the structural properties of the game. Also the seeded
// random-instance generator used by the property suites.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harvest/game.hpp"

namespace harvest {

inline constexpr double kDefaultCoreTolerance = 1e-6;

struct CoreViolation {
  Coalition coalition;
  double value = 0.0;      // v(S)
  double allocated = 0.0;  // sum of x_i over S
  double deficit = 0.0;    // v(S) - allocated
};

struct CoreReport {
  bool efficient = false;
  double total = 0.0;  // sum of x
  // Lowest masks first, at most CoreCheckOptions::max_listed entries.
  std::vector<CoreViolation> violations;
  std::uint64_t violation_count = 0;
  double max_deficit = 0.0;

  bool InCore() const { return efficient && violation_count == 0; }
};

struct CoreCheckOptions {
  // Relative to max(1, v(N)), applied to efficiency and to every coalition.
  double tolerance = kDefaultCoreTolerance;
  std::size_t max_listed = 64;
};

// Throws kLengthMismatch when the allocation does not have n entries.
CoreReport IsCore(const GameTable& table, std::span<const double> allocation,
                  const CoreCheckOptions& options = {});

enum class GameProperty { kNonnegative, kSuperadditive, kMonotone, kConvex };

const char* GamePropertyName(GameProperty property);

// A counterexample. For superadditivity: coalitions {S, T} and values
// {v(S), v(T), v(S u T)}. For monotonicity: {S, T} with S inside T and values
// {v(S), v(T)}. For convexity: {S, T}, `player` i, and values
// {v(S) - v(S \ i), v(T) - v(T \ i)}. For nonnegativity: {S} and {v(S)}.
struct PropertyWitness {
  std::vector<Coalition> coalitions;
  std::vector<double> values;
  int player = -1;
};

struct PropertyReport {
  GameProperty property = GameProperty::kNonnegative;
  bool holds = true;
  std::optional<PropertyWitness> witness;
};

inline constexpr int kDefaultPairwiseCap = 12;

PropertyReport CheckNonnegativity(const GameTable& table);

// Checks v(S u T) >= v(S) + v(T) over all disjoint pairs (3^n). Throws
// kTooManyPlayers above `max_players`.
PropertyReport CheckSuperadditivity(const GameTable& table,
                                    int max_players = kDefaultPairwiseCap);

// One-bit extensions, n * 2^(n-1) comparisons.
PropertyReport CheckMonotonicity(const GameTable& table);

// Checks that marginal contributions grow along nested coalitions:
// v(S) - v(S \ i) <= v(T) - v(T \ i) for all i in S, S inside T. Throws
// kTooManyPlayers above `max_players`.
PropertyReport CheckConvexity(const GameTable& table,
                              int max_players = kDefaultPairwiseCap);

struct InstanceParams {
  int n = 5;
  double capacity_min = 10000.0;
  double capacity_max = 500000.0;
  double harvest_min = 10000.0;
  double harvest_max = 500000.0;
  double cost_min = 0.4;
  double cost_max = 0.6;
  double price = 0.7;
  std::uint64_t seed = 0;
  // Draw whole kilograms, which keeps every coalition sum exact.
  bool whole_kilograms = true;
};

// Deterministic per seed. Throws kInvalidRange for empty or inverted ranges,
// negative quantities, or costs not strictly below the price.
Situation RandomInstance(const InstanceParams& params);

}  // namespace harvest

#endif  // HARVEST_ANALYSIS_HPP_
