#ifndef HARVEST_SIMULATE_HPP_
#define HARVEST_SIMULATE_HPP_

// Seeded simulation of unit processing costs from a truncated normal
// distribution, for rosters whose source data only gives a cost range.

#include <cstdint>
#include <span>
#include <vector>

#include "harvest/game.hpp"

namespace harvest {

struct CostSimParams {
  double mean = 0.495;
  double sd = 0.03;
  double clip_low = 0.44;
  double clip_high = 0.55;
};

// Throws kInvalidSimParams unless sd >= 0, clip_low < clip_high < price, and
// (for sd == 0) the mean lies inside the clip range.
void CheckSimParams(const CostSimParams& params, double price);

// `count` draws from normal(mean, sd) restricted to [clip_low, clip_high].
// Out-of-range draws are discarded and redrawn. Deterministic per seed.
// Throws kInvalidSimParams when the clip range is so far in the tail that
// draws keep getting rejected.
std::vector<double> DrawTruncatedNormal(const CostSimParams& params,
                                        std::size_t count, std::uint64_t seed);

// Copies the roster and replaces every unit cost with a simulated one.
Situation SimulateCosts(std::span<const Player> roster, double price,
                        const CostSimParams& params, std::uint64_t seed,
                        const ValidationOptions& options = {});

}  // namespace harvest

#endif  // HARVEST_SIMULATE_HPP_
