#include "harvest/simulate.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace harvest {
namespace {

constexpr int kMaxRejections = 1'000'000;

}  // namespace

void CheckSimParams(const CostSimParams& params, double price) {
  std::ostringstream msg;
  if (!std::isfinite(params.mean) || !std::isfinite(params.sd) ||
      !std::isfinite(params.clip_low) || !std::isfinite(params.clip_high)) {
    msg << "simulation parameters must be finite";
  } else if (params.sd < 0.0) {
    msg << "standard deviation must be nonnegative, got " << params.sd;
  } else if (!(params.clip_low < params.clip_high)) {
    msg << "clip range [" << params.clip_low << ", " << params.clip_high
        << "] is empty";
  } else if (!(params.clip_high < price)) {
    msg << "clip upper bound " << params.clip_high
        << " must be below the price " << price;
  } else if (params.sd == 0.0 && (params.mean < params.clip_low ||
                                  params.mean > params.clip_high)) {
    msg << "with sd = 0 the mean " << params.mean
        << " must lie inside the clip range";
  } else {
    return;
  }
  throw HarvestError(ErrorCode::kInvalidSimParams, msg.str());
}

std::vector<double> DrawTruncatedNormal(const CostSimParams& params,
                                        std::size_t count, std::uint64_t seed) {
  std::vector<double> out;
  out.reserve(count);
  if (params.sd == 0.0) {
    out.assign(count, params.mean);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(params.mean, params.sd);
  for (std::size_t i = 0; i < count; ++i) {
    int rejected = 0;
    double x = normal(rng);
    while (x < params.clip_low || x > params.clip_high) {
      if (++rejected > kMaxRejections) {
        throw HarvestError(ErrorCode::kInvalidSimParams,
                           "clip range has negligible probability mass");
      }
      x = normal(rng);
    }
    out.push_back(x);
  }
  return out;
}

Situation SimulateCosts(std::span<const Player> roster, double price,
                        const CostSimParams& params, std::uint64_t seed,
                        const ValidationOptions& options) {
  CheckSimParams(params, price);
  const std::vector<double> costs =
      DrawTruncatedNormal(params, roster.size(), seed);
  std::vector<Player> players(roster.begin(), roster.end());
  for (std::size_t i = 0; i < players.size(); ++i) players[i].unit_cost = costs[i];
  return Situation::Create(std::move(players), price, options);
}

}  // namespace harvest
