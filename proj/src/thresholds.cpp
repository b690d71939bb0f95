#include "harvest/thresholds.hpp"

#include <cmath>
#include <algorithm>
#include <iterator>
#include <limits>
#include <map>
#include <stdexcept>

#include "harvest/allocations.hpp"
#include "subset_walk.hpp"

namespace harvest {
namespace {

// Per-coalition sums needed by either threshold. `side` is the taxed part
// (N \ M for BTC, N \ (H u E) for CRC); `weight` is |S n M| for BTC and
// Q_{S n H} - K_{S n H} for CRC.
struct Sums {
  double gamma = 0.0;
  double side_gamma = 0.0;
  double weight = 0.0;
  int size = 0;
  int side_count = 0;
  int receiver_count = 0;  // members of M (BTC) or H (CRC)
};

// Everything constant over the enumeration.
struct Context {
  std::vector<double> gamma;
  std::vector<char> is_side;
  std::vector<char> is_receiver;
  std::vector<double> weight;  // per-player contribution to Sums::weight
  double total_side_gamma = 0.0;
  double total_weight = 0.0;   // |M| or Q_H - K_H
  double value_tolerance = 0.0;
  BoundBranch mixed_branch = BoundBranch::kLambda;
  int n = 0;
};

Sums Extend(const Context& ctx, const Sums& s, int i) {
  Sums out = s;
  out.gamma += ctx.gamma[i];
  out.size += 1;
  if (ctx.is_side[i]) {
    out.side_gamma += ctx.gamma[i];
    out.side_count += 1;
  }
  if (ctx.is_receiver[i]) {
    out.weight += ctx.weight[i];
    out.receiver_count += 1;
  }
  return out;
}

CoalitionBound Classify(const Context& ctx, const Sums& s, double value) {
  CoalitionBound out;
  if (s.size == 0 || s.size == ctx.n || s.side_count == 0) return out;

  out.slack = s.gamma - value;
  if (std::abs(out.slack) <= ctx.value_tolerance) out.slack = 0.0;

  if (s.receiver_count == 0) {
    out.branch = BoundBranch::kPlain;
    out.denominator = s.side_gamma;
  } else {
    out.branch = ctx.mixed_branch;
    out.denominator =
        s.side_gamma - s.weight / ctx.total_weight * ctx.total_side_gamma;
  }
  if (out.denominator > ctx.value_tolerance) {
    out.kind = BoundKind::kBound;
    out.bound = out.slack / out.denominator;
  } else {
    out.kind = BoundKind::kSkipped;
  }
  // The CO allocation is in the core, so the slack can never be negative
  // beyond rounding. A negative slack on a skipped coalition would make its
  // constraint fail for every parameter value.
  if (out.slack < 0.0) {
    throw std::logic_error("negative coalition slack under the CO allocation");
  }
  return out;
}

Context AlphaContext(const Situation& situation, const GameTable& table) {
  Context ctx;
  ctx.n = situation.size();
  ctx.gamma = CoAllocation(situation).amounts;
  ctx.is_side.assign(ctx.n, 1);
  ctx.is_receiver.assign(ctx.n, 0);
  ctx.weight.assign(ctx.n, 0.0);
  for (int i : MinCostSet(situation)) {
    ctx.is_side[i] = 0;
    ctx.is_receiver[i] = 1;
    ctx.weight[i] = 1.0;
    ctx.total_weight += 1.0;
  }
  for (int i = 0; i < ctx.n; ++i) {
    if (ctx.is_side[i]) ctx.total_side_gamma += ctx.gamma[i];
  }
  ctx.value_tolerance =
      kRelativeTolerance * std::max(1.0, std::abs(table.GrandValue()));
  ctx.mixed_branch = BoundBranch::kLambda;
  return ctx;
}

Context BetaContext(const Situation& situation, const GameTable& table) {
  const PlayerSets sets = PartitionSets(situation);
  Context ctx;
  ctx.n = situation.size();
  ctx.gamma = CoAllocation(situation).amounts;
  ctx.is_side.assign(ctx.n, 0);
  ctx.is_receiver.assign(ctx.n, 0);
  ctx.weight.assign(ctx.n, 0.0);
  for (int i : sets.taxed_set) {
    ctx.is_side[i] = 1;
    ctx.total_side_gamma += ctx.gamma[i];
  }
  for (int i : sets.h_set) {
    const Player& p = situation.player(i);
    ctx.is_receiver[i] = 1;
    ctx.weight[i] = p.harvest_kg - p.capacity_kg;
  }
  ctx.total_weight = sets.h_imbalance;
  ctx.value_tolerance =
      kRelativeTolerance * std::max(1.0, std::abs(table.GrandValue()));
  ctx.mixed_branch = BoundBranch::kPi;
  return ctx;
}

Sums DirectSums(const Context& ctx, Coalition coalition) {
  Sums s;
  for (int i : coalition.Members()) s = Extend(ctx, s, i);
  return s;
}

ThresholdReport Minimize(const Context& ctx, const GameTable& table,
                         const ThresholdOptions& options) {
  ThresholdReport report;
  const auto extend = [&ctx](const Sums& s, int i) { return Extend(ctx, s, i); };

  double best = std::numeric_limits<double>::infinity();
  internal::WalkSubsets(ctx.n, Sums{}, extend,
                        [&](std::uint64_t mask, const Sums& s) {
                          const CoalitionBound b = Classify(ctx, s, table[mask]);
                          if (b.kind == BoundKind::kBound) {
                            ++report.admissible;
                            best = std::min(best, b.bound);
                          } else if (b.kind == BoundKind::kSkipped) {
                            ++report.skipped;
                          }
                        });
  if (report.admissible == 0) {
    report.value = 0.0;
    return report;
  }
  report.value = best;

  // Second pass: every coalition attaining the minimum, lowest masks kept.
  const double cutoff = best + kRelativeTolerance * std::abs(best);
  std::map<std::uint64_t, BindingCoalition> kept;
  internal::WalkSubsets(
      ctx.n, Sums{}, extend, [&](std::uint64_t mask, const Sums& s) {
        const CoalitionBound b = Classify(ctx, s, table[mask]);
        if (b.kind != BoundKind::kBound || b.bound > cutoff) return;
        ++report.binding_count;
        kept.emplace(mask, BindingCoalition{Coalition(mask), b.bound, b.branch});
        if (kept.size() > options.max_binding) kept.erase(std::prev(kept.end()));
      });
  for (auto& [mask, entry] : kept) report.binding.push_back(entry);
  return report;
}

}  // namespace

const char* BoundBranchName(BoundBranch branch) {
  switch (branch) {
    case BoundBranch::kPlain: return "plain";
    case BoundBranch::kLambda: return "lambda";
    case BoundBranch::kPi: return "pi";
  }
  return "unknown";
}

ThresholdReport AlphaThreshold(const Situation& situation,
                               const GameTable& table,
                               const ThresholdOptions& options) {
  table.CheckBuiltFrom(situation);
  ThresholdReport report =
      Minimize(AlphaContext(situation, table), table, options);
  if (report.admissible == 0) {
    report.note =
        "no coalition bounds alpha: every player with a positive CO share "
        "already has the cheapest technology";
  }
  return report;
}

ThresholdReport BetaThreshold(const Situation& situation,
                              const GameTable& table,
                              const ThresholdOptions& options) {
  table.CheckBuiltFrom(situation);
  ThresholdReport report =
      Minimize(BetaContext(situation, table), table, options);
  if (report.admissible == 0) {
    report.note =
        "no coalition bounds beta: no player with a positive CO share is "
        "taxed by the crop reward rule";
  }
  return report;
}

CoalitionBound AlphaBound(const Situation& situation, const GameTable& table,
                          Coalition coalition) {
  table.CheckBuiltFrom(situation);
  coalition.CheckFits(situation.size());
  const Context ctx = AlphaContext(situation, table);
  return Classify(ctx, DirectSums(ctx, coalition), table[coalition.mask()]);
}

CoalitionBound BetaBound(const Situation& situation, const GameTable& table,
                         Coalition coalition) {
  table.CheckBuiltFrom(situation);
  coalition.CheckFits(situation.size());
  const Context ctx = BetaContext(situation, table);
  return Classify(ctx, DirectSums(ctx, coalition), table[coalition.mask()]);
}

}  // namespace harvest
