#include "harvest/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include "subset_walk.hpp"

namespace harvest {
namespace {

double AbsoluteTolerance(const GameTable& table, double relative) {
  return relative * std::max(1.0, std::abs(table.GrandValue()));
}

PropertyReport Holds(GameProperty property) {
  PropertyReport r;
  r.property = property;
  r.holds = true;
  return r;
}

PropertyReport Fails(GameProperty property, PropertyWitness witness) {
  PropertyReport r;
  r.property = property;
  r.holds = false;
  r.witness = std::move(witness);
  return r;
}

void RequireAtMost(const GameTable& table, int max_players, const char* what) {
  if (table.size() > max_players) {
    std::ostringstream msg;
    msg << what << " check over " << table.size()
        << " players exceeds the cap of " << max_players;
    throw HarvestError(ErrorCode::kTooManyPlayers, msg.str());
  }
}

}  // namespace

CoreReport IsCore(const GameTable& table, std::span<const double> allocation,
                  const CoreCheckOptions& options) {
  const int n = table.size();
  if (allocation.size() != static_cast<std::size_t>(n)) {
    std::ostringstream msg;
    msg << "allocation has " << allocation.size() << " entries for " << n
        << " players";
    throw HarvestError(ErrorCode::kLengthMismatch, msg.str());
  }
  const double tol = AbsoluteTolerance(table, options.tolerance);
  const std::uint64_t full = Coalition::Full(n).mask();

  CoreReport report;
  for (double x : allocation) report.total += x;
  report.efficient = std::abs(report.total - table.GrandValue()) <= tol;

  std::map<std::uint64_t, CoreViolation> listed;
  internal::WalkSubsets(
      n, 0.0, [&](double sum, int i) { return sum + allocation[i]; },
      [&](std::uint64_t mask, double allocated) {
        if (mask == 0 || mask == full) return;
        const double value = table[mask];
        if (allocated >= value - tol) return;
        const double deficit = value - allocated;
        ++report.violation_count;
        report.max_deficit = std::max(report.max_deficit, deficit);
        listed.emplace(mask,
                       CoreViolation{Coalition(mask), value, allocated, deficit});
        if (listed.size() > options.max_listed) listed.erase(std::prev(listed.end()));
      });
  for (auto& [mask, v] : listed) report.violations.push_back(v);
  return report;
}

const char* GamePropertyName(GameProperty property) {
  switch (property) {
    case GameProperty::kNonnegative: return "nonnegative";
    case GameProperty::kSuperadditive: return "superadditive";
    case GameProperty::kMonotone: return "monotone";
    case GameProperty::kConvex: return "convex";
  }
  return "unknown";
}

PropertyReport CheckNonnegativity(const GameTable& table) {
  const auto values = table.values();
  const double tol = AbsoluteTolerance(table, kRelativeTolerance);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    if (values[m] < -tol) {
      return Fails(GameProperty::kNonnegative, {{Coalition(m)}, {values[m]}});
    }
  }
  return Holds(GameProperty::kNonnegative);
}

PropertyReport CheckSuperadditivity(const GameTable& table, int max_players) {
  RequireAtMost(table, max_players, "superadditivity");
  const auto values = table.values();
  const double tol = AbsoluteTolerance(table, kRelativeTolerance);
  for (std::uint64_t u = 1; u < values.size(); ++u) {
    // Each unordered split {s, u ^ s} once: s holds the lowest member of u.
    const std::uint64_t low = u & (~u + 1);
    for (std::uint64_t s = (u - 1) & u; s != 0; s = (s - 1) & u) {
      if (!(s & low)) continue;
      const std::uint64_t t = u ^ s;
      if (t == 0) continue;
      if (values[u] < values[s] + values[t] - tol) {
        return Fails(GameProperty::kSuperadditive,
                     {{Coalition(s), Coalition(t)},
                      {values[s], values[t], values[u]}});
      }
    }
  }
  return Holds(GameProperty::kSuperadditive);
}

PropertyReport CheckMonotonicity(const GameTable& table) {
  const auto values = table.values();
  const int n = table.size();
  const double tol = AbsoluteTolerance(table, kRelativeTolerance);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (m & bit) continue;
      if (values[m] > values[m | bit] + tol) {
        return Fails(GameProperty::kMonotone,
                     {{Coalition(m), Coalition(m | bit)},
                      {values[m], values[m | bit]}});
      }
    }
  }
  return Holds(GameProperty::kMonotone);
}

PropertyReport CheckConvexity(const GameTable& table, int max_players) {
  RequireAtMost(table, max_players, "convexity");
  const auto values = table.values();
  const int n = table.size();
  const double tol = AbsoluteTolerance(table, kRelativeTolerance);
  for (std::uint64_t t = 1; t < values.size(); ++t) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(t & bit)) continue;
      const double outer = values[t] - values[t ^ bit];
      // Proper subsets S of T that still contain i.
      const std::uint64_t rest = t ^ bit;
      for (std::uint64_t r = (rest - 1) & rest;; r = (r - 1) & rest) {
        const std::uint64_t s = r | bit;
        const double inner = values[s] - values[r];
        if (inner > outer + tol) {
          return Fails(GameProperty::kConvex,
                       {{Coalition(s), Coalition(t)}, {inner, outer}, i});
        }
        if (r == 0) break;
      }
    }
  }
  return Holds(GameProperty::kConvex);
}

Situation RandomInstance(const InstanceParams& params) {
  const auto bad = [](const std::string& what) {
    throw HarvestError(ErrorCode::kInvalidRange, what);
  };
  if (params.n < 1) bad("player count must be at least 1");
  if (!(params.capacity_min >= 0.0) || params.capacity_min > params.capacity_max)
    bad("capacity range must be nonnegative and ordered");
  if (!(params.harvest_min >= 0.0) || params.harvest_min > params.harvest_max)
    bad("harvest range must be nonnegative and ordered");
  if (!(params.price > 0.0)) bad("price must be positive");
  if (params.cost_min > params.cost_max || !(params.cost_max < params.price))
    bad("cost range must be ordered and strictly below the price");
  if (params.n == 1 && params.capacity_min == params.capacity_max &&
      params.harvest_min == params.harvest_max &&
      params.capacity_min == params.harvest_min)
    bad("ranges only admit balanced players");

  std::mt19937_64 rng(params.seed);
  const auto quantity = [&](double lo, double hi) {
    if (params.whole_kilograms) {
      std::uniform_int_distribution<std::int64_t> d(
          static_cast<std::int64_t>(std::ceil(lo)),
          static_cast<std::int64_t>(std::floor(hi)));
      return static_cast<double>(d(rng));
    }
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  std::uniform_real_distribution<double> cost(params.cost_min, params.cost_max);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Player> players;
    players.reserve(params.n);
    for (int i = 0; i < params.n; ++i) {
      Player p;
      p.id = std::to_string(i + 1);
      p.capacity_kg = quantity(params.capacity_min, params.capacity_max);
      p.harvest_kg = quantity(params.harvest_min, params.harvest_max);
      p.unit_cost = params.cost_min == params.cost_max ? params.cost_min
                                                      : cost(rng);
      players.push_back(std::move(p));
    }
    const bool balanced = std::all_of(
        players.begin(), players.end(),
        [](const Player& p) { return p.capacity_kg == p.harvest_kg; });
    if (!balanced) return Situation::Create(std::move(players), params.price);
  }
  bad("ranges keep producing balanced rosters");
  return Situation::Create({}, 0.0);  // unreachable
}

}  // namespace harvest
