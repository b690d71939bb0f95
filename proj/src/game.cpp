#include "harvest/game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <set>
#include <sstream>

#include "subset_walk.hpp"

namespace harvest {
namespace {

struct Aggregate {
  double capacity = 0.0;
  double harvest = 0.0;
  double min_cost = std::numeric_limits<double>::infinity();
};

double CoalitionValue(double price, const Aggregate& agg) {
  if (agg.min_cost == std::numeric_limits<double>::infinity()) return 0.0;
  return (price - agg.min_cost) * std::min(agg.capacity, agg.harvest);
}

void HashBytes(std::uint64_t& h, const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
}

void HashDouble(std::uint64_t& h, double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  HashBytes(h, &bits, sizeof bits);
}

}  // namespace

std::vector<Violation> Validate(const RawSituation& raw,
                                const ValidationOptions& options) {
  std::vector<Violation> out;
  if (raw.players.empty()) {
    out.push_back({ErrorCode::kEmptyRoster, -1, "roster has no players"});
  }
  if (!(raw.price > 0.0) || !std::isfinite(raw.price)) {
    std::ostringstream msg;
    msg << "price must be positive, got " << raw.price;
    out.push_back({ErrorCode::kNonPositivePrice, -1, msg.str()});
  }
  std::set<std::string> seen;
  for (int i = 0; i < static_cast<int>(raw.players.size()); ++i) {
    const Player& p = raw.players[i];
    if (!(p.harvest_kg >= 0.0) || !(p.capacity_kg >= 0.0) ||
        !std::isfinite(p.harvest_kg) || !std::isfinite(p.capacity_kg)) {
      out.push_back({ErrorCode::kNegativeQuantity, i,
                     "player '" + p.id + "' has a negative quantity"});
    }
    if (!std::isfinite(p.unit_cost) || !(p.unit_cost < raw.price)) {
      std::ostringstream msg;
      msg << "player '" << p.id << "' unit cost " << p.unit_cost
          << " is not below the price " << raw.price;
      out.push_back({ErrorCode::kCostNotBelowPrice, i, msg.str()});
    }
    if (!seen.insert(p.id).second) {
      out.push_back({ErrorCode::kDuplicateId, i,
                     "player id '" + p.id + "' appears more than once"});
    }
  }
  const bool all_balanced =
      !raw.players.empty() &&
      std::all_of(raw.players.begin(), raw.players.end(), [](const Player& p) {
        return p.capacity_kg == p.harvest_kg;
      });
  if (all_balanced && !options.allow_degenerate) {
    out.push_back({ErrorCode::kDegenerateSituation, -1,
                   "every player has capacity equal to harvest; nothing to "
                   "gain from cooperation (use the degenerate override)"});
  }
  return out;
}

Situation Situation::Create(RawSituation raw,
                            const ValidationOptions& options) {
  auto violations = Validate(raw, options);
  if (!violations.empty()) {
    std::string message;
    for (const auto& v : violations) {
      if (!message.empty()) message += "; ";
      message += std::string(ErrorCodeName(v.code)) + ": " + v.message;
    }
    throw HarvestError(violations.front().code, message);
  }
  Situation s;
  s.degenerate_ = std::all_of(
      raw.players.begin(), raw.players.end(),
      [](const Player& p) { return p.capacity_kg == p.harvest_kg; });
  s.players_ = std::move(raw.players);
  s.price_ = raw.price;
  return s;
}

Situation Situation::Create(std::vector<Player> players, double price,
                            const ValidationOptions& options) {
  return Create(RawSituation{std::move(players), price}, options);
}

double Situation::TotalCapacity() const {
  double total = 0.0;
  for (const auto& p : players_) total += p.capacity_kg;
  return total;
}

double Situation::TotalHarvest() const {
  double total = 0.0;
  for (const auto& p : players_) total += p.harvest_kg;
  return total;
}

double Situation::MinCost() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : players_) best = std::min(best, p.unit_cost);
  return best;
}

std::uint64_t Situation::Fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  HashDouble(h, price_);
  for (const auto& p : players_) {
    HashBytes(h, p.id.data(), p.id.size());
    HashBytes(h, "\0", 1);
    HashDouble(h, p.harvest_kg);
    HashDouble(h, p.capacity_kg);
    HashDouble(h, p.unit_cost);
  }
  return h;
}

int Situation::IndexOf(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (players_[i].id == id) return i;
  }
  return -1;
}

Coalition Coalition::FromIndices(std::span<const int> indices) {
  Mask mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= 64) {
      throw HarvestError(ErrorCode::kInvalidCoalition,
                         "player index " + std::to_string(i) + " out of range");
    }
    mask |= Mask{1} << i;
  }
  return Coalition(mask);
}

int Coalition::Size() const { return std::popcount(mask_); }

std::vector<int> Coalition::Members() const {
  std::vector<int> out;
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void Coalition::CheckFits(int n) const {
  if (n < 64 && (mask_ >> n) != 0) {
    throw HarvestError(ErrorCode::kInvalidCoalition,
                       "coalition refers to players outside a roster of " +
                           std::to_string(n));
  }
}

CoalitionStats ComputeCoalitionStats(const Situation& situation,
                                     Coalition coalition) {
  if (coalition.empty()) {
    throw HarvestError(ErrorCode::kEmptyCoalition,
                       "statistics of the empty coalition are undefined");
  }
  coalition.CheckFits(situation.size());
  Aggregate agg;
  for (int i : coalition.Members()) {
    const Player& p = situation.player(i);
    agg.capacity += p.capacity_kg;
    agg.harvest += p.harvest_kg;
    agg.min_cost = std::min(agg.min_cost, p.unit_cost);
  }
  return {agg.min_cost, agg.capacity, agg.harvest};
}

double Value(const Situation& situation, Coalition coalition) {
  if (coalition.empty()) return 0.0;
  CoalitionStats s = ComputeCoalitionStats(situation, coalition);
  return CoalitionValue(situation.price(),
                        {s.capacity_kg, s.harvest_kg, s.min_cost});
}

GameTable GameTable::FromValues(int n, std::vector<double> values) {
  if (n < 0 || n > 30 || values.size() != (std::size_t{1} << n)) {
    throw HarvestError(ErrorCode::kLengthMismatch,
                       "game table needs exactly 2^n values");
  }
  if (values[0] != 0.0) {
    throw HarvestError(ErrorCode::kInvalidRange,
                       "the empty coalition must have value 0");
  }
  return GameTable(n, std::move(values), 0);
}

void GameTable::CheckBuiltFrom(const Situation& situation) const {
  if (fingerprint_ == 0 || fingerprint_ != situation.Fingerprint() ||
      n_ != situation.size()) {
    throw HarvestError(ErrorCode::kTableMismatch,
                       "game table was not enumerated from this situation");
  }
}

GameTable EnumerateGame(const Situation& situation,
                        const EnumerateOptions& options) {
  const int n = situation.size();
  if (n > options.max_players || n > 62) {
    throw HarvestError(ErrorCode::kTooManyPlayers,
                       std::to_string(n) + " players exceed the enumeration "
                       "cap of " + std::to_string(options.max_players));
  }
  std::vector<double> values(std::size_t{1} << n, 0.0);
  const auto players = situation.players();
  const double price = situation.price();
  internal::WalkSubsetsParallel(
      n, options.workers, Aggregate{},
      [&](const Aggregate& a, int i) {
        const Player& p = players[i];
        return Aggregate{a.capacity + p.capacity_kg, a.harvest + p.harvest_kg,
                         std::min(a.min_cost, p.unit_cost)};
      },
      [&](std::uint64_t mask, const Aggregate& a) {
        values[mask] = CoalitionValue(price, a);
      });
  return GameTable(n, std::move(values), situation.Fingerprint());
}

Situation Subgame(const Situation& situation, Coalition coalition) {
  if (coalition.empty()) {
    throw HarvestError(ErrorCode::kEmptyCoalition,
                       "subgame of the empty coalition");
  }
  coalition.CheckFits(situation.size());
  std::vector<Player> players;
  for (int i : coalition.Members()) players.push_back(situation.player(i));
  // A subgame may consist only of balanced players even if the parent does
  // not; it is still a well-defined game.
  return Situation::Create(std::move(players), situation.price(),
                           {.allow_degenerate = true});
}

}  // namespace harvest
