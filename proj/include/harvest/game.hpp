#ifndef HARVEST_GAME_HPP_
#define HARVEST_GAME_HPP_

// HarvestTech situations and the cooperative game they induce.
//
// A situation is a roster of players, each with a harvest Q_i, a processing
// capacity K_i and a unit processing cost c_i, plus a market price p. A
// coalition S processes min{K_S, Q_S} kilograms at its cheapest member's cost,
// so its value is v(S) = (p - c_S) * min{K_S, Q_S}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harvest/error.hpp"

namespace harvest {

struct Player {
  std::string id;
  double harvest_kg = 0.0;   // Q_i
  double capacity_kg = 0.0;  // K_i
  double unit_cost = 0.0;    // c_i
};

// Unvalidated input, as read from a roster file.
struct RawSituation {
  std::vector<Player> players;
  double price = 0.0;
};

struct ValidationOptions {
  // Accept rosters where every player has K_i == Q_i. Such situations are
  // flagged as degenerate; everything except the compensated set H stays
  // well defined.
  bool allow_degenerate = false;
};

struct Violation {
  ErrorCode code;
  int player = -1;  // roster index, -1 when not player specific
  std::string message;
};

// Returns every problem found, empty when the situation is valid.
std::vector<Violation> Validate(const RawSituation& raw,
                                const ValidationOptions& options = {});

class Situation {
 public:
  // Throws HarvestError (code of the first violation, message listing all of
  // them) when Validate reports anything.
  static Situation Create(RawSituation raw,
                          const ValidationOptions& options = {});
  static Situation Create(std::vector<Player> players, double price,
                          const ValidationOptions& options = {});

  int size() const { return static_cast<int>(players_.size()); }
  double price() const { return price_; }
  std::span<const Player> players() const { return players_; }
  const Player& player(int index) const { return players_[index]; }

  // All players have K_i == Q_i (only possible with allow_degenerate).
  bool degenerate() const { return degenerate_; }

  double TotalCapacity() const;
  double TotalHarvest() const;
  double MinCost() const;

  // Stable hash over ids, quantities, costs and price. Game tables remember
  // the fingerprint of the situation they were built from.
  std::uint64_t Fingerprint() const;

  // Roster index of the player with the given id, -1 if absent.
  int IndexOf(const std::string& id) const;

 private:
  Situation() = default;

  std::vector<Player> players_;
  double price_ = 0.0;
  bool degenerate_ = false;
};

// A set of players encoded as a bitmask over roster indices.
class Coalition {
 public:
  using Mask = std::uint64_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask mask) : mask_(mask) {}

  static Coalition Full(int n) {
    return Coalition(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static Coalition Singleton(int index) { return Coalition(Mask{1} << index); }
  // Zero-based roster indices.
  static Coalition FromIndices(std::span<const int> indices);

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  bool Contains(int index) const { return (mask_ >> index) & 1U; }
  int Size() const;
  std::vector<int> Members() const;

  // Throws kInvalidCoalition if any bit is outside a roster of size n.
  void CheckFits(int n) const;

  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  Mask mask_ = 0;
};

struct CoalitionStats {
  double min_cost = 0.0;     // c_S
  double capacity_kg = 0.0;  // K_S
  double harvest_kg = 0.0;   // Q_S
};

// Throws kEmptyCoalition for the empty set.
CoalitionStats ComputeCoalitionStats(const Situation& situation,
                                     Coalition coalition);

// v(S); zero for the empty coalition.
double Value(const Situation& situation, Coalition coalition);

inline constexpr int kDefaultEnumerationCap = 25;

struct EnumerateOptions {
  int max_players = kDefaultEnumerationCap;
  // Number of threads filling disjoint mask ranges. The table is identical
  // for any worker count.
  int workers = 1;
};

// The characteristic function over all 2^n coalitions, indexed by mask.
class GameTable {
 public:
  // A table not tied to any situation, used for checking arbitrary games.
  // values.size() must be 2^n and values[0] must be 0.
  static GameTable FromValues(int n, std::vector<double> values);

  int size() const { return n_; }
  std::span<const double> values() const { return values_; }
  double operator[](Coalition::Mask mask) const { return values_[mask]; }
  double GrandValue() const { return values_.back(); }
  std::uint64_t fingerprint() const { return fingerprint_; }

  // Throws kTableMismatch unless the table was enumerated from `situation`.
  void CheckBuiltFrom(const Situation& situation) const;

 private:
  friend GameTable EnumerateGame(const Situation&, const EnumerateOptions&);
  GameTable(int n, std::vector<double> values, std::uint64_t fingerprint)
      : n_(n), values_(std::move(values)), fingerprint_(fingerprint) {}

  int n_ = 0;
  std::vector<double> values_;
  std::uint64_t fingerprint_ = 0;
};

// Throws kTooManyPlayers when n exceeds options.max_players.
GameTable EnumerateGame(const Situation& situation,
                        const EnumerateOptions& options = {});

// Restriction to the players in `coalition`, in roster order, same price.
Situation Subgame(const Situation& situation, Coalition coalition);

// Relative comparison used for monetary values throughout the library.
inline constexpr double kRelativeTolerance = 1e-9;

}  // namespace harvest

#endif  // HARVEST_GAME_HPP_
