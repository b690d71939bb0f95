#ifndef HARVEST_TESTS_ORACLE_HPP_
#define HARVEST_TESTS_ORACLE_HPP_

// Direct, loop-over-members reference formulas. Nothing here calls into the
// library's enumeration or threshold code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "harvest/game.hpp"
#include "harvest/roster.hpp"

namespace harvest::oracle {

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(HT_DATA_DIR) / name;
}

inline Situation Load(const std::string& name, double price) {
  return ParseRoster(DataPath(name), price);
}

inline Situation Napa() { return Load("napa.csv", 1.70); }

inline bool In(std::uint64_t mask, int i) { return (mask >> i) & 1U; }

inline double Value(const Situation& s, std::uint64_t mask) {
  if (mask == 0) return 0.0;
  double cost = std::numeric_limits<double>::infinity();
  double k = 0.0;
  double q = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    if (!In(mask, i)) continue;
    cost = std::min(cost, s.player(i).unit_cost);
    k += s.player(i).capacity_kg;
    q += s.player(i).harvest_kg;
  }
  return (s.price() - cost) * std::min(k, q);
}

inline std::vector<double> Gamma(const Situation& s) {
  double k = 0.0;
  double q = 0.0;
  double c = std::numeric_limits<double>::infinity();
  for (const auto& p : s.players()) {
    k += p.capacity_kg;
    q += p.harvest_kg;
    c = std::min(c, p.unit_cost);
  }
  std::vector<double> g;
  for (const auto& p : s.players()) {
    g.push_back((s.price() - c) * (k <= q ? p.capacity_kg : p.harvest_kg));
  }
  return g;
}

inline std::vector<bool> CheapestSet(const Situation& s) {
  double c = std::numeric_limits<double>::infinity();
  for (const auto& p : s.players()) c = std::min(c, p.unit_cost);
  std::vector<bool> m;
  for (const auto& p : s.players()) m.push_back(p.unit_cost == c);
  return m;
}

inline std::vector<double> Btc(const Situation& s, double alpha) {
  const auto g = Gamma(s);
  const auto m = CheapestSet(s);
  double pool = 0.0;
  int m_size = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (m[i]) {
      ++m_size;
    } else {
      pool += g[i];
    }
  }
  std::vector<double> t(g);
  for (int i = 0; i < s.size(); ++i) {
    t[i] = m[i] ? g[i] + alpha * pool / m_size : (1.0 - alpha) * g[i];
  }
  return t;
}

// H: players on the compensated side; taxed: neither H nor K_i == Q_i.
struct Sides {
  std::vector<bool> h;
  std::vector<bool> taxed;
  double imbalance = 0.0;
};

inline Sides SplitSides(const Situation& s) {
  double k = 0.0;
  double q = 0.0;
  for (const auto& p : s.players()) {
    k += p.capacity_kg;
    q += p.harvest_kg;
  }
  Sides sides;
  for (const auto& p : s.players()) {
    const bool h = k <= q ? p.capacity_kg < p.harvest_kg
                          : p.capacity_kg > p.harvest_kg;
    sides.h.push_back(h);
    sides.taxed.push_back(!h && p.capacity_kg != p.harvest_kg);
    if (h) sides.imbalance += p.harvest_kg - p.capacity_kg;
  }
  return sides;
}

inline std::vector<double> Crc(const Situation& s, double beta) {
  const auto g = Gamma(s);
  const Sides sides = SplitSides(s);
  double base = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    if (sides.taxed[i]) base += g[i];
  }
  std::vector<double> r(g);
  for (int i = 0; i < s.size(); ++i) {
    const auto& p = s.player(i);
    if (sides.taxed[i]) {
      r[i] = (1.0 - beta) * g[i];
    } else if (sides.h[i]) {
      r[i] = g[i] + (p.harvest_kg - p.capacity_kg) / sides.imbalance * beta * base;
    }
  }
  return r;
}

// Largest rate keeping a linear family x(r) = gamma + r * d in the core:
// min over coalitions S of (sum_S gamma - v(S)) / (-sum_S d) where the
// denominator is positive.
inline double LinearThreshold(const Situation& s, const std::vector<double>& d) {
  const auto g = Gamma(s);
  const std::uint64_t full = (std::uint64_t{1} << s.size()) - 1;
  const double v_n = Value(s, full);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    double sum_g = 0.0;
    double sum_d = 0.0;
    for (int i = 0; i < s.size(); ++i) {
      if (!In(mask, i)) continue;
      sum_g += g[i];
      sum_d += d[i];
    }
    const double denom = -sum_d;
    if (denom <= 1e-9 * std::max(1.0, v_n)) continue;
    best = std::min(best, std::max(0.0, sum_g - Value(s, mask)) / denom);
  }
  return best;
}

inline double AlphaBar(const Situation& s) {
  const auto g = Gamma(s);
  const auto t = Btc(s, 1.0);
  std::vector<double> d(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) d[i] = t[i] - g[i];
  return LinearThreshold(s, d);
}

inline double BetaBar(const Situation& s) {
  const auto g = Gamma(s);
  const auto r = Crc(s, 1.0);
  std::vector<double> d(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) d[i] = r[i] - g[i];
  return LinearThreshold(s, d);
}

inline bool InCore(const Situation& s, const std::vector<double>& x,
                   double tolerance) {
  const std::uint64_t full = (std::uint64_t{1} << s.size()) - 1;
  const double tol = tolerance * std::max(1.0, Value(s, full));
  double total = 0.0;
  for (double a : x) total += a;
  if (std::abs(total - Value(s, full)) > tol) return false;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    double sum = 0.0;
    for (int i = 0; i < s.size(); ++i) {
      if (In(mask, i)) sum += x[i];
    }
    if (sum < Value(s, mask) - tol) return false;
  }
  return true;
}

}  // namespace harvest::oracle

#endif  // HARVEST_TESTS_ORACLE_HPP_
