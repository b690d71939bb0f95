#include "harvest/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "harvest/roster.hpp"
#include "json.hpp"

namespace harvest {
namespace {

using Json = nlohmann::ordered_json;

// Game tables are printed in full up to this many players.
constexpr int kGameTablePrintLimit = 8;
// JSON carries the full table up to this many players.
constexpr int kGameTableJsonLimit = 12;

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string Signed(long long x) {
  return (x > 0 ? "+" : "") + std::to_string(x);
}

Json Money(double x) {
  return Json{{"value", x}, {"display", DisplayAmount(x)}};
}

Json CoalitionIds(const Situation& situation, Coalition coalition) {
  Json ids = Json::array();
  for (int i : coalition.Members()) ids.push_back(situation.player(i).id);
  return ids;
}

Json ThresholdJson(const Situation& situation, const ThresholdReport& report) {
  Json binding = Json::array();
  for (const auto& b : report.binding) {
    binding.push_back({{"coalition", CoalitionIds(situation, b.coalition)},
                       {"bound", b.bound},
                       {"branch", BoundBranchName(b.branch)}});
  }
  Json out = {{"value", report.value},
              {"binding", binding},
              {"binding_count", report.binding_count},
              {"admissible", report.admissible},
              {"skipped", report.skipped}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

std::string WitnessText(const Situation& situation, const PropertyReport& r) {
  if (!r.witness) return "";
  const PropertyWitness& w = *r.witness;
  std::ostringstream s;
  const auto name = [&](std::size_t k) {
    return FormatCoalition(situation, w.coalitions.at(k));
  };
  switch (r.property) {
    case GameProperty::kNonnegative:
      s << "v(" << name(0) << ") = " << Fixed(w.values[0], 2) << " < 0";
      break;
    case GameProperty::kSuperadditive:
      s << "v(" << name(0) << ") + v(" << name(1)
        << ") = " << DisplayAmount(w.values[0] + w.values[1])
        << " > v(union) = " << DisplayAmount(w.values[2]);
      break;
    case GameProperty::kMonotone:
      s << "v(" << name(0) << ") = " << DisplayAmount(w.values[0]) << " > v("
        << name(1) << ") = " << DisplayAmount(w.values[1]);
      break;
    case GameProperty::kConvex:
      s << "player " << situation.player(w.player).id << ", S = " << name(0)
        << ", T = " << name(1) << ": v(T) - v(T\\i) = "
        << DisplayAmount(w.values[1]) << " < v(S) - v(S\\i) = "
        << DisplayAmount(w.values[0]);
      break;
  }
  return s.str();
}

Json WitnessJson(const Situation& situation, const PropertyReport& r) {
  if (!r.witness) return nullptr;
  Json coalitions = Json::array();
  for (Coalition c : r.witness->coalitions) {
    coalitions.push_back(CoalitionIds(situation, c));
  }
  Json out = {{"coalitions", coalitions}, {"values", r.witness->values}};
  if (r.witness->player >= 0) {
    out["player"] = situation.player(r.witness->player).id;
  }
  return out;
}

struct Column {
  const char* name;
  const std::optional<Allocation>* allocation;
};

std::optional<Allocation> NetCompensation(const RunResults& results) {
  if (!results.htr || !results.co) return std::nullopt;
  Allocation net;
  for (std::size_t i = 0; i < results.co->size(); ++i) {
    net.amounts.push_back((*results.htr)[i] - (*results.co)[i]);
  }
  return net;
}

std::string EmitText(const Situation& situation, const RunResults& results) {
  std::ostringstream out;
  const int n = situation.size();
  const bool capacity_bound =
      situation.TotalCapacity() <= situation.TotalHarvest();
  out << "HarvestTech game: " << n << " players, price "
      << FormatExact(situation.price()) << "\n";
  out << "Grand coalition: K_N = " << FormatExact(situation.TotalCapacity())
      << " kg, Q_N = " << FormatExact(situation.TotalHarvest()) << " kg ("
      << (capacity_bound ? "capacity bound" : "harvest bound")
      << "), c_N = " << FormatExact(situation.MinCost()) << "\n";
  if (situation.degenerate()) {
    out << "Note: every player is balanced (K_i = Q_i); crop reward "
           "compensation does not apply\n";
  }

  if (results.game) {
    const GameTable& table = *results.game;
    out << "\nCoalition values\n";
    if (n <= kGameTablePrintLimit) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-24s %10s %12s %12s %12s\n",
                    "coalition", "c_S", "K_S", "Q_S", "v(S)");
      out << line;
      for (std::uint64_t m = 1; m < table.values().size(); ++m) {
        const Coalition c(m);
        const CoalitionStats s = ComputeCoalitionStats(situation, c);
        std::snprintf(line, sizeof line, "  %-24s %10s %12s %12s %12lld\n",
                      FormatCoalition(situation, c).c_str(),
                      FormatExact(s.min_cost).c_str(),
                      FormatExact(s.capacity_kg).c_str(),
                      FormatExact(s.harvest_kg).c_str(),
                      DisplayAmount(table[m]));
        out << line;
      }
    } else {
      out << "  " << table.values().size() - 1
          << " nonempty coalitions enumerated (table omitted above "
          << kGameTablePrintLimit << " players)\n";
      out << "  v(N) = " << DisplayAmount(table.GrandValue()) << "\n";
    }
  }

  if (results.alpha_threshold || results.beta_threshold) {
    out << "\nCore thresholds\n";
    const auto print = [&](const char* label, const ThresholdReport& r) {
      out << "  " << label << " = " << Fixed(r.value, 6);
      if (!r.binding.empty()) {
        out << "  binding:";
        for (const auto& b : r.binding) {
          out << " " << FormatCoalition(situation, b.coalition) << " ("
              << BoundBranchName(b.branch) << ")";
        }
        if (r.binding_count > r.binding.size()) {
          out << " ... " << r.binding_count << " in total";
        }
      }
      out << "\n    admissible " << r.admissible << ", skipped " << r.skipped
          << "\n";
      if (!r.note.empty()) out << "    " << r.note << "\n";
    };
    if (results.alpha_threshold) print("alpha_bar", *results.alpha_threshold);
    if (results.beta_threshold) print("beta_bar ", *results.beta_threshold);
  }
  if (results.alpha || results.beta) {
    out << "  applied: alpha* = " << Fixed(results.alpha.value_or(0.0), 6)
        << ", beta* = " << Fixed(results.beta.value_or(0.0), 6);
    if (results.htr_branch) {
      out << ", HTR branch " << HtrBranchName(*results.htr_branch);
    }
    out << "\n";
  }

  const std::optional<Allocation> net = NetCompensation(results);
  const Column columns[] = {{"CO", &results.co},   {"BTC", &results.btc},
                            {"CRC", &results.crc}, {"HTR", &results.htr},
                            {"HTR-CO", &net}};
  out << "\nAllocations\n";
  char cell[64];
  std::snprintf(cell, sizeof cell, "  %-10s", "id");
  out << cell;
  for (const Column& c : columns) {
    std::snprintf(cell, sizeof cell, " %12s", c.name);
    out << cell;
  }
  out << "\n";
  if (results.co) {
    for (int i = 0; i < n; ++i) {
      std::snprintf(cell, sizeof cell, "  %-10s", situation.player(i).id.c_str());
      out << cell;
      for (const Column& c : columns) {
        if (!c.allocation->has_value()) {
          std::snprintf(cell, sizeof cell, " %12s", "-");
        } else {
          const long long x = DisplayAmount((**c.allocation)[i]);
          std::snprintf(cell, sizeof cell, " %12s",
                        (c.allocation == &net ? Signed(x) : std::to_string(x))
                            .c_str());
        }
        out << cell;
      }
      out << "\n";
    }
  }

  if (!results.properties.empty() || !results.skipped_properties.empty()) {
    out << "\nGame properties\n";
    for (const auto& p : results.properties) {
      std::snprintf(cell, sizeof cell, "  %-14s ", GamePropertyName(p.property));
      out << cell << (p.holds ? "holds" : "fails");
      if (!p.holds) out << ": " << WitnessText(situation, p);
      out << "\n";
    }
    for (GameProperty p : results.skipped_properties) {
      std::snprintf(cell, sizeof cell, "  %-14s ", GamePropertyName(p));
      out << cell << "not checked (too many players)\n";
    }
  }
  if (results.htr_core) {
    out << "\nHTR core check: "
        << (results.htr_core->InCore() ? "in core" : "NOT in core")
        << " (violations " << results.htr_core->violation_count << ")\n";
  }
  return out.str();
}

std::string EmitCsv(const Situation& situation, const RunResults& results) {
  std::ostringstream out;
  const std::optional<Allocation> net = NetCompensation(results);
  const Column columns[] = {{"co", &results.co},   {"btc", &results.btc},
                            {"crc", &results.crc}, {"htr", &results.htr},
                            {"net", &net}};
  out << "id";
  for (const Column& c : columns) out << ',' << c.name << ',' << c.name << "_display";
  out << "\n";
  if (!results.co) return out.str();
  for (int i = 0; i < situation.size(); ++i) {
    out << situation.player(i).id;
    for (const Column& c : columns) {
      if (c.allocation->has_value()) {
        const double x = (**c.allocation)[i];
        out << ',' << FormatExact(x) << ',' << DisplayAmount(x);
      } else {
        out << ",,";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string EmitJson(const Situation& situation, const RunResults& results) {
  Json doc;
  doc["price"] = situation.price();
  Json players = Json::array();
  for (const Player& p : situation.players()) {
    players.push_back({{"id", p.id},
                       {"harvest_kg", p.harvest_kg},
                       {"capacity_kg", p.capacity_kg},
                       {"unit_cost", p.unit_cost}});
  }
  doc["players"] = players;
  doc["degenerate"] = situation.degenerate();
  doc["grand_coalition"] = {
      {"capacity_kg", situation.TotalCapacity()},
      {"harvest_kg", situation.TotalHarvest()},
      {"min_cost", situation.MinCost()},
      {"capacity_bound", situation.TotalCapacity() <= situation.TotalHarvest()}};

  if (results.game) {
    const GameTable& table = *results.game;
    doc["grand_coalition"]["value"] = Money(table.GrandValue());
    if (situation.size() <= kGameTableJsonLimit) {
      Json game = Json::array();
      for (std::uint64_t m = 1; m < table.values().size(); ++m) {
        game.push_back({{"coalition", CoalitionIds(situation, Coalition(m))},
                        {"mask", m},
                        {"value", table[m]},
                        {"display", DisplayAmount(table[m])}});
      }
      doc["game"] = game;
    }
  }

  Json thresholds = Json::object();
  if (results.alpha_threshold) {
    thresholds["alpha_bar"] = ThresholdJson(situation, *results.alpha_threshold);
  }
  if (results.beta_threshold) {
    thresholds["beta_bar"] = ThresholdJson(situation, *results.beta_threshold);
  }
  doc["thresholds"] = thresholds;

  Json parameters = Json::object();
  if (results.alpha) parameters["alpha_star"] = *results.alpha;
  if (results.beta) parameters["beta_star"] = *results.beta;
  if (results.htr_branch) parameters["htr_branch"] = HtrBranchName(*results.htr_branch);
  doc["parameters"] = parameters;

  const std::optional<Allocation> net = NetCompensation(results);
  const Column columns[] = {{"co", &results.co},   {"btc", &results.btc},
                            {"crc", &results.crc}, {"htr", &results.htr},
                            {"net", &net}};
  Json allocations = Json::array();
  if (results.co) {
    for (int i = 0; i < situation.size(); ++i) {
      Json row = {{"id", situation.player(i).id}};
      for (const Column& c : columns) {
        if (c.allocation->has_value()) row[c.name] = Money((**c.allocation)[i]);
      }
      allocations.push_back(row);
    }
  }
  doc["allocations"] = allocations;

  if (results.htr_core) {
    doc["htr_core"] = {{"in_core", results.htr_core->InCore()},
                       {"efficient", results.htr_core->efficient},
                       {"violation_count", results.htr_core->violation_count},
                       {"max_deficit", results.htr_core->max_deficit}};
  }
  Json properties = Json::array();
  for (const auto& p : results.properties) {
    properties.push_back({{"property", GamePropertyName(p.property)},
                          {"holds", p.holds},
                          {"witness", WitnessJson(situation, p)}});
  }
  doc["properties"] = properties;
  Json skipped = Json::array();
  for (GameProperty p : results.skipped_properties) {
    skipped.push_back(GamePropertyName(p));
  }
  doc["skipped_properties"] = skipped;
  return doc.dump(2) + "\n";
}

}  // namespace

void CheckRunConfig(const RunConfig& config) {
  const auto in_range = [](double f) { return f >= 0.0 && f <= 0.5; };
  if (!in_range(config.alpha_fraction) || !in_range(config.beta_fraction)) {
    throw HarvestError(ErrorCode::kInvalidRange,
                       "alpha and beta fractions must lie in [0, 0.5]");
  }
}

RunResults Solve(const Situation& situation, const RunConfig& config) {
  CheckRunConfig(config);
  RunResults results;
  results.game = EnumerateGame(situation, {.max_players = config.max_players});
  const GameTable& table = *results.game;

  results.alpha_threshold = AlphaThreshold(situation, table);
  const double alpha_bar = results.alpha_threshold->value;
  double beta_bar = 0.0;
  if (!situation.degenerate()) {
    results.beta_threshold = BetaThreshold(situation, table);
    beta_bar = results.beta_threshold->value;
  }
  results.alpha = config.alpha_fraction * alpha_bar;
  results.beta = config.beta_fraction * beta_bar;

  results.co = CoAllocation(situation);
  results.btc = BtcAllocation(situation, *results.alpha);
  if (!situation.degenerate()) {
    results.crc = CrcAllocation(situation, *results.beta);
  }
  HtrResult htr = HtrAllocation(situation, *results.alpha, *results.beta,
                                alpha_bar, beta_bar);
  results.htr = std::move(htr.allocation);
  results.htr_branch = htr.branch;
  results.htr_core = IsCore(table, results.htr->amounts,
                            {.tolerance = config.core_tolerance});

  results.properties.push_back(CheckNonnegativity(table));
  if (situation.size() <= config.pairwise_cap) {
    results.properties.push_back(CheckSuperadditivity(table, config.pairwise_cap));
  } else {
    results.skipped_properties.push_back(GameProperty::kSuperadditive);
  }
  results.properties.push_back(CheckMonotonicity(table));
  if (situation.size() <= config.pairwise_cap) {
    results.properties.push_back(CheckConvexity(table, config.pairwise_cap));
  } else {
    results.skipped_properties.push_back(GameProperty::kConvex);
  }
  return results;
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw HarvestError(ErrorCode::kUnsupportedFormat,
                     "unsupported report format '" + std::string(name) +
                         "' (expected text, csv or json)");
}

long long DisplayAmount(double value) { return std::llround(value); }

std::string FormatCoalition(const Situation& situation, Coalition coalition) {
  std::string out = "{";
  bool first = true;
  for (int i : coalition.Members()) {
    if (!first) out += ",";
    out += situation.player(i).id;
    first = false;
  }
  return out + "}";
}

std::string EmitReport(const Situation& situation, const RunResults& results,
                       ReportFormat format) {
  switch (format) {
    case ReportFormat::kText: return EmitText(situation, results);
    case ReportFormat::kCsv: return EmitCsv(situation, results);
    case ReportFormat::kJson: return EmitJson(situation, results);
  }
  throw HarvestError(ErrorCode::kUnsupportedFormat, "unknown report format");
}

}  // namespace harvest
