#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "harvest/allocations.hpp"
#include "harvest/analysis.hpp"
#include "harvest/game.hpp"
#include "harvest/report.hpp"
#include "harvest/roster.hpp"
#include "harvest/simulate.hpp"
#include "harvest/thresholds.hpp"

namespace harvest::cli {
namespace {

struct CommonArgs {
  std::string file;
  std::string price;
  bool allow_degenerate = false;
  int cap = kDefaultEnumerationCap;
};

double ParseFlag(const std::string& text, const std::string& flag) {
  double value = 0.0;
  if (!ParseDecimal(text, value)) {
    throw HarvestError(ErrorCode::kParseError,
                       flag + ": '" + text + "' is not a decimal number");
  }
  return value;
}

std::string Fixed6(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

void AddCommon(CLI::App* cmd, CommonArgs& args, bool needs_price = true) {
  cmd->add_option("file", args.file, "Roster CSV (id,harvest_kg,capacity_kg,unit_cost)")
      ->required();
  auto* price = cmd->add_option("--price", args.price, "Market price per kilogram");
  if (needs_price) price->required();
  cmd->add_flag("--allow-degenerate", args.allow_degenerate,
                "Accept rosters where every player has capacity == harvest");
  cmd->add_option("--cap", args.cap, "Maximum player count for enumeration")
      ->check(CLI::Range(1, 30));
}

Situation Load(const CommonArgs& args) {
  return ParseRoster(args.file, ParseFlag(args.price, "--price"),
                     {.allow_degenerate = args.allow_degenerate});
}

GameTable Enumerate(const Situation& s, const CommonArgs& args) {
  return EnumerateGame(s, {.max_players = args.cap});
}

void PrintAllocation(std::ostream& out, const Situation& s, const Allocation& a) {
  out << std::left << std::setw(10) << "id" << "amount\n";
  for (int i = 0; i < s.size(); ++i) {
    out << std::left << std::setw(10) << s.player(i).id << DisplayAmount(a[i])
        << "\n";
  }
  out << std::left << std::setw(10) << "total" << DisplayAmount(a.Total()) << "\n";
  out << "allocation: (";
  for (int i = 0; i < s.size(); ++i) {
    out << (i ? ", " : "") << DisplayAmount(a[i]);
  }
  out << ")\n";
}

void PrintBinding(std::ostream& out, const Situation& s, const ThresholdReport& r) {
  for (const auto& b : r.binding) {
    out << "  " << FormatCoalition(s, b.coalition) << " "
        << BoundBranchName(b.branch) << " bound " << Fixed6(b.bound) << "\n";
  }
  if (r.binding_count > r.binding.size()) {
    out << "  ... " << r.binding_count << " binding coalitions in total\n";
  }
  if (!r.note.empty()) out << "  " << r.note << "\n";
  out << "  admissible " << r.admissible << ", skipped " << r.skipped << "\n";
}

int CmdValidate(const CommonArgs& args, std::ostream& out, std::ostream& err) {
  RosterFile roster = ReadRosterFile(args.file);
  RawSituation raw{std::move(roster.players), ParseFlag(args.price, "--price")};
  if (!roster.has_costs) {
    err << "error: roster has no unit_cost column\n";
    return kExitInputError;
  }
  const auto violations =
      Validate(raw, {.allow_degenerate = args.allow_degenerate});
  if (!violations.empty()) {
    for (const auto& v : violations) {
      err << "invalid: " << ErrorCodeName(v.code) << ": " << v.message << "\n";
    }
    return kExitInputError;
  }
  const Situation s = Situation::Create(std::move(raw),
                                        {.allow_degenerate = args.allow_degenerate});
  out << "valid: " << s.size() << " players, price " << FormatExact(s.price())
      << ", K_N = " << FormatExact(s.TotalCapacity())
      << ", Q_N = " << FormatExact(s.TotalHarvest()) << "\n";
  if (s.degenerate()) out << "warning: degenerate situation (all K_i = Q_i)\n";
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for HarvestTech cooperative games", "ht"};
  app.require_subcommand(1);

  CommonArgs common;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a roster");
  AddCommon(validate, common);
  validate->callback([&] {
    action = [&] { return CmdValidate(common, out, err); };
  });

  std::string coalition_list;
  bool by_id = false;
  auto* value = app.add_subcommand("value", "Value of one coalition");
  AddCommon(value, common);
  value->add_option("--coalition", coalition_list,
                    "Comma-separated 1-based roster positions")
      ->required();
  value->add_flag("--ids", by_id, "Interpret --coalition entries as player ids");
  value->callback([&] {
    action = [&] {
      const Situation s = Load(common);
      const Coalition c = by_id ? ParseIds(coalition_list, s)
                                : ParsePositions(coalition_list, s.size());
      const CoalitionStats stats = ComputeCoalitionStats(s, c);
      out << "coalition " << FormatCoalition(s, c)
          << ": c_S = " << FormatExact(stats.min_cost)
          << ", K_S = " << FormatExact(stats.capacity_kg)
          << ", Q_S = " << FormatExact(stats.harvest_kg) << "\n";
      out << "v = " << DisplayAmount(Value(s, c)) << "\n";
      return kExitOk;
    };
  });

  auto* game = app.add_subcommand("game", "Enumerate the characteristic function");
  AddCommon(game, common);
  game->callback([&] {
    action = [&] {
      const Situation s = Load(common);
      const GameTable table = Enumerate(s, common);
      if (s.size() > 12) {
        out << "v(N) = " << DisplayAmount(table.GrandValue()) << " ("
            << table.values().size() - 1 << " coalitions enumerated)\n";
        return kExitOk;
      }
      for (std::uint64_t m = 1; m < table.values().size(); ++m) {
        out << std::left << std::setw(28) << FormatCoalition(s, Coalition(m))
            << DisplayAmount(table[m]) << "\n";
      }
      return kExitOk;
    };
  });

  std::string method;
  std::string alpha_text;
  std::string beta_text;
  auto* alloc = app.add_subcommand("alloc", "Compute an allocation");
  AddCommon(alloc, common);
  alloc->add_option("--method", method, "co, btc, crc or htr")
      ->required()
      ->check(CLI::IsMember({"co", "btc", "crc", "htr"}));
  alloc->add_option("--alpha", alpha_text,
                    "BTC rate (default: half the core threshold)");
  alloc->add_option("--beta", beta_text,
                    "CRC rate (default: half the core threshold)");
  alloc->callback([&] {
    action = [&] {
      const Situation s = Load(common);
      if (method == "co") {
        out << "method: co\n";
        PrintAllocation(out, s, CoAllocation(s));
        return kExitOk;
      }
      const GameTable table = Enumerate(s, common);
      const double alpha_bar = AlphaThreshold(s, table).value;
      const double beta_bar =
          s.degenerate() ? 0.0 : BetaThreshold(s, table).value;
      const double alpha = alpha_text.empty() ? alpha_bar / 2.0
                                              : ParseFlag(alpha_text, "--alpha");
      const double beta = beta_text.empty() ? beta_bar / 2.0
                                            : ParseFlag(beta_text, "--beta");
      if (method == "btc") {
        out << "method: btc, alpha = " << Fixed6(alpha) << "\n";
        PrintAllocation(out, s, BtcAllocation(s, alpha));
      } else if (method == "crc") {
        out << "method: crc, beta = " << Fixed6(beta) << "\n";
        PrintAllocation(out, s, CrcAllocation(s, beta));
      } else {
        const HtrResult htr = HtrAllocation(s, alpha, beta, alpha_bar, beta_bar);
        out << "method: htr, alpha* = " << Fixed6(alpha)
            << ", beta* = " << Fixed6(beta)
            << ", branch " << HtrBranchName(htr.branch) << "\n";
        PrintAllocation(out, s, htr.allocation);
      }
      return kExitOk;
    };
  });

  bool show_binding = false;
  auto* thresholds = app.add_subcommand("thresholds", "Core thresholds of BTC and CRC");
  AddCommon(thresholds, common);
  thresholds->add_flag("--binding", show_binding, "List binding coalitions");
  thresholds->callback([&] {
    action = [&] {
      const Situation s = Load(common);
      const GameTable table = Enumerate(s, common);
      const ThresholdReport a = AlphaThreshold(s, table);
      out << "alpha_bar = " << Fixed6(a.value) << "\n";
      if (show_binding) PrintBinding(out, s, a);
      if (s.degenerate()) {
        out << "beta_bar = n/a (degenerate situation)\n";
        return kExitOk;
      }
      const ThresholdReport b = BetaThreshold(s, table);
      out << "beta_bar = " << Fixed6(b.value) << "\n";
      if (show_binding) PrintBinding(out, s, b);
      return kExitOk;
    };
  });

  std::string alloc_file;
  double tolerance = kDefaultCoreTolerance;
  auto* check_core = app.add_subcommand("check-core", "Check core membership");
  AddCommon(check_core, common);
  check_core->add_option("--alloc", alloc_file, "Allocation CSV (id,amount)")
      ->required();
  check_core->add_option("--tolerance", tolerance,
                         "Tolerance relative to max(1, v(N))");
  check_core->callback([&] {
    action = [&] {
      const Situation s = Load(common);
      const GameTable table = Enumerate(s, common);
      const Allocation x = ReadAllocationFile(alloc_file, s);
      const CoreReport r = IsCore(table, x.amounts, {.tolerance = tolerance});
      out << (r.InCore() ? "in core" : "not in core") << "\n";
      out << "efficient: " << (r.efficient ? "yes" : "no") << " (total "
          << DisplayAmount(r.total) << ", v(N) = "
          << DisplayAmount(table.GrandValue()) << ")\n";
      for (const auto& v : r.violations) {
        out << "  violated by " << FormatCoalition(s, v.coalition)
            << ": v(S) = " << DisplayAmount(v.value)
            << ", allocated " << DisplayAmount(v.allocated)
            << ", deficit " << DisplayAmount(v.deficit) << "\n";
      }
      if (r.violation_count > r.violations.size()) {
        out << "  ... " << r.violation_count << " violations in total\n";
      }
      return kExitOk;
    };
  });

  auto* props = app.add_subcommand("props", "Structural properties of the game");
  AddCommon(props, common);
  props->callback([&] {
    action = [&] {
      const Situation s = Load(common);
      RunResults results;
      const GameTable table = Enumerate(s, common);
      results.properties.push_back(CheckNonnegativity(table));
      if (s.size() <= kDefaultPairwiseCap) {
        results.properties.push_back(CheckSuperadditivity(table));
      } else {
        results.skipped_properties.push_back(GameProperty::kSuperadditive);
      }
      results.properties.push_back(CheckMonotonicity(table));
      if (s.size() <= kDefaultPairwiseCap) {
        results.properties.push_back(CheckConvexity(table));
      } else {
        results.skipped_properties.push_back(GameProperty::kConvex);
      }
      const std::string text = EmitReport(s, results, ReportFormat::kText);
      out << text.substr(text.find("Game properties"));
      return kExitOk;
    };
  });

  std::string mean_text = "0.495";
  std::string sd_text = "0.03";
  std::string clip_text = "0.44,0.55";
  std::uint64_t seed = 0;
  std::string out_file;
  auto* simulate = app.add_subcommand("simulate-costs",
                                      "Draw unit costs from a truncated normal");
  AddCommon(simulate, common, /*needs_price=*/false);
  simulate->add_option("--mean", mean_text, "Mean cost")->capture_default_str();
  simulate->add_option("--sd", sd_text, "Standard deviation")->capture_default_str();
  simulate->add_option("--clip", clip_text, "LO,HI truncation bounds")
      ->capture_default_str();
  simulate->add_option("--seed", seed, "Random seed")->required();
  simulate->add_option("--out", out_file, "Write the roster here instead of stdout");
  simulate->callback([&] {
    action = [&] {
      const double price =
          common.price.empty() ? 0.70 : ParseFlag(common.price, "--price");
      const auto comma = clip_text.find(',');
      if (comma == std::string::npos) {
        throw HarvestError(ErrorCode::kParseError,
                           "--clip: expected LO,HI, got '" + clip_text + "'");
      }
      CostSimParams params{ParseFlag(mean_text, "--mean"),
                           ParseFlag(sd_text, "--sd"),
                           ParseFlag(clip_text.substr(0, comma), "--clip"),
                           ParseFlag(clip_text.substr(comma + 1), "--clip")};
      const RosterFile roster = ReadRosterFile(common.file);
      const Situation s =
          SimulateCosts(roster.players, price, params, seed,
                        {.allow_degenerate = common.allow_degenerate});
      if (out_file.empty()) {
        WriteRoster(out, s);
      } else {
        std::ofstream f(out_file);
        if (!f) {
          throw HarvestError(ErrorCode::kParseError,
                             "--out: cannot write '" + out_file + "'");
        }
        WriteRoster(f, s);
      }
      return kExitOk;
    };
  });

  std::string format = "text";
  double alpha_fraction = 0.5;
  double beta_fraction = 0.5;
  auto* report = app.add_subcommand("report", "Full analysis report");
  AddCommon(report, common);
  report->add_option("--format", format, "text, csv or json")->capture_default_str();
  report->add_option("--alpha-fraction", alpha_fraction,
                     "alpha* as a fraction of alpha_bar, in [0, 0.5]");
  report->add_option("--beta-fraction", beta_fraction,
                     "beta* as a fraction of beta_bar, in [0, 0.5]");
  report->callback([&] {
    action = [&] {
      const ReportFormat f = ParseReportFormat(format);
      const Situation s = Load(common);
      RunConfig config;
      config.alpha_fraction = alpha_fraction;
      config.beta_fraction = beta_fraction;
      config.max_players = common.cap;
      out << EmitReport(s, Solve(s, config), f);
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    return action ? action() : kExitInputError;
  } catch (const HarvestError& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return e.IsInputError() ? kExitInputError : kExitComputeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputeError;
  }
}

}  // namespace harvest::cli
