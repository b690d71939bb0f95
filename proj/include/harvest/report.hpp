#ifndef HARVEST_REPORT_HPP_
#define HARVEST_REPORT_HPP_

// End-to-end solve of a situation and rendering of the results as text, CSV
// or JSON. The JSON field names are documented in docs/report-schema.md.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harvest/allocations.hpp"
#include "harvest/analysis.hpp"
#include "harvest/game.hpp"
#include "harvest/thresholds.hpp"

namespace harvest {

struct RunConfig {
  // Applied compensation parameters as fractions of the thresholds. Must lie
  // in [0, 0.5], the range where the combined allocation stays in the core.
  double alpha_fraction = 0.5;
  double beta_fraction = 0.5;
  double core_tolerance = kDefaultCoreTolerance;
  int max_players = kDefaultEnumerationCap;
  int pairwise_cap = kDefaultPairwiseCap;
};

// Throws kInvalidRange for fractions outside [0, 0.5].
void CheckRunConfig(const RunConfig& config);

struct RunResults {
  std::optional<GameTable> game;
  std::optional<ThresholdReport> alpha_threshold;
  std::optional<ThresholdReport> beta_threshold;  // absent when degenerate
  std::optional<double> alpha;  // applied alpha*
  std::optional<double> beta;   // applied beta*
  std::optional<Allocation> co;
  std::optional<Allocation> btc;
  std::optional<Allocation> crc;
  std::optional<Allocation> htr;
  std::optional<HtrBranch> htr_branch;
  std::optional<CoreReport> htr_core;
  std::vector<PropertyReport> properties;
  // Property checks not run because n exceeds the pairwise cap.
  std::vector<GameProperty> skipped_properties;
};

RunResults Solve(const Situation& situation, const RunConfig& config = {});

enum class ReportFormat { kText, kCsv, kJson };

// Throws kUnsupportedFormat.
ReportFormat ParseReportFormat(std::string_view name);

// Whole currency units, half away from zero.
long long DisplayAmount(double value);

// "{1,3}" using player ids.
std::string FormatCoalition(const Situation& situation, Coalition coalition);

std::string EmitReport(const Situation& situation, const RunResults& results,
                       ReportFormat format);

}  // namespace harvest

#endif  // HARVEST_REPORT_HPP_
