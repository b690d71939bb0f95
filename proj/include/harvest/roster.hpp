#ifndef HARVEST_ROSTER_HPP_
#define HARVEST_ROSTER_HPP_

// Roster CSV files.
//
//   id,harvest_kg,capacity_kg,unit_cost
//   1,198000,253000,0.95
//
// The header is required. Rows keep file order, which fixes the coalition
// bit order. A roster without the unit_cost column is accepted by
// ReadRosterFile (for cost simulation) but cannot become a Situation.
// Numbers are parsed locale-independently and converted to double once.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "harvest/allocations.hpp"
#include "harvest/game.hpp"

namespace harvest {

struct RosterFile {
  std::vector<Player> players;
  bool has_costs = true;
};

// Throws HarvestError(kParseError) with "source:line:column: reason".
RosterFile ReadRosterFile(std::istream& in, const std::string& source = "roster");
RosterFile ReadRosterFile(const std::filesystem::path& path);

// Parses and validates. Validation failures propagate as HarvestError with
// the validation code.
Situation ParseRoster(std::istream& in, double price,
                      const ValidationOptions& options = {},
                      const std::string& source = "roster");
Situation ParseRoster(const std::filesystem::path& path, double price,
                      const ValidationOptions& options = {});

void WriteRoster(std::ostream& out, const Situation& situation);

// Allocation files: header "id,amount", one row per player in any order.
// Every roster id must appear exactly once.
Allocation ReadAllocationFile(std::istream& in, const Situation& situation,
                              const std::string& source = "allocation");
Allocation ReadAllocationFile(const std::filesystem::path& path,
                              const Situation& situation);

// Parses "1,3" style lists of 1-based roster positions.
Coalition ParsePositions(const std::string& list, int n);
// Parses comma-separated player ids.
Coalition ParseIds(const std::string& list, const Situation& situation);

// Shortest decimal text that reads back to the same double.
std::string FormatExact(double value);

// Parses a decimal number, rejecting trailing text and non-finite values.
// Returns false on failure.
bool ParseDecimal(std::string_view text, double& out);

}  // namespace harvest

#endif  // HARVEST_ROSTER_HPP_
