#include "harvest/roster.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace harvest {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      return fields;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

[[noreturn]] void Fail(const std::string& source, int line, int column,
                       const std::string& reason) {
  std::ostringstream msg;
  msg << source << ":" << line;
  if (column > 0) msg << ":" << column;
  msg << ": " << reason;
  throw HarvestError(ErrorCode::kParseError, msg.str());
}

bool IsBlankOrComment(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

std::ifstream OpenOrFail(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(path.string(), 0, 0, "cannot open file");
  return in;
}

}  // namespace

bool ParseDecimal(std::string_view text, double& out) {
  text = Trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return false;
  if (!std::isfinite(value)) return false;
  out = value;
  return true;
}

std::string FormatExact(double value) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

RosterFile ReadRosterFile(std::istream& in, const std::string& source) {
  static constexpr std::array<std::string_view, 4> kColumns = {
      "id", "harvest_kg", "capacity_kg", "unit_cost"};
  RosterFile roster;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t columns = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (IsBlankOrComment(line)) continue;
    const auto fields = SplitFields(line);

    if (!have_header) {
      columns = fields.size();
      if (columns != 3 && columns != 4) {
        Fail(source, line_no, 0,
             "header must be id,harvest_kg,capacity_kg[,unit_cost]");
      }
      for (std::size_t c = 0; c < columns; ++c) {
        if (fields[c] != kColumns[c]) {
          Fail(source, line_no, static_cast<int>(c + 1),
               "expected column '" + std::string(kColumns[c]) + "', found '" +
                   std::string(fields[c]) + "'");
        }
      }
      roster.has_costs = columns == 4;
      have_header = true;
      continue;
    }

    if (fields.size() != columns) {
      Fail(source, line_no, 0,
           "expected " + std::to_string(columns) + " fields, found " +
               std::to_string(fields.size()));
    }
    Player p;
    p.id = std::string(fields[0]);
    if (p.id.empty()) Fail(source, line_no, 1, "empty id");
    std::array<double*, 3> targets = {&p.harvest_kg, &p.capacity_kg,
                                      &p.unit_cost};
    for (std::size_t c = 1; c < columns; ++c) {
      if (!ParseDecimal(fields[c], *targets[c - 1])) {
        Fail(source, line_no, static_cast<int>(c + 1),
             std::string(kColumns[c]) + " '" + std::string(fields[c]) +
                 "' is not a decimal number");
      }
    }
    if (!roster.has_costs) p.unit_cost = std::nan("");
    roster.players.push_back(std::move(p));
  }
  if (!have_header) Fail(source, line_no, 0, "missing header row");
  return roster;
}

RosterFile ReadRosterFile(const std::filesystem::path& path) {
  std::ifstream in = OpenOrFail(path);
  return ReadRosterFile(in, path.string());
}

Situation ParseRoster(std::istream& in, double price,
                      const ValidationOptions& options,
                      const std::string& source) {
  RosterFile roster = ReadRosterFile(in, source);
  if (!roster.has_costs) {
    Fail(source, 1, 4, "roster has no unit_cost column");
  }
  return Situation::Create(std::move(roster.players), price, options);
}

Situation ParseRoster(const std::filesystem::path& path, double price,
                      const ValidationOptions& options) {
  std::ifstream in = OpenOrFail(path);
  return ParseRoster(in, price, options, path.string());
}

void WriteRoster(std::ostream& out, const Situation& situation) {
  out << "id,harvest_kg,capacity_kg,unit_cost\n";
  for (const Player& p : situation.players()) {
    out << p.id << ',' << FormatExact(p.harvest_kg) << ','
        << FormatExact(p.capacity_kg) << ',' << FormatExact(p.unit_cost)
        << '\n';
  }
}

Allocation ReadAllocationFile(std::istream& in, const Situation& situation,
                              const std::string& source) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  Allocation out;
  out.amounts.assign(situation.size(), 0.0);
  std::vector<bool> seen(situation.size(), false);

  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    const auto fields = SplitFields(line);
    if (!have_header) {
      if (fields.size() != 2 || fields[0] != "id" || fields[1] != "amount") {
        Fail(source, line_no, 0, "header must be id,amount");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != 2) Fail(source, line_no, 0, "expected 2 fields");
    const int index = situation.IndexOf(std::string(fields[0]));
    if (index < 0) {
      Fail(source, line_no, 1,
           "unknown player id '" + std::string(fields[0]) + "'");
    }
    if (seen[index]) {
      Fail(source, line_no, 1,
           "player id '" + std::string(fields[0]) + "' listed twice");
    }
    if (!ParseDecimal(fields[1], out.amounts[index])) {
      Fail(source, line_no, 2,
           "amount '" + std::string(fields[1]) + "' is not a decimal number");
    }
    seen[index] = true;
  }
  if (!have_header) Fail(source, line_no, 0, "missing header row");
  for (int i = 0; i < situation.size(); ++i) {
    if (!seen[i]) {
      throw HarvestError(ErrorCode::kLengthMismatch,
                         source + ": no amount for player '" +
                             situation.player(i).id + "'");
    }
  }
  return out;
}

Allocation ReadAllocationFile(const std::filesystem::path& path,
                              const Situation& situation) {
  std::ifstream in = OpenOrFail(path);
  return ReadAllocationFile(in, situation, path.string());
}

namespace {

template <typename Resolve>
Coalition ParseList(const std::string& list, Resolve resolve) {
  Coalition::Mask mask = 0;
  for (std::string_view token : SplitFields(list)) {
    if (token.empty()) {
      throw HarvestError(ErrorCode::kInvalidCoalition,
                         "empty entry in coalition list '" + list + "'");
    }
    const int index = resolve(token);
    const Coalition::Mask bit = Coalition::Mask{1} << index;
    if (mask & bit) {
      throw HarvestError(ErrorCode::kInvalidCoalition,
                         "player '" + std::string(token) +
                             "' listed twice in '" + list + "'");
    }
    mask |= bit;
  }
  return Coalition(mask);
}

}  // namespace

Coalition ParsePositions(const std::string& list, int n) {
  return ParseList(list, [&](std::string_view token) {
    int position = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), position);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        position < 1 || position > n) {
      throw HarvestError(ErrorCode::kInvalidCoalition,
                         "'" + std::string(token) +
                             "' is not a player position in 1.." +
                             std::to_string(n));
    }
    return position - 1;
  });
}

Coalition ParseIds(const std::string& list, const Situation& situation) {
  return ParseList(list, [&](std::string_view token) {
    const int index = situation.IndexOf(std::string(token));
    if (index < 0) {
      throw HarvestError(ErrorCode::kInvalidCoalition,
                         "unknown player id '" + std::string(token) + "'");
    }
    return index;
  });
}

}  // namespace harvest
