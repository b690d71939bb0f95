#ifndef HARVEST_ERROR_HPP_
#define HARVEST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace harvest {

enum class ErrorCode {
  kEmptyRoster,
  kNonPositivePrice,
  kCostNotBelowPrice,
  kNegativeQuantity,
  kDegenerateSituation,
  kDuplicateId,
  kEmptyCoalition,
  kInvalidCoalition,
  kTooManyPlayers,
  kTableMismatch,
  kParamAboveHalfThreshold,
  kNegativeParameter,
  kLengthMismatch,
  kInvalidRange,
  kInvalidSimParams,
  kParseError,
  kUnsupportedFormat,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every error raised by the library carries one of the codes above. The CLI
// maps codes onto exit statuses, so callers should not need to parse the
// message text.
class HarvestError : public std::runtime_error {
 public:
  HarvestError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // True for input problems (bad roster, bad flag value) as opposed to
  // failures while computing on a valid situation.
  bool IsInputError() const;

 private:
  ErrorCode code_;
};

}  // namespace harvest

#endif  // HARVEST_ERROR_HPP_
