#include "harvest/error.hpp"

namespace harvest {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyRoster: return "EmptyRoster";
    case ErrorCode::kNonPositivePrice: return "NonPositivePrice";
    case ErrorCode::kCostNotBelowPrice: return "CostNotBelowPrice";
    case ErrorCode::kNegativeQuantity: return "NegativeQuantity";
    case ErrorCode::kDegenerateSituation: return "DegenerateSituation";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmptyCoalition: return "EmptyCoalition";
    case ErrorCode::kInvalidCoalition: return "InvalidCoalition";
    case ErrorCode::kTooManyPlayers: return "TooManyPlayers";
    case ErrorCode::kTableMismatch: return "TableMismatch";
    case ErrorCode::kParamAboveHalfThreshold: return "ParamAboveHalfThreshold";
    case ErrorCode::kNegativeParameter: return "NegativeParameter";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kInvalidSimParams: return "InvalidSimParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

bool HarvestError::IsInputError() const {
  switch (code_) {
    case ErrorCode::kEmptyRoster:
    case ErrorCode::kNonPositivePrice:
    case ErrorCode::kCostNotBelowPrice:
    case ErrorCode::kNegativeQuantity:
    case ErrorCode::kDegenerateSituation:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kInvalidCoalition:
    case ErrorCode::kEmptyCoalition:
    case ErrorCode::kNegativeParameter:
    case ErrorCode::kParamAboveHalfThreshold:
    case ErrorCode::kInvalidRange:
    case ErrorCode::kInvalidSimParams:
    case ErrorCode::kParseError:
    case ErrorCode::kUnsupportedFormat:
    case ErrorCode::kLengthMismatch:
      return true;
    case ErrorCode::kTooManyPlayers:
    case ErrorCode::kTableMismatch:
      return false;
  }
  return false;
}

}  // namespace harvest
