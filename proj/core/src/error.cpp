#include "htg/error.hpp"

namespace htg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DescriptorLengthMismatch: return "DescriptorLengthMismatch";
    case ErrorCode::FieldLengthMismatch: return "FieldLengthMismatch";
    case ErrorCode::BadAxisCoordinates: return "BadAxisCoordinates";
    case ErrorCode::DepthLimitExceeded: return "DepthLimitExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotRefined: return "NotRefined";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCanonicalGrid: return "UnknownCanonicalGrid";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace htg
