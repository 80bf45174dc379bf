#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace htg {

enum class ErrorCode {
  DescriptorLengthMismatch,
  FieldLengthMismatch,
  BadAxisCoordinates,
  DepthLimitExceeded,
  IndexOutOfRange,
  NotRefined,
  WrongDimension,
  DimensionMismatch,
  NonPositiveArgument,
  ParseError,
  UnknownCanonicalGrid,
  BadParams,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// front ends (CLI exit codes, HTTP status) can classify it without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace htg
