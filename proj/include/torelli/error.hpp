#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torelli {

enum class ErrorCode {
  NotUnipotent,
  ValuationExceedsOrder,
  OddN,
  IndexRange,
  NoSolution,
  SearchExhausted,
  SchemaError,
  RelationFailure,
  DetNotPm1,
  ParseError,
  BadGenerator,
  NotTorelli,
  Degree0Nontrivial,
  DepthMismatch,
  NotInvolutive,
  NotInvertible,
  InexactDivision,
};

std::string_view error_code_name(ErrorCode code);

/// Every recoverable failure in the library is reported through this type;
/// `code()` is stable and is what the CLI and reports key on.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace torelli
