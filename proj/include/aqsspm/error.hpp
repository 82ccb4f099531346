#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aqsspm {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Range,
  Shape,
  UnknownOutcome,
  NoRows,
  SingleClass,
  DegenerateTable,
  NonFinite,
  BudgetExceeded,
  LengthMismatch,
  ZeroVariance,
  Degenerate,
  CatalogMismatch,
  Io,
  Internal,
};

// Stable machine-readable names, printed by the CLI as the error prefix.
constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Range: return "E_RANGE";
    case ErrorCode::Shape: return "E_SHAPE";
    case ErrorCode::UnknownOutcome: return "E_UNKNOWN_OUTCOME";
    case ErrorCode::NoRows: return "E_NO_ROWS";
    case ErrorCode::SingleClass: return "E_SINGLE_CLASS";
    case ErrorCode::DegenerateTable: return "E_DEGENERATE_TABLE";
    case ErrorCode::NonFinite: return "E_NON_FINITE";
    case ErrorCode::BudgetExceeded: return "E_BUDGET_EXCEEDED";
    case ErrorCode::LengthMismatch: return "E_LENGTH_MISMATCH";
    case ErrorCode::ZeroVariance: return "E_ZERO_VARIANCE";
    case ErrorCode::Degenerate: return "E_DEGENERATE";
    case ErrorCode::CatalogMismatch: return "E_CATALOG_MISMATCH";
    case ErrorCode::Io: return "E_IO";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aqsspm
