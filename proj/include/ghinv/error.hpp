#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghinv {

enum class ErrorCode {
  kDescriptorMismatch,
  kDimensionMismatch,
  kUnsupported,
  kPrecondition,
  kParse,
  kBudget,
  kInternal,
};

// Stable machine-readable names, used by the CLI error payload.
constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDescriptorMismatch: return "descriptor-mismatch";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kParse: return "malformed-input";
    case ErrorCode::kBudget: return "budget-exceeded";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ghinv
