#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddg {

enum class ErrorCode {
  kNotPrimePower,
  kDivisionByZero,
  kInvalidArgument,
  kSelectionInvalid,
  kVertexOutOfRange,
  kSelfLoop,
  kDisconnected,
  kAcyclic,
  kNotBipartite,
  kUnknownPoint,
  kValidationFailed,
  kRangeExceedsDegree,
  kNotMoore,
  kInfeasible,
  kPlanGraphMismatch,
  kCertificationFailed,
  kBudgetExceeded,
  kFormatUnsupported,
  kParseError,
  kCacheCorrupt,
  kIo,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can turn it into a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ddg
