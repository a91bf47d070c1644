#include "ddg/error.hpp"

namespace ddg {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSelectionInvalid: return "SelectionInvalid";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kAcyclic: return "Acyclic";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kUnknownPoint: return "UnknownPoint";
    case ErrorCode::kValidationFailed: return "ValidationFailed";
    case ErrorCode::kRangeExceedsDegree: return "RangeExceedsDegree";
    case ErrorCode::kNotMoore: return "NotMoore";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kPlanGraphMismatch: return "PlanGraphMismatch";
    case ErrorCode::kCertificationFailed: return "CertificationFailed";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kFormatUnsupported: return "FormatUnsupported";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kCacheCorrupt: return "CacheCorrupt";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace ddg
