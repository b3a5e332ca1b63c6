#include "ekr/error.hpp"

namespace ekr {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kInvalidBlock: return "InvalidBlock";
    case ErrorCode::kPairUncovered: return "PairUncovered";
    case ErrorCode::kPairRepeated: return "PairRepeated";
    case ErrorCode::kParameterMismatch: return "ParameterMismatch";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kNotResolvable: return "NotResolvable";
    case ErrorCode::kNotIntersecting: return "NotIntersecting";
    case ErrorCode::kPointOnBlock: return "PointOnBlock";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kHasONan: return "HasONan";
  }
  return "Unknown";
}

}  // namespace ekr
