#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

enum class ErrorCode {
  kDomain,             // argument outside a formula's stated domain
  kNotPrimePower,
  kDivisionByZero,
  kInvalidBlock,       // wrong arity, point out of range, repeated point
  kPairUncovered,
  kPairRepeated,
  kParameterMismatch,
  kParse,
  kIo,
  kNotResolvable,
  kNotIntersecting,
  kPointOnBlock,
  kBudgetExceeded,
  kHasONan,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by design validation. `point_a`/`point_b` name the offending pair;
// `block_a`/`block_b` are the two blocks covering it for kPairRepeated.
class ValidationError : public Error {
 public:
  ValidationError(ErrorCode code, const std::string& what, int point_a = -1,
                  int point_b = -1, int block_a = -1, int block_b = -1)
      : Error(code, what),
        point_a(point_a),
        point_b(point_b),
        block_a(block_a),
        block_b(block_b) {}

  int point_a;
  int point_b;
  int block_a;
  int block_b;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(ErrorCode::kParse, what), line(line) {}

  int line;
};

}  // namespace ekr
