#pragma once

#include <stdexcept>
#include <string>

namespace ot {

enum class ErrorCode {
  InvalidInput,
  DegenerateInput,
  BudgetExceeded,
  RetriesExhausted,
  InsufficientInput,
  ParseError,
  ProjectionRepairFailed,
  InternalInvariantViolation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace ot
