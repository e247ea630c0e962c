#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srcalg {

enum class ErrorCode {
  DivisionByZero,
  MixedRings,
  NotPrime,
  MixedGroups,
  NotFound,
  InfiniteIndex,
  InexactDivision,
  ConstantPolynomial,
  RetryExhausted,
  EmptySupport,
  InvalidArgument,
  Unsupported,
  Parse,
  LogicFault,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace srcalg
