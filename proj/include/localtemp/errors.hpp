#pragma once

#include <stdexcept>
#include <string>

namespace localtemp {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  BudgetExceeded,
  Overflow,
  InconsistentWindow,
  DegenerateFit,
  Degenerate,
  UnsupportedCase,
  Size,
  LengthMismatch,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace localtemp
