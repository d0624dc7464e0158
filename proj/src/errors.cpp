#include "localtemp/errors.hpp"

namespace localtemp {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::BudgetExceeded: return "quadrature budget exceeded";
    case ErrorCode::Overflow: return "integer overflow";
    case ErrorCode::InconsistentWindow: return "inconsistent energy window";
    case ErrorCode::DegenerateFit: return "degenerate fit";
    case ErrorCode::Degenerate: return "degenerate point";
    case ErrorCode::UnsupportedCase: return "unsupported coupling case";
    case ErrorCode::Size: return "size limit exceeded";
    case ErrorCode::LengthMismatch: return "length mismatch";
  }
  return "unknown error";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace localtemp
