#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dasep {

enum class ErrorCode {
  InvalidParams,
  NotDivisible,
  AllOnesOrAllZeros,
  NotStochastic,
  ScaleMismatch,
  IndexMismatch,
  StateCapExceeded,
  DegreeCapExceeded,
  KernelDimensionNotOne,
  InvalidN,
  FixtureMissing,
  ParseError,
  ReconstructionFailed,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this exception; `code()` names
/// the condition so callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dasep
