#include "dasep/error.hpp"

namespace dasep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::AllOnesOrAllZeros: return "AllOnesOrAllZeros";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::StateCapExceeded: return "StateCapExceeded";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::KernelDimensionNotOne: return "KernelDimensionNotOne";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::FixtureMissing: return "FixtureMissing";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace dasep
