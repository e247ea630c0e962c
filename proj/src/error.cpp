#include "srcalg/error.hpp"

namespace srcalg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InfiniteIndex: return "InfiniteIndex";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::LogicFault: return "LogicFault";
  }
  return "Unknown";
}

}  // namespace srcalg
