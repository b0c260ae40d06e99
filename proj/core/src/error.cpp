#include "nearspace/error.hpp"

namespace nearspace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotDicksonPair: return "NotDicksonPair";
    case ErrorCode::FullyDistributive: return "FullyDistributive";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::PivotZero: return "PivotZero";
    case ErrorCode::TriplePreconditionViolated: return "TriplePreconditionViolated";
    case ErrorCode::TripleInvalid: return "TripleInvalid";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NotDirect: return "NotDirect";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
  }
  return "Unknown";
}

}  // namespace nearspace
