#include "modtheta/errors.hpp"

namespace modtheta {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::StarOrbitMismatch: return "StarOrbitMismatch";
    case ErrorCode::DuplicateEmbedding: return "DuplicateEmbedding";
    case ErrorCode::BadCmType: return "BadCmType";
    case ErrorCode::UnknownEmbedding: return "UnknownEmbedding";
    case ErrorCode::DifferentOrbits: return "DifferentOrbits";
    case ErrorCode::CaseCUnsupported: return "CaseCUnsupported";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotInCmType: return "NotInCmType";
    case ErrorCode::UpsilonEmpty: return "UpsilonEmpty";
    case ErrorCode::ZeroSignature: return "ZeroSignature";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BoundsExceeded: return "BoundsExceeded";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace modtheta
