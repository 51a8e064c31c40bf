#pragma once

#include <stdexcept>
#include <string>

namespace modtheta {

enum class ErrorCode {
  ParseError,
  InvalidDatum,
  SignatureMismatch,
  StarOrbitMismatch,
  DuplicateEmbedding,
  BadCmType,
  UnknownEmbedding,
  DifferentOrbits,
  CaseCUnsupported,
  LengthMismatch,
  NotDominant,
  NotPositive,
  NotSimple,
  NotSymmetric,
  NotInCmType,
  UpsilonEmpty,
  ZeroSignature,
  PreconditionViolated,
  BoundsExceeded,
  BadPartition,
  NotApplicable,
  NotSupported,
  Overflow,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace modtheta
