#pragma once

#include <stdexcept>
#include <string>

namespace skewpbw {

enum class ErrorKind {
  InvalidArgument,
  RingMismatch,
  DivisionByZero,
  NotAUnit,
  InvalidRing,
  InvalidMap,
  InvalidDenominator,
  InvalidPresentation,
  PresentationMismatch,
  UndefinedLeader,
  MissingInverse,
  NotQuasiCommutative,
  InvalidParameterMatrix,
  UnsupportedFractionField,
  SideMismatch,
  NotInMultiplicativeSet,
  StepBoundExceeded,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skewpbw
