#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace breadthlab {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  Unsupported,
  NoNonsquare,
  DegenerateLeadingCoefficient,
  InvalidField,
  Overflow,
  NonSquare,
  NotSkewSymmetric,
  OddDimension,
  DimensionMismatch,
  NotNilpotent,
  BudgetExceeded,
  NotCentralIdeal,
  NoExtensionTable,
  UnsupportedField,
  Undetermined,
  HypothesisViolated,
  InvalidInputCertificate,
  VerificationFailed,
  WrongDimension,
  CharacteristicTwo,
  OddCharacteristic,
  SingularLinearPart,
  NotFourGenerated,
  NotClassTwo,
  EvenPrime,
  UnknownTheorem,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception type raised by every module; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace breadthlab
