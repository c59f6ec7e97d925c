#include "breadthlab/error.hpp"

namespace breadthlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero:
      return "DivisionByZero";
    case ErrorKind::FieldMismatch:
      return "FieldMismatch";
    case ErrorKind::Unsupported:
      return "Unsupported";
    case ErrorKind::NoNonsquare:
      return "NoNonsquare";
    case ErrorKind::DegenerateLeadingCoefficient:
      return "DegenerateLeadingCoefficient";
    case ErrorKind::InvalidField:
      return "InvalidField";
    case ErrorKind::Overflow:
      return "Overflow";
    case ErrorKind::NonSquare:
      return "NonSquare";
    case ErrorKind::NotSkewSymmetric:
      return "NotSkewSymmetric";
    case ErrorKind::OddDimension:
      return "OddDimension";
    case ErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::NotNilpotent:
      return "NotNilpotent";
    case ErrorKind::BudgetExceeded:
      return "BudgetExceeded";
    case ErrorKind::NotCentralIdeal:
      return "NotCentralIdeal";
    case ErrorKind::NoExtensionTable:
      return "NoExtensionTable";
    case ErrorKind::UnsupportedField:
      return "UnsupportedField";
    case ErrorKind::Undetermined:
      return "Undetermined";
    case ErrorKind::HypothesisViolated:
      return "HypothesisViolated";
    case ErrorKind::InvalidInputCertificate:
      return "InvalidInputCertificate";
    case ErrorKind::VerificationFailed:
      return "VerificationFailed";
    case ErrorKind::WrongDimension:
      return "WrongDimension";
    case ErrorKind::CharacteristicTwo:
      return "CharacteristicTwo";
    case ErrorKind::OddCharacteristic:
      return "OddCharacteristic";
    case ErrorKind::SingularLinearPart:
      return "SingularLinearPart";
    case ErrorKind::NotFourGenerated:
      return "NotFourGenerated";
    case ErrorKind::NotClassTwo:
      return "NotClassTwo";
    case ErrorKind::EvenPrime:
      return "EvenPrime";
    case ErrorKind::UnknownTheorem:
      return "UnknownTheorem";
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
    case ErrorKind::Parse:
      return "Parse";
  }
  return "Unknown";
}

}  // namespace breadthlab
