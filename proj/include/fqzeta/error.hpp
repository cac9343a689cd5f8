#ifndef FQZETA_ERROR_HPP
#define FQZETA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqzeta {

/// Error categories raised by the library. Each one maps to a distinct
/// precondition or consistency failure; callers can switch on `code()`.
enum class Errc {
  NonPrimeP,
  UnsupportedSize,
  DivisionByZero,
  PartsSumMismatch,
  JOutOfRange,
  NonPrimeQ,
  PoleAtZero,
  BudgetExceeded,
  CoefficientNotInPrimeField,
  IndexCollision,
  QNotTwo,
  InvalidArgument,
  FieldMismatch,
};

constexpr std::string_view to_string(Errc c) noexcept {
  switch (c) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PartsSumMismatch: return "PartsSumMismatch";
    case Errc::JOutOfRange: return "JOutOfRange";
    case Errc::NonPrimeQ: return "NonPrimeQ";
    case Errc::PoleAtZero: return "PoleAtZero";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CoefficientNotInPrimeField: return "CoefficientNotInPrimeField";
    case Errc::IndexCollision: return "IndexCollision";
    case Errc::QNotTwo: return "QNotTwo";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fqzeta

#endif  // FQZETA_ERROR_HPP
