#pragma once

#include <stdexcept>
#include <string>

namespace pslice {

enum class ErrorKind {
  NotPrime,
  DegreeZero,
  FieldMismatch,
  IncompatibleTower,
  ArityMismatch,
  ZeroPolynomial,
  NotHomogeneous,
  ParseError,
  DivisionByZero,
  NotARoot,
  NotSimple,
  OrderTooSmall,
  TableTooSmall,
  DegreeDrop,
  Squarefull,
  BudgetExceeded,
  DimensionMismatch,
  DomainError,
  NotAbsolutelyIrreducible,
  HasLinearFactor,
  ParityError,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pslice
