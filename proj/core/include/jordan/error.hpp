#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

enum class Errc {
  AlgebraMismatch,
  NonFinite,
  NotInvertible,
  DomainViolation,
  NotInCone,
  NotConePreserving,
  SingularOperator,
  SingularMatrix,
  NotInStr,
  NotIdempotent,
  UxNotPositive,
  CentralityViolation,
  NotInLieAlgebra,
  NotAutomorphism,
  NotDerivation,
  UndecidableWitness,
  OutOfNeighborhood,
  InconsistentSolve,
  LiftFailure,
  Inconsistent,
  ParseError,
};

std::string_view to_string(Errc code);

// All library failures surface as JordanError. `value()` carries the numeric
// witness when one exists (offending eigenvalue, residual, norm distance).
class JordanError : public std::runtime_error {
 public:
  JordanError(Errc code, const std::string& what,
              std::optional<double> value = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        value_(value) {}

  Errc code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  Errc code_;
  std::optional<double> value_;
};

}  // namespace jordan
