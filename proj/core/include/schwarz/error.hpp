#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schwarz {

enum class ErrorKind {
  SingularGradient,
  NotOnBoundary,
  HypothesisFailed,
  ZeroVector,
  OutsideDisk,
  OutsideBall,
  DimensionMismatch,
  PoleHit,
  NotHolomorphic,
  InsufficientClearance,
  QuadratureDivergence,
  StepTooLarge,
  NoConvergence,
  BadParams,
  BudgetExhausted,
  SchemaError,
  NonFinite,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the suite
// runner in particular) can record it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schwarz
