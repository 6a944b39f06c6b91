#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netsirs {

enum class ErrorKind {
  DimensionMismatch,
  NegativeEntry,
  NonPositiveRate,
  Reducible,
  OutOfSimplex,
  NoConvergence,
  NotIrreducible,
  NonPositiveVector,
  EpsilonStarNotFound,
  OutOfCap,
  InvalidInitial,
  SimplexViolation,
  NotEquilibrium,
  NonPositiveEquilibrium,
  SingularShift,
  EigenFailure,
  InvalidAtBoundary,
  InvalidConfig,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// True for failures caused by input data rather than by a numerical routine.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace netsirs
