#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace promo {

enum class ErrorKind {
  MalformedInput,
  CycleDetected,
  NotNaturallyLabeled,
  SizeLimitExceeded,
  NotInLattice,
  IndexOutOfRange,
  NotALinearExtension,
  NotRootedForest,
  NotUnionOfChains,
  DimensionMismatch,
  ZeroDenominator,
  NotStochastic,
  SolverSingular,
  CandidateSetExhausted,
  CapExceeded,
  NotClosed,
  NonPositiveRate,
  InvalidWeights,
  NotInSubset,
  NotAGeodesic,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` identifies the
/// failure; `what()` carries a human readable message with context.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace promo
