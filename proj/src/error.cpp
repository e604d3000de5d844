#include "promo/error.hpp"

namespace promo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotNaturallyLabeled: return "NotNaturallyLabeled";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotALinearExtension: return "NotALinearExtension";
    case ErrorKind::NotRootedForest: return "NotRootedForest";
    case ErrorKind::NotUnionOfChains: return "NotUnionOfChains";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::SolverSingular: return "SolverSingular";
    case ErrorKind::CandidateSetExhausted: return "CandidateSetExhausted";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NonPositiveRate: return "NonPositiveRate";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::NotInSubset: return "NotInSubset";
    case ErrorKind::NotAGeodesic: return "NotAGeodesic";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace promo
