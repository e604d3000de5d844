#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "promo/chain.hpp"
#include "promo/linear_form.hpp"
#include "promo/matrix.hpp"
#include "promo/polynomial.hpp"
#include "promo/poset.hpp"

namespace promo {

/// d_S = sum over T >= S of mu(S, T) times the number of maximal chains of
/// [T, top] in the upper-set lattice. Throws NotInLattice.
Integer derangement_number(const UpperSetLattice& lattice, ElementSet s);

struct SpectrumItem {
  ElementSet upper_set = 0;
  /// x_S = sum of x_i over i in S.
  LinearForm eigenvalue;
  Integer multiplicity;
};

struct SpectrumPrediction {
  int n = 0;
  /// One item per upper set in lattice order, zero multiplicities included.
  std::vector<SpectrumItem> items;

  Integer total_multiplicity() const;
  /// prod (lambda - x_S(w))^{d_S}.
  Polynomial polynomial(const WeightVector& w) const;
};

/// Multiplicities d_S for a rooted forest; throws NotRootedForest.
SpectrumPrediction predicted_spectrum(const Poset& p, const Limits& limits = {});

/// Multiplicities from poset derangements of P minus S, for consecutively
/// labeled unions of chains; throws NotUnionOfChains.
SpectrumPrediction predicted_spectrum_chains(const Poset& p, const Limits& limits = {});

/// det(lambda I - M), exact.
Polynomial char_poly(const RationalMatrix& m);

/// Compares the characteristic polynomial of the promotion matrix at w with
/// the prediction. Throws DimensionMismatch.
bool verify_spectrum(const Poset& p, const SpectrumPrediction& prediction,
                     const WeightVector& w, const Limits& limits = {});

struct ProbeOptions {
  int samples = 4;
  std::uint64_t seed = 20120410;
  /// Probing is limited to n <= max_n because the candidate set has 3^n forms.
  int max_n = 12;
};

struct LinearEigenvalue {
  LinearForm form;
  int multiplicity = 0;
};

struct ProbeResult {
  bool linear = false;
  /// Factors accepted so far; the complete spectrum when `linear`.
  std::vector<LinearEigenvalue> eigenvalues;
  std::vector<WeightVector> samples;
  /// Degree of the unexplained factor at the first sample.
  int residual_degree = 0;
};

/// Searches linear forms with coefficients in {-1, 0, 1} that are roots of the
/// characteristic polynomial at every sample point. Throws SizeLimitExceeded
/// when n > max_n.
ProbeResult probe_linear_spectrum(const TransitionMatrix& m, const ProbeOptions& options = {});
ProbeResult probe_linear_spectrum(const Poset& p, const ProbeOptions& options = {},
                                  const Limits& limits = {});

/// Conditions on linear spectra of posets that are not rooted forests.
struct ConjectureReport {
  /// True when P is not a rooted forest, i.e. the statement applies.
  bool hypothesis = false;
  bool linear = false;
  bool coeffs_pm1 = false;
  bool max_two_successors = false;
  bool neg_coeff_condition = false;
  bool consistent = false;
};

ConjectureReport check_conjecture(const Poset& p, const ProbeResult& probe);
ConjectureReport check_conjecture(const Poset& p, const ProbeOptions& options = {});

}  // namespace promo
