#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "promo/linear_form.hpp"
#include "promo/matrix.hpp"
#include "promo/poset.hpp"

namespace promo {

/// Probabilities over the lexicographic basis of L(P).
using Distribution = std::vector<Rational>;

Distribution point_mass(std::size_t size, std::size_t index);

/// M^k init, exact.
Distribution power_distribution(const RationalMatrix& m, Distribution init, std::size_t k);

/// Half the l1 distance. Throws DimensionMismatch.
Rational total_variation(const Distribution& p, const Distribution& q);

/// exp(-(k p - (n^2 - 1))^2 / (2 k p)) for k >= 1 and k p >= n^2 - 1, otherwise nullopt
/// (the bound does not apply). Throws NonPositiveRate unless p > 0.
std::optional<double> convergence_bound(int n, const Rational& p_min, std::uint64_t k);

/// 2 (n^2 + c - 1) / p. Throws NonPositiveRate unless p > 0.
Rational mixing_time_upper(int n, const Rational& p_min, const Rational& c);

/// tv <= bound with the bound lowered by a relative 1e-12 first, so that
/// rounding in the floating point bound can only make the check stricter.
bool bound_holds(const Rational& tv, double bound);

struct MixingRow {
  std::size_t k = 0;
  /// Largest distance to stationarity over the chosen starting states.
  Rational tv;
  std::optional<double> bound;
};

/// Exact distances for k = 0..kmax of the promotion chain. With no start
/// given, every point mass is used and the worst case is reported.
std::vector<MixingRow> mixing_table(const Poset& p, const WeightVector& w, std::size_t kmax,
                                    std::optional<std::size_t> start = std::nullopt,
                                    const Limits& limits = {});

/// Columns k, tv_exact, bound, tv_approx; the bound is empty where it does
/// not apply.
std::string to_csv(const std::vector<MixingRow>& rows);

struct WalkResult {
  /// Basis indices, starting at the identity extension.
  std::vector<std::size_t> trajectory;
  /// Visit frequencies over steps 1..steps.
  std::vector<double> empirical;
};

/// Samples label i with probability w_i and applies d^_i. Weights must be
/// positive and sum to one (InvalidWeights).
WalkResult simulate_walk(const Poset& p, const WeightVector& w, std::size_t steps,
                         std::uint64_t seed, const Limits& limits = {});

}  // namespace promo
