#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "promo/monoid.hpp"
#include "promo/poset.hpp"
#include "promo/report.hpp"
#include "promo/spectral.hpp"

namespace promo {

enum class Family { All, RootedForests, NonForests };

Family parse_family(std::string_view text);
std::string_view to_string(Family family);

struct SweepOptions {
  int nmin = 1;
  int nmax = 4;
  Family family = Family::All;
  std::uint64_t seed = 1;
  /// Random weight vectors per poset.
  int samples = 3;
  /// Monoid and u-statistic checks run for n <= monoid_nmax.
  int monoid_nmax = 5;
  /// Linear spectrum probes of non-forests run for n <= probe_nmax.
  int probe_nmax = 5;
  ProbeOptions probe;
  Limits limits;
};

struct SweepReport {
  Json json;
  std::size_t posets = 0;
  std::size_t failures = 0;
};

/// Runs every applicable verification on every poset of the chosen family,
/// in catalog order. The report depends only on the options.
SweepReport run_sweep(const SweepOptions& options);

/// Both statistic properties over a monoid built in matrix order:
/// u(x x') <= u(x) for all pairs, and every non-constant x has a generator
/// G_i with u(x G_i) < u(x).
struct UStatisticCheck {
  bool monotone = true;
  bool strict_descent = true;
};

UStatisticCheck check_u_statistic(const Monoid& m, const Basis& basis, int n);

/// Per-sample seed derived from a base seed and an index (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace promo
