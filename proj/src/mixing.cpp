#include "promo/mixing.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "promo/catalog.hpp"
#include "promo/chain.hpp"
#include "promo/error.hpp"
#include "promo/promotion.hpp"

namespace promo {

Distribution point_mass(std::size_t size, std::size_t index) {
  if (index >= size) throw Error(ErrorKind::IndexOutOfRange, "point mass outside the basis");
  Distribution d(size);
  d[index] = 1;
  return d;
}

Distribution power_distribution(const RationalMatrix& m, Distribution init, std::size_t k) {
  if (!m.is_square() || m.cols() != init.size()) {
    throw Error(ErrorKind::DimensionMismatch, "distribution does not match the matrix");
  }
  for (std::size_t step = 0; step < k; ++step) init = m * init;
  return init;
}

Rational total_variation(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::DimensionMismatch, "distributions over different bases");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) total += abs(p[i] - q[i]);
  return total / 2;
}

namespace {

void require_rate(const Rational& p) {
  if (sgn(p) <= 0) {
    throw Error(ErrorKind::NonPositiveRate, "minimum weight must be positive, got " +
                                                to_string(p));
  }
}

}  // namespace

std::optional<double> convergence_bound(int n, const Rational& p_min, std::uint64_t k) {
  require_rate(p_min);
  const Rational kp = p_min * Rational(Integer(std::to_string(k)));
  const long n2 = static_cast<long>(n) * n - 1;
  // At k = 0 (only reachable for n = 1) the exponent is 0/0.
  if (k == 0 || kp < n2) return std::nullopt;
  const long double a = kp.get_d();
  const long double gap = a - n2;
  return static_cast<double>(std::exp(-(gap * gap) / (2 * a)));
}

Rational mixing_time_upper(int n, const Rational& p_min, const Rational& c) {
  require_rate(p_min);
  if (sgn(c) < 0) throw Error(ErrorKind::MalformedInput, "target exponent must be >= 0");
  return 2 * (Rational(n * n - 1) + c) / p_min;
}

bool bound_holds(const Rational& tv, double bound) {
  if (!std::isfinite(bound)) return false;
  Rational safe(bound);
  safe *= Rational(999999999999, 1000000000000);
  return tv <= safe;
}

std::vector<MixingRow> mixing_table(const Poset& p, const WeightVector& w, std::size_t kmax,
                                    std::optional<std::size_t> start, const Limits& limits) {
  w.require_positive(true);
  auto tm = transition_matrix(p, WeightMode::Promotion, limits);
  auto m = evaluate(tm, w);
  const std::size_t n = m.rows();
  if (start && *start >= n) throw Error(ErrorKind::IndexOutOfRange, "start outside the basis");
  auto stationary = stationary_solve(m);

  // Work with integers: M = A / D and stationary = u / E, so the distance at
  // step k from a point mass is sum |A^k e_s E - D^k u| / (2 D^k E).
  const Integer d = m.common_denominator();
  std::vector<std::vector<std::pair<std::size_t, Integer>>> columns(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      const Rational& x = m(r, c);
      if (sgn(x) != 0) columns[c].emplace_back(r, d / x.get_den() * x.get_num());
    }
  }
  Integer e = 1;
  for (const auto& x : stationary) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = e / stationary[i].get_den() * stationary[i].get_num();

  std::vector<Integer> worst(kmax + 1, Integer(-1));
  for (std::size_t s = 0; s < n; ++s) {
    if (start && s != *start) continue;
    std::vector<Integer> v(n, 0);
    v[s] = 1;
    Integer scale = 1;
    for (std::size_t k = 0; k <= kmax; ++k) {
      Integer distance = 0;
      for (std::size_t i = 0; i < n; ++i) distance += abs(v[i] * e - scale * u[i]);
      if (distance > worst[k]) worst[k] = distance;
      if (k == kmax) break;
      std::vector<Integer> next(n, 0);
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(v[c]) == 0) continue;
        for (const auto& [r, a] : columns[c]) next[r] += a * v[c];
      }
      v = std::move(next);
      scale *= d;
    }
  }

  const Rational p_min = w.min();
  std::vector<MixingRow> rows;
  Integer scale = 1;
  for (std::size_t k = 0; k <= kmax; ++k) {
    Rational tv(worst[k], 2 * scale * e);
    tv.canonicalize();
    rows.push_back({k, tv, convergence_bound(p.size(), p_min, k)});
    scale *= d;
  }
  return rows;
}

std::string to_csv(const std::vector<MixingRow>& rows) {
  std::ostringstream out;
  out << "k,tv_exact,bound,tv_approx\n";
  out << std::setprecision(17);
  for (const auto& row : rows) {
    out << row.k << ',' << to_string(row.tv) << ',';
    if (row.bound) out << *row.bound;
    out << ',' << row.tv.get_d() << '\n';
  }
  return out.str();
}

WalkResult simulate_walk(const Poset& p, const WeightVector& w, std::size_t steps,
                         std::uint64_t seed, const Limits& limits) {
  if (w.size() != p.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weight count differs from poset size");
  }
  w.require_positive(true);
  // Exact sampling: scale the weights to integers over a common denominator.
  Integer denom = 1;
  for (const auto& x : w.values()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  if (denom > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    throw Error(ErrorKind::InvalidWeights, "weight denominators are too large to sample");
  }
  std::vector<std::uint64_t> cumulative;
  std::uint64_t running = 0;
  for (const auto& x : w.values()) {
    Integer scaled = denom / x.get_den() * x.get_num();
    running += scaled.get_ui();
    cumulative.push_back(running);
  }
  const std::uint64_t total = running;

  Basis basis(linear_extensions(p, limits));
  std::mt19937_64 rng(seed);
  WalkResult result;
  result.trajectory.reserve(steps + 1);
  std::vector<std::size_t> counts(basis.size(), 0);
  std::size_t state = 0;
  result.trajectory.push_back(state);
  for (std::size_t step = 0; step < steps; ++step) {
    std::uint64_t draw = uniform_below(rng, total);
    int label = 1;
    while (cumulative[label - 1] <= draw) ++label;
    const Word& pi = basis[state];
    state = *basis.find(detail::promote(p, pi, positions(pi)[label]));
    result.trajectory.push_back(state);
    ++counts[state];
  }
  result.empirical.resize(basis.size(), 0.0);
  if (steps > 0) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      result.empirical[i] = static_cast<double>(counts[i]) / static_cast<double>(steps);
    }
  }
  return result;
}

}  // namespace promo
