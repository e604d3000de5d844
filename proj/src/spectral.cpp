#include "promo/spectral.hpp"

#include <algorithm>
#include <random>

#include "promo/error.hpp"
#include "promo/modular.hpp"

namespace promo {

namespace {

Integer derangement_from_counts(const UpperSetLattice& lattice, ElementSet s,
                                const std::vector<Integer>& chain_counts) {
  auto mu = mobius_row(lattice, s);
  Integer d = 0;
  for (std::size_t t = 0; t < lattice.size(); ++t) {
    if (mu[t] != 0) d += Integer(static_cast<long>(mu[t])) * chain_counts[t];
  }
  return d;
}

LinearForm indicator_form(int n, ElementSet s) {
  LinearForm f(n);
  for (int e : elements_of(s)) f[e - 1] = 1;
  return f;
}

}  // namespace

Integer derangement_number(const UpperSetLattice& lattice, ElementSet s) {
  lattice.index_of(s);
  return derangement_from_counts(lattice, s, maximal_chain_counts(lattice));
}

Integer SpectrumPrediction::total_multiplicity() const {
  Integer total = 0;
  for (const auto& item : items) total += item.multiplicity;
  return total;
}

Polynomial SpectrumPrediction::polynomial(const WeightVector& w) const {
  std::vector<std::pair<Rational, int>> roots;
  for (const auto& item : items) {
    if (sgn(item.multiplicity) == 0) continue;
    roots.emplace_back(item.eigenvalue.evaluate(w),
                       static_cast<int>(item.multiplicity.get_si()));
  }
  return from_roots(roots);
}

SpectrumPrediction predicted_spectrum(const Poset& p, const Limits& limits) {
  if (!classify(p).is_rooted_forest) {
    throw Error(ErrorKind::NotRootedForest, p.encoding() + " is not a rooted forest");
  }
  auto lattice = upper_set_lattice(p, limits);
  auto counts = maximal_chain_counts(lattice);
  SpectrumPrediction out;
  out.n = p.size();
  for (ElementSet s : lattice.sets) {
    out.items.push_back(
        {s, indicator_form(p.size(), s), derangement_from_counts(lattice, s, counts)});
  }
  return out;
}

SpectrumPrediction predicted_spectrum_chains(const Poset& p, const Limits& limits) {
  if (!classify(p).is_consecutively_labeled_chains) {
    throw Error(ErrorKind::NotUnionOfChains,
                p.encoding() + " is not a union of consecutively labeled chains");
  }
  auto lattice = upper_set_lattice(p, limits);
  SpectrumPrediction out;
  out.n = p.size();
  for (ElementSet s : lattice.sets) {
    Poset rest = induced_subposet(p, p.ground_set() & ~s);
    out.items.push_back(
        {s, indicator_form(p.size(), s), poset_derangement_count(rest, limits)});
  }
  return out;
}

Polynomial char_poly(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(1);

  // A = D M is integral and det(l I - A) = D^n det((l / D) I - M).
  const Integer d = m.common_denominator();
  std::vector<Integer> a(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = m(r, c);
      if (sgn(x) != 0) a[r * n + c] = d / x.get_den() * x.get_num();
    }
  }

  // Every coefficient is a signed sum of principal minors, so by Hadamard's
  // inequality it is bounded by prod_j (1 + |column j|_2).
  std::size_t bound_bits = 1;
  for (std::size_t c = 0; c < n; ++c) {
    Integer squares = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (sgn(a[r * n + c]) != 0) squares += a[r * n + c] * a[r * n + c];
    }
    // log2(1 + sqrt(s)) <= bits(s) / 2 + 1
    bound_bits += mpz_sizeinbase(squares.get_mpz_t(), 2) / 2 + 1;
  }

  std::vector<modular::Crt> crt(n + 1);
  std::size_t count = 0;
  while (mpz_sizeinbase(crt[0].modulus().get_mpz_t(), 2) <= bound_bits + 1) {
    auto primes = modular::large_primes(count + 1);
    modular::u64 p = primes[count++];
    auto coeffs = modular::charpoly(modular::reduce(a, n, p));
    for (std::size_t k = 0; k <= n; ++k) crt[k].add(coeffs[k], p);
  }

  std::vector<Rational> out(n + 1);
  Integer scale = 1;  // D^(n - k) for k descending
  for (std::size_t k = n + 1; k-- > 0;) {
    Rational c(crt[k].symmetric(), scale);
    c.canonicalize();
    out[k] = c;
    scale *= d;
  }
  return Polynomial(std::move(out));
}

bool verify_spectrum(const Poset& p, const SpectrumPrediction& prediction,
                     const WeightVector& w, const Limits& limits) {
  if (prediction.n != p.size() || w.size() != p.size()) {
    throw Error(ErrorKind::DimensionMismatch, "prediction, poset and weights disagree in size");
  }
  auto m = evaluate(transition_matrix(p, WeightMode::Promotion, limits), w);
  return char_poly(m) == prediction.polynomial(w);
}

ProbeResult probe_linear_spectrum(const TransitionMatrix& m, const ProbeOptions& options) {
  const int n = m.n();
  if (n > options.max_n) {
    throw Error(ErrorKind::SizeLimitExceeded, "linear spectrum probe is limited to n <= " +
                                                  std::to_string(options.max_n));
  }
  ProbeResult result;
  std::mt19937_64 rng(options.seed);
  std::vector<Polynomial> residual;
  for (int s = 0; s < options.samples; ++s) {
    result.samples.push_back(WeightVector::random(n, rng));
    residual.push_back(char_poly(evaluate(m, result.samples.back())));
  }

  // Candidates in mixed radix with digit values 0, 1, -1.
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<Rational> values(options.samples);
  for (std::size_t code = 0; code < total; ++code) {
    LinearForm form(n);
    std::size_t rest = code;
    for (int i = 0; i < n; ++i) {
      int digit = static_cast<int>(rest % 3);
      rest /= 3;
      form[i] = digit == 2 ? -1 : digit;
    }
    int multiplicity = -1;
    for (int s = 0; s < options.samples; ++s) {
      values[s] = form.evaluate(result.samples[s]);
      int ms = residual[s].root_multiplicity(values[s]);
      multiplicity = multiplicity < 0 ? ms : std::min(multiplicity, ms);
      if (multiplicity == 0) break;
    }
    if (multiplicity <= 0) continue;
    for (int s = 0; s < options.samples; ++s) {
      residual[s] = residual[s].divide_root(values[s], multiplicity);
    }
    result.eigenvalues.push_back({form, multiplicity});
  }
  result.residual_degree = residual.empty() ? 0 : residual[0].degree();
  result.linear = std::all_of(residual.begin(), residual.end(),
                              [](const Polynomial& r) { return r.degree() == 0; });
  return result;
}

ProbeResult probe_linear_spectrum(const Poset& p, const ProbeOptions& options,
                                  const Limits& limits) {
  if (p.size() > options.max_n) {
    throw Error(ErrorKind::SizeLimitExceeded, "linear spectrum probe is limited to n <= " +
                                                  std::to_string(options.max_n));
  }
  return probe_linear_spectrum(transition_matrix(p, WeightMode::Promotion, limits), options);
}

ConjectureReport check_conjecture(const Poset& p, const ProbeResult& probe) {
  ConjectureReport report;
  report.hypothesis = !classify(p).is_rooted_forest;
  report.linear = probe.linear;
  report.coeffs_pm1 = true;
  ElementSet negative = 0;
  for (const auto& ev : probe.eigenvalues) {
    for (int i = 0; i < ev.form.size(); ++i) {
      const Rational& c = ev.form[i];
      if (sgn(c) != 0 && abs(c) != 1) report.coeffs_pm1 = false;
      if (sgn(c) < 0) negative |= element_bit(i + 1);
    }
  }
  report.max_two_successors = true;
  for (int e = 1; e <= p.size(); ++e) {
    if (p.successors(e).size() > 2) report.max_two_successors = false;
  }
  report.neg_coeff_condition = true;
  for (int e : elements_of(negative)) {
    bool ok = p.successors(e).size() == 2;
    for (int s : p.successors(e)) ok = ok || p.successors(s).size() == 2;
    if (!ok) report.neg_coeff_condition = false;
  }
  report.consistent = !report.linear ||
                      (report.coeffs_pm1 && report.max_two_successors &&
                       report.neg_coeff_condition);
  return report;
}

ConjectureReport check_conjecture(const Poset& p, const ProbeOptions& options) {
  return check_conjecture(p, probe_linear_spectrum(p, options));
}

}  // namespace promo
