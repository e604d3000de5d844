#pragma once

#include <string>
#include <vector>

#include "promo/rational.hpp"

namespace promo {

/// Univariate polynomial in lambda with exact rational coefficients, stored
/// in ascending order of degree. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  /// lambda - root
  static Polynomial linear(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& x) const;

  /// Number of times (lambda - root) divides this polynomial.
  int root_multiplicity(const Rational& root) const;
  /// Exact quotient by (lambda - root)^m; throws DimensionMismatch if the
  /// division leaves a remainder.
  Polynomial divide_root(const Rational& root, int m) const;

  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// e.g. "l^2-l" for lambda^2 - lambda.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// prod over (root, multiplicity) of (lambda - root)^multiplicity.
Polynomial from_roots(const std::vector<std::pair<Rational, int>>& roots);

}  // namespace promo
