#pragma once

#include <random>
#include <string>
#include <vector>

#include "promo/rational.hpp"

namespace promo {

/// Exact positive-ish weights x_1..x_n substituted for the formal variables.
/// Chain-theoretic operations require every entry to be strictly positive.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> values);

  static WeightVector uniform(int n);
  /// n distinct random integers in [1, 97], scaled to sum to one.
  static WeightVector random(int n, std::mt19937_64& rng);
  /// Parses "uniform" or "p/q,p/q,...".
  static WeightVector parse(std::string_view text, int n);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  bool is_normalized() const { return normalized_; }
  bool is_positive() const;
  Rational total() const;
  Rational min() const;
  WeightVector normalized() const;
  /// Throws InvalidWeights unless all entries are positive; with
  /// `need_normalized` the entries must also sum to one.
  void require_positive(bool need_normalized) const;

  std::string to_string() const;

 private:
  std::vector<Rational> values_;
  bool normalized_ = false;
};

/// Sum_i coeffs[i] * x_{i+1} with exact rational coefficients.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(int n) : coeffs_(static_cast<std::size_t>(n)) {}
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static LinearForm variable(int n, int i);  // x_i, 1-based
  static LinearForm all_ones(int n);

  int size() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int i) const { return coeffs_[i]; }
  Rational& operator[](int i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  Rational evaluate(const WeightVector& w) const;

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& scalar);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ < b.coeffs_;
  }

  /// "x1+x2", "x4-x1", "-x1-x2", "2x3", "1/2x1" or "0".
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace promo
