#include "promo/linear_form.hpp"

#include <algorithm>

#include "promo/catalog.hpp"
#include "promo/error.hpp"

namespace promo {

WeightVector::WeightVector(std::vector<Rational> values) : values_(std::move(values)) {
  normalized_ = total() == 1;
}

WeightVector WeightVector::uniform(int n) {
  return WeightVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
}

WeightVector WeightVector::random(int n, std::mt19937_64& rng) {
  auto ints = sample_integer_weights(n, rng);
  Integer total = 0;
  for (const auto& v : ints) total += v;
  std::vector<Rational> values;
  for (const auto& v : ints) {
    Rational r(v, total);
    r.canonicalize();
    values.push_back(r);
  }
  return WeightVector(std::move(values));
}

WeightVector WeightVector::parse(std::string_view text, int n) {
  if (text == "uniform") return uniform(n);
  if (text.find_first_of(".eE") != std::string_view::npos) {
    throw Error(ErrorKind::InvalidWeights,
                "floating point weights are not accepted; use exact p/q values");
  }
  WeightVector w(parse_rational_list(text));
  if (w.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n) +
                                                  " weights, got " + std::to_string(w.size()));
  }
  return w;
}

bool WeightVector::is_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v > 0; });
}

Rational WeightVector::total() const { return sum(values_); }

Rational WeightVector::min() const {
  if (values_.empty()) return 0;
  return *std::min_element(values_.begin(), values_.end());
}

WeightVector WeightVector::normalized() const {
  Rational t = total();
  if (t == 0) throw Error(ErrorKind::InvalidWeights, "weights sum to zero");
  std::vector<Rational> out;
  for (const auto& v : values_) out.push_back(v / t);
  return WeightVector(std::move(out));
}

void WeightVector::require_positive(bool need_normalized) const {
  if (!is_positive()) {
    throw Error(ErrorKind::InvalidWeights, "weights must be strictly positive: " + to_string());
  }
  if (need_normalized && !normalized_) {
    throw Error(ErrorKind::InvalidWeights, "weights must sum to 1: " + to_string());
  }
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ',';
    out += promo::to_string(values_[i]);
  }
  return out;
}

LinearForm LinearForm::variable(int n, int i) {
  LinearForm f(n);
  f.coeffs_[i - 1] = 1;
  return f;
}

LinearForm LinearForm::all_ones(int n) {
  return LinearForm(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational LinearForm::evaluate(const WeightVector& w) const {
  if (w.size() != size()) {
    throw Error(ErrorKind::DimensionMismatch, "linear form has " + std::to_string(size()) +
                                                  " variables, weights have " +
                                                  std::to_string(w.size()));
  }
  Rational total = 0;
  for (int i = 0; i < size(); ++i) {
    if (coeffs_[i] != 0) total += coeffs_[i] * w[i];
  }
  return total;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "linear form sizes");
  for (int i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "linear form sizes");
  for (int i = 0; i < size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string LinearForm::to_string() const {
  // Positive terms first so that "x4-x1" reads naturally.
  std::string out;
  auto emit = [&](int i) {
    const Rational& c = coeffs_[i];
    bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (magnitude != 1) out += promo::to_string(magnitude);
    out += "x" + std::to_string(i + 1);
  };
  for (int i = 0; i < size(); ++i) {
    if (coeffs_[i] > 0) emit(i);
  }
  for (int i = 0; i < size(); ++i) {
    if (coeffs_[i] < 0) emit(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace promo
