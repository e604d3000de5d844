#include "promo/polynomial.hpp"

#include <algorithm>
#include <map>

#include "promo/error.hpp"

namespace promo {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, 1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// Synthetic division by (lambda - root); returns the remainder.
Rational divide_once(std::vector<Rational>& c, const Rational& root) {
  if (c.empty()) return 0;
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    Rational value = c[k] + carry * root;
    if (k == 0) {
      c = std::move(q);
      return value;
    }
    q[k - 1] = value;
    carry = value;
  }
  return 0;
}

}  // namespace

int Polynomial::root_multiplicity(const Rational& root) const {
  if (is_zero()) return 0;
  int m = 0;
  std::vector<Rational> c = coeffs_;
  // Dividing out a zero root is a shift.
  if (sgn(root) == 0) {
    while (m < static_cast<int>(c.size()) && sgn(c[m]) == 0) ++m;
    return m;
  }
  while (c.size() > 1) {
    std::vector<Rational> trial = c;
    if (sgn(divide_once(trial, root)) != 0) break;
    c = std::move(trial);
    ++m;
  }
  return m;
}

Polynomial Polynomial::divide_root(const Rational& root, int m) const {
  std::vector<Rational> c = coeffs_;
  for (int i = 0; i < m; ++i) {
    if (sgn(divide_once(c, root)) != 0) {
      throw Error(ErrorKind::DimensionMismatch,
                  "(l - " + promo::to_string(root) + ") does not divide the polynomial");
    }
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (sgn(other.coeffs_[j]) != 0) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational magnitude = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    bool show = magnitude != 1 || k == 0;
    if (show) out += promo::to_string(magnitude);
    if (k > 0) {
      out += "l";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial from_roots(const std::vector<std::pair<Rational, int>>& roots) {
  // Group equal roots so that repeated factors are raised once.
  std::map<Rational, int> grouped;
  for (const auto& [root, m] : roots) {
    if (m > 0) grouped[root] += m;
  }
  Polynomial out = Polynomial::constant(1);
  for (const auto& [root, m] : grouped) {
    Polynomial factor = Polynomial::constant(1);
    Polynomial base = Polynomial::linear(root);
    for (int e = m; e > 0; e >>= 1) {
      if (e & 1) factor *= base;
      if (e > 1) base *= base;
    }
    out *= factor;
  }
  return out;
}

}  // namespace promo
