#include "promo/matrix.hpp"

#include <sstream>

#include "promo/error.hpp"

namespace promo {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::column_sums() const {
  std::vector<Rational> out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) out[c] += (*this)(r, c);
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::row_sums() const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c);
    }
  }
  return out;
}

Integer RationalMatrix::common_denominator() const {
  Integer d = 1;
  for (const auto& x : data_) {
    if (x.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  }
  return d;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out << ' ';
      out << promo::to_string((*this)(r, c));
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Rational> operator*(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix has " + std::to_string(m.cols()) +
                                                  " columns, vector has " +
                                                  std::to_string(v.size()) + " entries");
  }
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0 && sgn(v[c]) != 0) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (sgn(b(k, c)) != 0) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

}  // namespace promo
