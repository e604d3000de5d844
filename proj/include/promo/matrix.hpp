#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "promo/rational.hpp"

namespace promo {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rational> column_sums() const;
  std::vector<Rational> row_sums() const;

  /// Least common multiple of all entry denominators.
  Integer common_denominator() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const RationalMatrix& m, const std::vector<Rational>& v);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace promo
