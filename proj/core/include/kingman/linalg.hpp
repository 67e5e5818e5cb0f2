#pragma once

#include "kingman/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kingman {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// this - c * I.
  RationalMatrix shifted(const Rational& c) const;
  /// Row-vector product x^T A.
  std::vector<Rational> left_multiply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in order.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

/// Solves A X = B for square nonsingular A; std::nullopt when A is singular.
std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b);

std::vector<double> to_double(const std::vector<Rational>& v);

}  // namespace kingman
