#include "kingman/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace kingman {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  Rational tmp;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& ark = a(r, k);
      if (ark == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Rational& bkc = b(k, c);
        if (bkc == 0) continue;
        mpq_mul(tmp.get_mpq_t(), ark.get_mpq_t(), bkc.get_mpq_t());
        out(r, c) += tmp;
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<Rational> out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (a(r, c) != 0 && x[c] != 0) out[r] += a(r, c) * x[c];
  return out;
}

RationalMatrix RationalMatrix::shifted(const Rational& c) const {
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out(i, i) -= c;
  return out;
}

std::vector<Rational> RationalMatrix::left_multiply(const std::vector<Rational>& x) const {
  if (rows_ != x.size()) throw std::invalid_argument("vector-matrix product: dimension mismatch");
  std::vector<Rational> out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[c] += x[r] * (*this)(r, c);
  }
  return out;
}

namespace {

// Row-echelon reduction in place; returns pivot column per pivot row.
std::vector<std::size_t> eliminate(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational factor = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return eliminate(m).size(); }

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
  // Incremental: keep a reduced basis of accepted rows.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rational> v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m(r, c);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t pc = pivot_cols[b];
      if (v[pc] == 0) continue;
      Rational factor = v[pc] / basis[b][pc];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * basis[b][c];
    }
    std::size_t pc = 0;
    while (pc < v.size() && v[pc] == 0) ++pc;
    if (pc == v.size()) continue;
    basis.push_back(std::move(v));
    pivot_cols.push_back(pc);
    chosen.push_back(r);
    if (chosen.size() == m.cols()) break;
  }
  return chosen;
}

std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      for (std::size_t c = 0; c < b.cols(); ++c) std::swap(b(pivot, c), b(col, c));
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
    for (std::size_t c = 0; c < b.cols(); ++c) b(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= factor * a(col, c);
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) -= factor * b(col, c);
    }
  }
  return b;
}

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

}  // namespace kingman
