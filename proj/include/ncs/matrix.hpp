#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncs/rational.hpp"

namespace ncs {

// Dense row-major matrix over Q. Row and column vectors are 1xn / nx1 matrices.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  // Convenience for hand-written literals: QMatrix::from_rows({{1, 0}, {0, "1/2"}}).
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix unit_row(std::size_t n, std::size_t i);
  static QMatrix unit_column(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& data() const { return data_; }

  QMatrix transpose() const;
  QMatrix row(std::size_t r) const;
  QMatrix col(std::size_t c) const;
  bool is_zero() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& s);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix kron(const QMatrix& a, const QMatrix& b);
QMatrix commutator(const QMatrix& a, const QMatrix& b);
// [a 0; 0 b]
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);
// Places `block` into `m` with its upper-left corner at (r, c).
void set_block(QMatrix& m, std::size_t r, std::size_t c, const QMatrix& block);

std::size_t rank(QMatrix m);
// Solution x of a x = b, or nullopt if inconsistent. Free variables are set to zero.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);
// Throws ComputationError for singular input.
QMatrix inverse(const QMatrix& a);

// Incrementally maintained basis of a subspace of Q^n spanned by row vectors.
// Reduced rows are kept in echelon form so membership and coordinates are exact.
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  // Original (unreduced) vectors accepted so far, in insertion order.
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  // Adds v when independent of the current span; returns whether it was added.
  bool add(const std::vector<Rational>& v);
  // Coefficients c with v = sum_i c_i basis()[i]; nullopt when v is outside the span.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

 private:
  // Reduces v against the echelon rows; `combo` tracks v - reduced in terms of basis().
  std::vector<Rational> reduce(std::vector<Rational> v, std::vector<Rational>* combo) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> basis_;
  std::vector<std::vector<Rational>> echelon_;
  std::vector<std::size_t> pivots_;
  // echelon_[i] = sum_j transform_[i][j] * basis_[j]
  std::vector<std::vector<Rational>> transform_;
};

}  // namespace ncs
