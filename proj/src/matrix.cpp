#include "ncs/matrix.hpp"

#include <sstream>
#include <utility>

#include "ncs/error.hpp"

namespace ncs {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw ValidationError("matrix data size does not match dimensions");
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::unit_row(std::size_t n, std::size_t i) {
  QMatrix m(1, n);
  m(0, i) = 1;
  return m;
}

QMatrix QMatrix::unit_column(std::size_t n, std::size_t i) {
  QMatrix m(n, 1);
  m(i, 0) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::row(std::size_t r) const {
  QMatrix m(1, cols_);
  for (std::size_t c = 0; c < cols_; ++c) m(0, c) = (*this)(r, c);
  return m;
}

QMatrix QMatrix::col(std::size_t c) const {
  QMatrix m(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) m(r, 0) = (*this)(r, c);
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix dimension mismatch in *");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
  }
  os << ']';
  return os.str();
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  set_block(m, 0, 0, a);
  set_block(m, a.rows(), a.cols(), b);
  return m;
}

void set_block(QMatrix& m, std::size_t r, std::size_t c, const QMatrix& block) {
  if (r + block.rows() > m.rows() || c + block.cols() > m.cols()) throw ValidationError("block out of range");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) m(r + i, c + j) = block(i, j);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) { return rref(m, m.cols()).size(); }

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("solve: dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + b.cols());
  set_block(aug, 0, 0, a);
  set_block(aug, 0, a.cols(), b);
  auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = a.cols(); j < aug.cols(); ++j)
      if (sgn(aug(i, j)) != 0) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  return x;
}

QMatrix inverse(const QMatrix& a) {
  if (!a.square()) throw ValidationError("inverse of non-square matrix");
  QMatrix aug(a.rows(), 2 * a.cols());
  set_block(aug, 0, 0, a);
  set_block(aug, 0, a.cols(), QMatrix::identity(a.rows()));
  auto pivots = rref(aug, a.cols());
  if (pivots.size() != a.rows()) throw ComputationError("singular matrix");
  QMatrix inv(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) inv(i, j) = aug(i, a.cols() + j);
  return inv;
}

// ---------------------------------------------------------------------------
// RowSpan

std::vector<Rational> RowSpan::reduce(std::vector<Rational> v, std::vector<Rational>* combo) const {
  if (v.size() != dim_) throw ValidationError("RowSpan: vector dimension mismatch");
  if (combo) combo->assign(basis_.size(), Rational(0));
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    Rational f = v[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(echelon_[i][j]) != 0) v[j] -= f * echelon_[i][j];
    if (combo)
      for (std::size_t j = 0; j < transform_[i].size(); ++j) (*combo)[j] += f * transform_[i][j];
  }
  return v;
}

bool RowSpan::contains(const std::vector<Rational>& v) const {
  auto r = reduce(v, nullptr);
  for (const auto& x : r)
    if (sgn(x) != 0) return false;
  return true;
}

bool RowSpan::add(const std::vector<Rational>& v) {
  std::vector<Rational> combo;
  auto r = reduce(v, &combo);
  std::size_t p = 0;
  while (p < dim_ && sgn(r[p]) == 0) ++p;
  if (p == dim_) return false;
  Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  // r = (v - sum combo_j b_j) / pivot; v becomes basis vector number k.
  std::vector<Rational> t(basis_.size() + 1);
  for (std::size_t j = 0; j < combo.size(); ++j) t[j] = -combo[j] * inv;
  t.back() = inv;
  for (auto& row : transform_) row.push_back(Rational(0));
  basis_.push_back(v);
  echelon_.push_back(std::move(r));
  pivots_.push_back(p);
  transform_.push_back(std::move(t));
  return true;
}

std::optional<std::vector<Rational>> RowSpan::coordinates(const std::vector<Rational>& v) const {
  std::vector<Rational> combo;
  auto r = reduce(v, &combo);
  for (const auto& x : r)
    if (sgn(x) != 0) return std::nullopt;
  return combo;
}

}  // namespace ncs
