#include "artinder/matrix.hpp"

#include <cassert>
#include <stdexcept>

#include "artinder/unipoly.hpp"

namespace artinder {

QMatrix::QMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("QMatrix: entry count != rows*cols");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  assert(cols_ == o.rows_);
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  assert(v.size() == cols_);
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational QMatrix::trace() const {
  assert(rows_ == cols_);
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool QMatrix::is_scalar(Rational* scalar) const {
  if (rows_ != cols_) return false;
  Rational s = rows_ ? at(0, 0) : Rational(0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? s : Rational(0))) return false;
  if (scalar) *scalar = s;
  return true;
}

bool QMatrix::is_nilpotent() const {
  assert(rows_ == cols_);
  QMatrix p = *this;
  for (std::size_t k = 0; k < rows_; ++k) {
    if (p.is_zero()) return true;
    p = p * (*this);
  }
  return p.is_zero();
}

std::size_t QMatrix::rref_in_place() {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(sel, j), at(pivot_row, j));
    Rational inv = Rational(1) / at(pivot_row, col);
    for (std::size_t j = col; j < cols_; ++j) at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row || at(i, col) == 0) continue;
      Rational f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        at(i, j) -= f * at(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t QMatrix::rank() const {
  QMatrix c = *this;
  return c.rref_in_place();
}

QMatrix QMatrix::from_vector(std::size_t rows, std::size_t cols,
                             const std::vector<Rational>& v) {
  return QMatrix(rows, cols, v);
}

std::pair<QMatrix, std::size_t> rref(const QMatrix& m) {
  QMatrix c = m;
  std::size_t r = c.rref_in_place();
  return {std::move(c), r};
}

UniPoly char_poly(const QMatrix& m) {
  assert(m.rows() == m.cols());
  std::size_t n = m.rows();
  // Faddeev-LeVerrier: B_0 = I; A_k = M B_{k-1}; c_k = tr(A_k)/k;
  // B_k = A_k - c_k I.  char = x^n - c_1 x^{n-1} - ... - c_n.
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  QMatrix b = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix a = m * b;
    Rational c = a.trace() / Rational(k);
    coeffs[n - k] = -c;
    b = a;
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) -= c;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace artinder
