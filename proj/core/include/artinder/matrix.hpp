#pragma once

#include <cstddef>
#include <vector>

#include "artinder/rational.hpp"

namespace artinder {

class UniPoly;

// Dense matrix over the rationals. Sizes are desk-scale, so there is no
// attempt at sparsity; every operation is exact.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& s) const;
  bool operator==(const QMatrix& o) const = default;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  QMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  // True iff the matrix is s*I for some rational s (reported through *scalar).
  bool is_scalar(Rational* scalar = nullptr) const;
  bool is_nilpotent() const;

  // Row-reduce in place to reduced row echelon form; returns the rank.
  std::size_t rref_in_place();
  std::size_t rank() const;

  // Flatten row-major into a single vector (used to put matrices into the
  // linear-algebra kernels themselves).
  std::vector<Rational> vectorized() const { return data_; }
  static QMatrix from_vector(std::size_t rows, std::size_t cols,
                             const std::vector<Rational>& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// The unique RREF of M together with its rank.
std::pair<QMatrix, std::size_t> rref(const QMatrix& m);

// Exact characteristic polynomial, monic of degree n (Faddeev-LeVerrier).
UniPoly char_poly(const QMatrix& m);

}  // namespace artinder
