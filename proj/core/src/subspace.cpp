#include "artinder/subspace.hpp"

#include <cassert>

namespace artinder {

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<Rational>>& rows) {
  Subspace s(ambient_dim);
  if (rows.empty()) return s;
  QMatrix m(rows.size(), ambient_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = rows[i][j];
  }
  std::size_t rank = m.rref_in_place();
  s.basis_.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Rational> row(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) row[j] = m.at(i, j);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  assert(v.size() == ambient_);
  std::vector<Rational> w = v;
  for (const auto& row : basis_) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && row[pivot] == 0) ++pivot;
    if (pivot == ambient_) continue;
    if (w[pivot] != 0) {
      Rational f = w[pivot];  // pivot entry of an RREF row is 1
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * row[j];
    }
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

Subspace kernel(const QMatrix& m) {
  auto [r, rank] = rref(m);
  std::size_t n = m.cols();
  // Pivot columns of the RREF; the rest are free.
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_col_of_row(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (j < n && r.at(i, j) == 0) ++j;
    is_pivot[j] = true;
    pivot_col_of_row[i] = j;
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < rank; ++i)
      v[pivot_col_of_row[i]] = -r.at(i, free);
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

}  // namespace artinder
