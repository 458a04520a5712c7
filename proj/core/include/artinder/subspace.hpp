#pragma once

#include <vector>

#include "artinder/matrix.hpp"

namespace artinder {

// A linear subspace of Q^n, stored canonically: the basis rows form the RREF
// of any spanning set, so equal subspaces compare equal componentwise.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  // Span of the given row vectors (need not be independent).
  static Subspace span(std::size_t ambient_dim,
                       const std::vector<std::vector<Rational>>& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_;
  std::vector<std::vector<Rational>> basis_;  // RREF rows
};

// Exact nullspace {v : Mv = 0} as a canonical Subspace of Q^cols.
Subspace kernel(const QMatrix& m);

}  // namespace artinder
