#pragma once

#include <vector>

#include "artinder/matrix.hpp"
#include "artinder/subspace.hpp"

namespace artinder {

QMatrix bracket(const QMatrix& x, const QMatrix& y);  // xy - yx

// A Lie algebra of k x k rational matrices, stored as a canonical basis
// (RREF of the vectorized span). Construction validates closure under the
// commutator bracket.
class MatrixLieAlgebra {
 public:
  // Span of the given matrices; throws if the span is not bracket-closed.
  static MatrixLieAlgebra from_span(std::size_t ambient,
                                    const std::vector<QMatrix>& matrices);

  // Smallest bracket-closed span containing the input.
  static MatrixLieAlgebra close_under_bracket(
      std::size_t ambient, const std::vector<QMatrix>& matrices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QMatrix>& basis() const { return basis_; }

  bool contains(const QMatrix& x) const;
  // Coordinates of x in the basis; pre: contains(x).
  std::vector<Rational> coordinates(const QMatrix& x) const;

  // The derived subalgebra [L, L].
  MatrixLieAlgebra derived() const;
  // [L, M] for a subalgebra M (bracket of the two spans).
  Subspace bracket_span(const MatrixLieAlgebra& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<QMatrix> basis_;
  Subspace span_{0};
  static MatrixLieAlgebra make(std::size_t ambient, const Subspace& sp);
};

struct SeriesResult {
  std::vector<std::size_t> dims;  // strictly decreasing, then one repeat
  bool reaches_zero;
  MatrixLieAlgebra stabilized;  // the last (repeated) term
};

// L >= [L,L] >= [[L,L],[L,L]] >= ... until stable; solvable iff zero.
SeriesResult derived_series(const MatrixLieAlgebra& l);
bool is_solvable(const MatrixLieAlgebra& l);

// L >= [L,L] >= [L,[L,L]] >= ...; nilpotent iff zero.
SeriesResult lower_central_series(const MatrixLieAlgebra& l);
bool is_nilpotent_lie(const MatrixLieAlgebra& l);

// Cartan's criterion in characteristic 0: solvable iff tr(ad x ad y) = 0
// for every x in L and y in [L, L]. Independent of derived_series.
bool cartan_solvable(const MatrixLieAlgebra& l);

// Gram matrix of the trace form K(x,y) = tr(ad x ad y) on L's basis.
QMatrix killing_gram(const MatrixLieAlgebra& l);

// True iff every basis matrix is a rational multiple of the identity;
// scalars (one per basis matrix) reported through *scalars.
bool is_scalar_image(const std::vector<QMatrix>& basis,
                     std::vector<Rational>* scalars = nullptr);

}  // namespace artinder
