#pragma once

#include <string>

#include "artinder/algebra.hpp"
#include "artinder/derivations.hpp"

namespace artinder {

struct BoundReport {
  std::string name;
  long lhs = 0;
  long rhs = 0;
  bool applicable = true;
  bool holds = false;  // lhs >= rhs for the inequalities; for the solvability
                       // criterion, "hypothesis satisfied, predicts solvable"
  std::string note;
};

// dim Der(A) >= dim(m/m^2) * dim Soc(A); holds for every local algebra.
BoundReport check_perepechko(const LocalAlgebra& a, const DerivationSpace& d);

// dim Der(A) >= n - dim Soc(A); stated for non-negatively graded algebras,
// so it is gated on the graded flag.
BoundReport check_yau(const LocalAlgebra& a, const DerivationSpace& d);

// dim(I/pI) < k + l - 1 implies Der(A) solvable. k = variable count,
// l = largest l with I contained in p^l, dim(I/pI) by exact linear algebra
// in the truncation modulo p^{r+3}.
BoundReport schulze_criterion(const Presentation& p, const GroebnerBasis& g);

struct ChristophersenRecord {
  std::size_t n;
  std::size_t dim_der;
  bool bound_holds;  // dim Der >= n - 1
  bool equality;
  bool is_chain;  // Hilbert-Samuel sequence all ones
};
ChristophersenRecord christophersen_check(const LocalAlgebra& a,
                                          const DerivationSpace& d);

}  // namespace artinder
