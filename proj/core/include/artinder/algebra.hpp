#pragma once

#include <string>
#include <vector>

#include "artinder/groebner.hpp"
#include "artinder/subspace.hpp"

namespace artinder {

// Finite-dimensional local algebra A = C*1 (+) m, given by a basis and its
// structure-constant tensor. Basis index 0 need not be the unit; unit_index
// records which basis vector acts as the identity. All other basis vectors
// span the maximal ideal.
class LocalAlgebra {
 public:
  // Validates commutativity, associativity, a unit basis vector, and
  // nilpotency of the complement (NotCommutative / NotAssociative / NoUnit /
  // NotLocal otherwise).
  static LocalAlgebra from_structure_constants(StructureTensor tensor,
                                               std::vector<std::string> labels,
                                               bool graded = false);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTensor& tensor() const { return tensor_; }
  std::size_t unit_index() const { return unit_; }
  const std::vector<std::size_t>& m_basis() const { return m_basis_; }
  bool graded_flag() const { return graded_; }

  // Product of two coordinate vectors (length n) through the tensor.
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;

 private:
  LocalAlgebra() = default;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  StructureTensor tensor_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> m_basis_;
  bool graded_ = false;
};

// buchberger -> validate_local -> structure_constants -> validation.
LocalAlgebra from_presentation(const Presentation& p);

// m^0 = A  >  m  >  m^2  >  ...  >  m^r != 0, as subspaces of Q^n.
struct Filtration {
  std::vector<Subspace> powers;  // powers[i] = m^i, i = 0..r
  std::size_t r;                 // nilpotency index
};
Filtration filtration(const LocalAlgebra& a);

// (k_0, ..., k_r) with k_i = dim(m^i / m^{i+1}); sums to dim A, k_0 = 1.
std::vector<std::size_t> hilbert_samuel(const LocalAlgebra& a);

// Annihilator of m inside m, as a subspace of Q^n.
Subspace socle(const LocalAlgebra& a);

bool is_gorenstein(const LocalAlgebra& a);

// Ordered basis of m adapted to the filtration: vectors are grouped in strata,
// stratum i completing m^{i+1} to m^i; the first q vectors represent a basis
// of V = m/m^2 and the last stratum spans m^r.
struct AdaptedBasis {
  std::size_t n;                              // dim A
  std::size_t q;                              // dim V
  std::vector<std::vector<Rational>> vectors; // n-1 vectors in A-coordinates
  std::vector<std::size_t> strata_sizes;      // k_1..k_r
  // Coordinate change on m: adapted coords of a vector given in the
  // m-basis coordinates of the algebra (length n-1 over m_basis order).
  QMatrix m_to_adapted;
  QMatrix adapted_to_m;  // inverse
};
AdaptedBasis cotangent(const LocalAlgebra& a);

// Structure constants of m in the adapted basis: (n-1)^3 tensor.
StructureTensor adapted_m_tensor(const LocalAlgebra& a, const AdaptedBasis& ab);

// Homogeneous degree-r polynomial P on V with m^r = P(pi(m)) * s, normalized
// so its graded-lex leading coefficient is 1.
struct IndexPolynomial {
  MultiPoly poly;                     // in q variables
  std::size_t degree;                 // = r
  std::size_t socle_generator_index;  // adapted-basis index of s
  Rational normalization;             // discarded leading scalar
};
IndexPolynomial index_polynomial(const LocalAlgebra& a);
IndexPolynomial index_polynomial(const LocalAlgebra& a, const AdaptedBasis& ab);

}  // namespace artinder
