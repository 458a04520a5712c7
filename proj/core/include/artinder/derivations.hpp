#pragma once

#include <vector>

#include "artinder/algebra.hpp"
#include "artinder/matrix.hpp"

namespace artinder {

// Basis of Der(A), each derivation given by its restriction to the maximal
// ideal as an (n-1)x(n-1) matrix in the adapted basis (so every matrix is
// block lower triangular along the filtration and the top-left q x q block
// is the induced action on V = m/m^2). The basis is the RREF of the
// vectorized Leibniz-system kernel, so it is deterministic.
struct DerivationSpace {
  std::size_t n;  // dim A
  std::size_t q;  // dim V
  std::vector<QMatrix> basis;
  AdaptedBasis adapted;
  StructureTensor m_tensor;                    // adapted-basis tensor on m
  std::vector<std::vector<Rational>> socle_ad; // socle basis, adapted coords

  std::size_t dim() const { return basis.size(); }

  // Linear combination of the basis with the given coefficients.
  QMatrix combine(const std::vector<Rational>& coeffs) const;
};

DerivationSpace derivation_space(const LocalAlgebra& a);

// Top-left q x q block: the action on V.
QMatrix induced_rep(const DerivationSpace& d, const QMatrix& xi);
QMatrix induced_rep(const DerivationSpace& d, std::size_t basis_index);

// Restriction of xi to Soc(A) in the socle basis (1x1 for Gorenstein).
QMatrix socle_action(const DerivationSpace& d, const QMatrix& xi);

// {xi : xi(s) = 0 for all s in Soc(A)}; a Lie subalgebra.
DerivationSpace socle_annihilator(const DerivationSpace& d);

// {xi : rho(xi) = 0}, i.e. derivations mapping m into m^2.
DerivationSpace rep_kernel(const DerivationSpace& d);

// Independent Leibniz check used by the tests: xi(b_i b_j) =
// xi(b_i) b_j + b_i xi(b_j) on every pair of adapted basis vectors.
bool satisfies_leibniz(const DerivationSpace& d, const QMatrix& xi);

}  // namespace artinder
