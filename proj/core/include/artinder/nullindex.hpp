#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artinder/algebra.hpp"
#include "artinder/derivations.hpp"
#include "artinder/numberfield.hpp"

namespace artinder {

// Tri-state outcome of the full-null-index check. The defining condition
// quantifies over every nonzero derivation, so the positive direction is
// either certified structurally or left Unknown with sampling evidence;
// the negative direction carries a re-verified witness.
struct NullIndexVerdict {
  enum class Kind { Full, NotFull, Unknown };
  enum class Certificate { None, TrivialV, ScalarImage };

  Kind kind = Kind::Unknown;
  Certificate certificate = Certificate::None;

  // NotFull witness: a derivation whose induced action on V has an
  // eigenvalue whose whole eigenspace lies in the zero set of P_A.
  struct Witness {
    std::vector<Rational> derivation_coeffs;  // over the Der basis
    UniPoly eigenvalue_min_poly;  // degree 1 (rational) up to 4
    // Eigenbasis over Q[w]/(min_poly); rows of field elements.
    std::vector<std::vector<NumberField::Elem>> eigenbasis;
  };
  std::optional<Witness> witness;

  // Unknown evidence.
  std::size_t samples_tried = 0;
  std::size_t unfactored_cases = 0;

  std::string describe() const;
};

struct NullIndexConfig {
  int coeff_range = 2;        // integer combinations in [-range, range]
  std::size_t max_combo = 3;  // at most this many basis elements at a time
  std::size_t sample_count = 64;
  std::uint64_t seed = 20240901;
};

// True iff P vanishes identically on the span of the eigenbasis: substitute
// the generic combination of the basis vectors and expand over the field.
bool p_vanishes_on_eigenspace(
    const MultiPoly& p, const NumberField& f,
    const std::vector<std::vector<NumberField::Elem>>& eigenbasis);

// The certify / refute / Unknown cascade. Pre: A Gorenstein.
NullIndexVerdict check_full_null_index(const LocalAlgebra& a,
                                       const DerivationSpace& d,
                                       const IndexPolynomial& p,
                                       const NullIndexConfig& cfg = {});
NullIndexVerdict check_full_null_index(const LocalAlgebra& a,
                                       const NullIndexConfig& cfg = {});

// The formal polynomial sum_i dP/dv_i (v) * (rho(xi) v)_i; identically zero
// for every derivation killing the socle of a Gorenstein algebra.
bool differential_identity_check(const IndexPolynomial& p, const QMatrix& rho);

// Symbolic check that m^{r-1} * xi(m) = 0 for the generic element m of the
// maximal ideal (coordinates as formal indeterminates).
bool socle_derivative_identity(const DerivationSpace& d, const QMatrix& xi);

}  // namespace artinder
