#pragma once

#include <string>
#include <vector>

#include "artinder/unipoly.hpp"

namespace artinder {

// Q[x]/(modulus) for a monic irreducible modulus of degree <= 4. Elements are
// coefficient vectors of degree < deg(modulus). Degree 1 gives Q itself,
// which lets rational and extension-field eigenspaces share one code path.
class NumberField {
 public:
  explicit NumberField(UniPoly modulus);

  const UniPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }

  using Elem = std::vector<Rational>;  // size == degree()

  Elem zero() const;
  Elem one() const;
  Elem from_rational(const Rational& r) const;
  // The residue class of x; for degree 1 this is the rational root itself.
  Elem generator() const;
  Elem from_poly(const UniPoly& p) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Rational& s) const;
  // Throws ModulusReducible if a nonzero non-invertible element shows up
  // (that means the modulus was not irreducible after all).
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;

  std::string to_string(const Elem& a, const std::string& var = "w") const;

 private:
  UniPoly modulus_;
};

using NFMatrix = std::vector<std::vector<NumberField::Elem>>;

// Exact kernel basis of a matrix over the extension field; each basis vector
// is a row of field elements, one per free column of the Gauss-Jordan form,
// normalized to a unit in its free coordinate (so the output is canonical).
std::vector<std::vector<NumberField::Elem>> nf_kernel(const NumberField& f,
                                                      const NFMatrix& m);

}  // namespace artinder
