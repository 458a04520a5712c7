#include "artinder/numberfield.hpp"

#include <cassert>
#include <stdexcept>

#include "artinder/errors.hpp"

namespace artinder {

NumberField::NumberField(UniPoly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || modulus_.degree() > 4)
    throw std::invalid_argument("NumberField: modulus degree must be 1..4");
  if (!modulus_.is_monic())
    throw std::invalid_argument("NumberField: modulus must be monic");
}

NumberField::Elem NumberField::zero() const { return Elem(degree()); }

NumberField::Elem NumberField::one() const { return from_rational(1); }

NumberField::Elem NumberField::from_rational(const Rational& r) const {
  Elem e(degree());
  e[0] = r;
  return e;
}

NumberField::Elem NumberField::generator() const {
  // Degree 1: the residue of x is the rational root itself.
  if (degree() == 1) return Elem{-modulus_.coeff(0)};
  Elem e(degree());
  e[1] = 1;
  return e;
}

NumberField::Elem NumberField::from_poly(const UniPoly& p) const {
  UniPoly r = p.divmod(modulus_).second;
  Elem e(degree());
  for (std::size_t i = 0; i < degree(); ++i) e[i] = r.coeff(i);
  return e;
}

bool NumberField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const {
  Elem e(degree());
  for (std::size_t i = 0; i < degree(); ++i) e[i] = a[i] + b[i];
  return e;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const {
  Elem e(degree());
  for (std::size_t i = 0; i < degree(); ++i) e[i] = a[i] - b[i];
  return e;
}

NumberField::Elem NumberField::neg(const Elem& a) const {
  Elem e(degree());
  for (std::size_t i = 0; i < degree(); ++i) e[i] = -a[i];
  return e;
}

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
  return from_poly(UniPoly(a) * UniPoly(b));
}

NumberField::Elem NumberField::mul(const Elem& a, const Rational& s) const {
  Elem e(degree());
  for (std::size_t i = 0; i < degree(); ++i) e[i] = a[i] * s;
  return e;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::invalid_argument("NumberField: inverse of zero");
  // Extended Euclid on (a, modulus); a zero divisor means the modulus has a
  // nontrivial factor.
  UniPoly r0 = modulus_, r1(a);
  UniPoly s0, s1 = UniPoly::constant(1);  // coefficients of a
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    UniPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0.degree() != 0)
    throw ModulusReducible("zero divisor modulo " + modulus_.to_string() +
                           ": " + UniPoly(a).to_string());
  return from_poly(s0 * (Rational(1) / r0.coeff(0)));
}

NumberField::Elem NumberField::div(const Elem& a, const Elem& b) const {
  return mul(a, inv(b));
}

std::string NumberField::to_string(const Elem& a, const std::string& var) const {
  return UniPoly(a).to_string(var);
}

std::vector<std::vector<NumberField::Elem>> nf_kernel(const NumberField& f,
                                                      const NFMatrix& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  NFMatrix a = m;
  // Gauss-Jordan over the extension field.
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t sel = pr;
    while (sel < rows && f.is_zero(a[sel][col])) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pr]);
    NumberField::Elem inv = f.inv(a[pr][col]);
    for (std::size_t j = col; j < cols; ++j) a[pr][j] = f.mul(a[pr][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || f.is_zero(a[i][col])) continue;
      NumberField::Elem factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[pr][j]));
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++pr;
  }
  std::vector<std::vector<NumberField::Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<NumberField::Elem> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pr; ++i)
      v[pivot_col_of_row[i]] = f.neg(a[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace artinder
