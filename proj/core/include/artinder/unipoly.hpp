#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artinder/rational.hpp"

namespace artinder {

// Univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  // The monomial c*x^k.
  static UniPoly term(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  Rational leading() const;
  bool is_monic() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const = default;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  // Quotient and remainder with deg(rem) < deg(divisor).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd

struct Factorization {
  // Monic irreducible factors with multiplicities, grouped.
  std::vector<std::pair<UniPoly, int>> factors;
  // Leftover that could not be split within the degree-4 budget (monic);
  // zero-degree (i.e. 1) when the factorization is complete.
  UniPoly unfactored;
  // Overall scalar so that constant * prod(factors) * unfactored == input.
  Rational constant;

  bool complete() const { return unfactored.degree() <= 0; }
};

// Rational roots in full (rational-root theorem), quadratics by discriminant,
// cubics/quartics by bounded integer trial factorization. Remainders of
// degree > 4 after rational-root extraction are returned unfactored.
Factorization factor_bounded(const UniPoly& p);

}  // namespace artinder
