#pragma once

#include <map>
#include <string>
#include <vector>

#include "artinder/rational.hpp"

namespace artinder {

// Exponent vector, one entry per variable of the ambient ring.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, pre: b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Graded-lexicographic order: total degree first, then lex with the first
// variable most significant. This is the one term order used everywhere.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

// Multivariate polynomial over Q. Terms are stored in descending graded-lex
// order, so begin() is the leading term. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }
  static MultiPoly term(std::size_t nvars, const Monomial& m, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly constant(std::size_t nvars, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int degree() const;  // total degree; -1 for zero
  bool is_homogeneous() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& s) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const = default;

  MultiPoly mul_term(const Monomial& m, const Rational& c) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly monic() const;
  Rational eval(const std::vector<Rational>& point) const;

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace artinder
