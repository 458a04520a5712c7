#include "artinder/multipoly.hpp"

#include <cassert>
#include <stdexcept>

namespace artinder {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    assert(r[i] >= 0);
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;  // lex on exponent vectors, first variable most significant
}

MultiPoly MultiPoly::term(std::size_t nvars, const Monomial& m,
                          const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m[i] = 1;
  return term(nvars, m, 1);
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  return term(nvars, Monomial(nvars, 0), c);
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  assert(m.size() == nvars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  MultiPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Rational(-1); }

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m1, c1] : terms_) r.add_term(mono_mul(m1, m), c1 * c);
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Rational(m[var]));
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading_coeff());
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  assert(point.size() == nvars_);
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& vars) const {
  assert(vars.size() == nvars_);
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool first = out.empty();
    Rational a = c < 0 ? Rational(-c) : c;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::string body;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += vars[i];
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    if (body.empty()) {
      out += artinder::to_string(a);
    } else {
      if (a != 1) out += artinder::to_string(a) + "*";
      out += body;
    }
  }
  return out;
}

}  // namespace artinder
