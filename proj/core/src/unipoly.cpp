#include "artinder/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace artinder {

namespace {

Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Positive divisors by trial division; inputs are desk-scale.
std::vector<Integer> divisors(const Integer& n) {
  Integer a = abs_int(n);
  assert(a != 0);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it)
    small.push_back(*it);
  return small;
}

bool is_square(const Rational& r, Rational* root) {
  if (r < 0) return false;
  Integer num = numerator(r), den = denominator(r);
  Integer sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  if (root) *root = Rational(sn) / Rational(sd);
  return true;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
  return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::term(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

Rational UniPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UniPoly::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

bool UniPoly::is_monic() const { return leading() == 1; }

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= s;
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rational(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("UniPoly: divide by zero");
  UniPoly rem = *this;
  std::vector<Rational> q;
  int dd = divisor.degree();
  if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    std::size_t shift = rem.degree() - dd;
    Rational f = rem.leading() / divisor.leading();
    q[shift] = f;
    rem = rem - UniPoly::term(f, shift) * divisor;
  }
  return {UniPoly(std::move(q)), rem};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    bool first = out.empty();
    Rational a = c < 0 ? Rational(-c) : c;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::string coef = artinder::to_string(a);
    if (k == 0) {
      out += coef;
    } else {
      if (a != 1) out += coef + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

namespace {

// Primitive integer coefficients with positive leading term.
std::vector<Integer> primitive_int_coeffs(const UniPoly& p) {
  Integer scale = 1;
  for (const auto& c : p.coeffs()) scale = lcm(scale, denominator(c));
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs())
    v.push_back(numerator(c) * (scale / denominator(c)));
  Integer content = 0;
  for (const auto& c : v) content = gcd(content, c);
  if (v.back() < 0) content = -content;
  for (auto& c : v) c /= content;
  return v;
}

// All rational root candidates p/q of a primitive integer polynomial with
// nonzero constant term.
std::vector<Rational> root_candidates(const std::vector<Integer>& c) {
  std::vector<Rational> out;
  for (const Integer& p : divisors(c.front()))
    for (const Integer& q : divisors(c.back())) {
      Rational r = Rational(p) / Rational(q);
      out.push_back(r);
      out.push_back(-r);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Try to split a monic quartic with no rational roots into two integer
// quadratics. Returns the two monic quadratic factors on success.
bool split_quartic(const UniPoly& p, UniPoly* f1, UniPoly* f2) {
  std::vector<Integer> e = primitive_int_coeffs(p);
  assert(e.size() == 5);
  const Integer &e0 = e[0], &e1 = e[1], &e2 = e[2], &e3 = e[3], &e4 = e[4];
  for (const Integer& u : divisors(e4)) {
    Integer w = e4 / u;
    for (Integer b0 : divisors(e0)) {
      for (int sign = 0; sign < 2; ++sign) {
        Integer b = sign ? Integer(-b0) : b0;
        Integer d = e0 / b;
        // (u x^2 + a x + b)(w x^2 + c x + d): solve for a, c.
        //   w*a + u*c = e3
        //   d*a + b*c = e1
        Integer det = w * b - u * d;
        if (det != 0) {
          Integer an = e3 * b - e1 * u;
          Integer cn = w * e1 - d * e3;
          if (an % det != 0 || cn % det != 0) continue;
          Integer a = an / det, c = cn / det;
          if (u * d + a * c + b * w != e2) continue;
          *f1 = UniPoly({Rational(b), Rational(a), Rational(u)}).monic();
          *f2 = UniPoly({Rational(d), Rational(c), Rational(w)}).monic();
          return true;
        }
        // Degenerate system: scan a over a crude coefficient bound.
        Integer bound = 1;
        for (const auto& x : e) bound += abs_int(x);
        for (Integer a = -bound; a <= bound; ++a) {
          Integer cnum = e3 - w * a;
          if (cnum % u != 0) continue;
          Integer c = cnum / u;
          if (d * a + b * c != e1) continue;
          if (u * d + a * c + b * w != e2) continue;
          *f1 = UniPoly({Rational(b), Rational(a), Rational(u)}).monic();
          *f2 = UniPoly({Rational(d), Rational(c), Rational(w)}).monic();
          return true;
        }
      }
    }
  }
  return false;
}

void push_factor(std::map<std::vector<Rational>, int>& acc, const UniPoly& f,
                 int mult = 1) {
  acc[f.coeffs()] += mult;
}

}  // namespace

Factorization factor_bounded(const UniPoly& p) {
  Factorization out;
  out.unfactored = UniPoly::constant(1);
  out.constant = p.leading();
  if (p.is_zero()) {
    out.constant = 0;
    return out;
  }
  std::map<std::vector<Rational>, int> acc;
  UniPoly rem = p.monic();

  // Roots at zero.
  int zero_mult = 0;
  while (!rem.is_zero() && rem.coeff(0) == 0 && rem.degree() > 0) {
    rem = rem.divmod(UniPoly::term(Rational(1), 1)).first;
    ++zero_mult;
  }
  if (zero_mult > 0)
    push_factor(acc, UniPoly::term(Rational(1), 1), zero_mult);

  // Rational-root theorem on the primitive integer form.
  if (rem.degree() >= 1) {
    std::vector<Integer> ic = primitive_int_coeffs(rem);
    for (const Rational& r : root_candidates(ic)) {
      UniPoly lin({-r, Rational(1)});
      int mult = 0;
      while (rem.degree() >= 1 && rem.eval(r) == 0) {
        rem = rem.divmod(lin).first;
        ++mult;
      }
      if (mult > 0) push_factor(acc, lin, mult);
      if (rem.degree() < 1) break;
    }
  }

  // Rational roots are exhausted; split what is left.
  while (rem.degree() >= 2) {
    if (rem.degree() == 2) {
      Rational disc = rem.coeff(1) * rem.coeff(1) - 4 * rem.coeff(2) * rem.coeff(0);
      Rational sq;
      if (is_square(disc, &sq)) {
        Rational r1 = (-rem.coeff(1) + sq) / 2;
        Rational r2 = (-rem.coeff(1) - sq) / 2;
        push_factor(acc, UniPoly({-r1, Rational(1)}));
        push_factor(acc, UniPoly({-r2, Rational(1)}));
      } else {
        push_factor(acc, rem);
      }
      rem = UniPoly::constant(1);
    } else if (rem.degree() == 3) {
      // No rational roots, so no linear factor: irreducible over Q.
      push_factor(acc, rem);
      rem = UniPoly::constant(1);
    } else if (rem.degree() == 4) {
      UniPoly f1, f2;
      if (split_quartic(rem, &f1, &f2)) {
        push_factor(acc, f1);
        push_factor(acc, f2);
      } else {
        push_factor(acc, rem);
      }
      rem = UniPoly::constant(1);
    } else {
      out.unfactored = rem;
      rem = UniPoly::constant(1);
    }
  }

  for (const auto& [coeffs, mult] : acc)
    out.factors.emplace_back(UniPoly(coeffs), mult);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.coeffs() < b.first.coeffs();
            });
  return out;
}

}  // namespace artinder
