#include "artinder/bounds.hpp"

#include <algorithm>
#include <map>

#include "artinder/subspace.hpp"

namespace artinder {

BoundReport check_perepechko(const LocalAlgebra& a, const DerivationSpace& d) {
  BoundReport r;
  r.name = "perepechko";
  r.lhs = static_cast<long>(d.dim());
  r.rhs = static_cast<long>(d.q * socle(a).dim());
  r.holds = r.lhs >= r.rhs;
  return r;
}

BoundReport check_yau(const LocalAlgebra& a, const DerivationSpace& d) {
  BoundReport r;
  r.name = "yau";
  if (!a.graded_flag()) {
    r.applicable = false;
    r.note = "stated for non-negatively graded algebras; graded flag unset";
    return r;
  }
  r.lhs = static_cast<long>(d.dim());
  r.rhs = static_cast<long>(a.dim()) - static_cast<long>(socle(a).dim());
  r.holds = r.lhs >= r.rhs;
  return r;
}

namespace {

// Minimal total degree of a term ("order at the origin").
int low_degree(const MultiPoly& f) {
  int lo = -1;
  for (const auto& [m, c] : f.terms()) {
    int d = total_degree(m);
    if (lo < 0 || d < lo) lo = d;
  }
  return lo;
}

// All monomials of total degree in [lo, hi] in k variables, ascending.
std::vector<Monomial> monomials_between(std::size_t k, int lo, int hi) {
  std::vector<Monomial> out;
  Monomial m(k, 0);
  for (;;) {
    int d = total_degree(m);
    if (d >= lo && d <= hi) out.push_back(m);
    std::size_t pos = 0;
    while (pos < k && ++m[pos] > hi) {
      m[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

// Rank of a set of polynomials in the truncation p / p^{D+1} (coordinates on
// monomials of degree 1..D; higher-degree terms dropped).
std::size_t truncated_rank(const std::vector<MultiPoly>& polys, std::size_t k,
                           int cap) {
  std::vector<Monomial> coords = monomials_between(k, 1, cap);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < coords.size(); ++i) index[coords[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const MultiPoly& f : polys) {
    std::vector<Rational> row(coords.size());
    bool nonzero = false;
    for (const auto& [m, c] : f.terms()) {
      auto it = index.find(m);
      if (it == index.end()) continue;  // truncated away
      row[it->second] = c;
      nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return Subspace::span(coords.size(), rows).dim();
}

// Nilpotency index of the quotient: m^j is spanned by the normal forms of
// the monomials of degree >= j, so the index is the top degree of a monomial
// with nonzero normal form. Monomials of degree >= dim A reduce to zero
// (the filtration strictly decreases), which bounds the search.
std::size_t quotient_nilpotency_index(const GroebnerBasis& g) {
  const std::size_t k = g.nvars;
  const int bound = static_cast<int>(g.standard_monomials.size());
  int r = 0;
  for (const Monomial& m : monomials_between(k, 1, bound)) {
    int d = total_degree(m);
    if (d <= r) continue;
    if (!normal_form(MultiPoly::term(k, m, 1), g).is_zero()) r = d;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

BoundReport schulze_criterion(const Presentation& p, const GroebnerBasis& g) {
  BoundReport r;
  r.name = "schulze";
  const std::size_t k = p.variables.size();
  int l = -1;
  for (const MultiPoly& f : p.relations) {
    if (f.is_zero()) continue;
    int lo = low_degree(f);
    if (l < 0 || lo < l) l = lo;
  }
  if (l < 0) {
    r.applicable = false;
    r.note = "no nonzero relations";
    return r;
  }
  const std::size_t rr = quotient_nilpotency_index(g);
  const int cap = static_cast<int>(rr) + 2;

  // Spanning sets of I and pI modulo p^{cap+1}.
  std::vector<MultiPoly> span_i, span_pi;
  for (const MultiPoly& f : p.relations) {
    if (f.is_zero()) continue;
    int lo = low_degree(f);
    for (const Monomial& m : monomials_between(k, 0, cap - lo))
      span_i.push_back(f.mul_term(m, 1));
    for (const Monomial& m : monomials_between(k, 1, cap - lo))
      span_pi.push_back(f.mul_term(m, 1));
  }
  // p^{r+1} lies in I (m^{r+1} = 0), and p^{r+2} in pI.
  for (const Monomial& m :
       monomials_between(k, static_cast<int>(rr) + 1, cap))
    span_i.push_back(MultiPoly::term(k, m, 1));
  for (const Monomial& m :
       monomials_between(k, static_cast<int>(rr) + 2, cap))
    span_pi.push_back(MultiPoly::term(k, m, 1));

  std::size_t dim_i = truncated_rank(span_i, k, cap);
  std::size_t dim_pi = truncated_rank(span_pi, k, cap);
  long dim_quot = static_cast<long>(dim_i) - static_cast<long>(dim_pi);

  r.lhs = dim_quot;
  r.rhs = static_cast<long>(k) + l - 1;
  r.holds = r.lhs < r.rhs;
  r.note = "k=" + std::to_string(k) + " l=" + std::to_string(l) +
           " dim(I/pI)=" + std::to_string(dim_quot) +
           (r.holds ? "; predicts Der solvable" : "; criterion silent");
  return r;
}

ChristophersenRecord christophersen_check(const LocalAlgebra& a,
                                          const DerivationSpace& d) {
  ChristophersenRecord rec;
  rec.n = a.dim();
  rec.dim_der = d.dim();
  rec.bound_holds = rec.dim_der + 1 >= rec.n;
  rec.equality = rec.dim_der + 1 == rec.n;
  std::vector<std::size_t> hs = hilbert_samuel(a);
  rec.is_chain = std::all_of(hs.begin(), hs.end(),
                             [](std::size_t x) { return x == 1; });
  return rec;
}

}  // namespace artinder
