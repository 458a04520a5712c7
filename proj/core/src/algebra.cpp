#include "artinder/algebra.hpp"

#include <cassert>

#include "artinder/errors.hpp"

namespace artinder {

namespace {

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

std::string mono_label(const Monomial& m,
                       const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::vector<Rational> LocalAlgebra::multiply(
    const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  assert(a.size() == n_ && b.size() == n_);
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      const Rational f = a[i] * b[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (tensor_[i][j][k] != 0) out[k] += f * tensor_[i][j][k];
    }
  }
  return out;
}

LocalAlgebra LocalAlgebra::from_structure_constants(
    StructureTensor tensor, std::vector<std::string> labels, bool graded) {
  LocalAlgebra a;
  a.n_ = tensor.size();
  if (a.n_ == 0) throw Error("empty structure tensor");
  for (const auto& row : tensor) {
    if (row.size() != a.n_) throw Error("ragged structure tensor");
    for (const auto& col : row)
      if (col.size() != a.n_) throw Error("ragged structure tensor");
  }
  if (labels.size() != a.n_) throw Error("label count != dimension");
  a.tensor_ = std::move(tensor);
  a.labels_ = std::move(labels);
  a.graded_ = graded;
  const std::size_t n = a.n_;
  const auto& c = a.tensor_;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (c[i][j] != c[j][i])
        throw NotCommutative("basis pair (" + a.labels_[i] + ", " +
                             a.labels_[j] + ")");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += c[i][j][m] * c[m][k][l];
            rhs += c[j][k][m] * c[i][m][l];
          }
          if (lhs != rhs)
            throw NotAssociative("basis triple (" + a.labels_[i] + ", " +
                                 a.labels_[j] + ", " + a.labels_[k] + ")");
        }
      }

  bool unit_found = false;
  for (std::size_t u = 0; u < n && !unit_found; ++u) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      for (std::size_t k = 0; k < n && ok; ++k)
        if (c[u][j][k] != (j == k ? Rational(1) : Rational(0))) ok = false;
    if (ok) {
      a.unit_ = u;
      unit_found = true;
    }
  }
  if (!unit_found) throw NoUnit("no basis vector acts as the identity");

  for (std::size_t i = 0; i < n; ++i)
    if (i != a.unit_) a.m_basis_.push_back(i);

  // The complement of the unit must be an ideal with some power zero.
  for (std::size_t i : a.m_basis_)
    for (std::size_t j : a.m_basis_)
      if (c[i][j][a.unit_] != 0)
        throw NotLocal("product (" + a.labels_[i] + ")*(" + a.labels_[j] +
                       ") has a unit component");
  filtration(a);  // throws NotLocal when m is not nilpotent
  return a;
}

Filtration filtration(const LocalAlgebra& a) {
  const std::size_t n = a.dim();
  Filtration f;
  std::vector<std::vector<Rational>> full;
  for (std::size_t i = 0; i < n; ++i) full.push_back(unit_vector(n, i));
  f.powers.push_back(Subspace::span(n, full));  // m^0 = A

  std::vector<std::vector<Rational>> m_rows;
  for (std::size_t i : a.m_basis()) m_rows.push_back(unit_vector(n, i));
  Subspace current = Subspace::span(n, m_rows);
  while (current.dim() > 0) {
    f.powers.push_back(current);
    std::vector<std::vector<Rational>> next_rows;
    for (std::size_t i : a.m_basis())
      for (const auto& v : current.basis())
        next_rows.push_back(a.multiply(unit_vector(n, i), v));
    Subspace next = Subspace::span(n, next_rows);
    if (next.dim() >= current.dim())
      throw NotLocal("maximal ideal is not nilpotent (filtration stabilizes "
                     "at dimension " + std::to_string(next.dim()) + ")");
    current = next;
  }
  f.r = f.powers.size() - 1;
  return f;
}

LocalAlgebra from_presentation(const Presentation& p) {
  GroebnerBasis g = buchberger(p);
  LocalCheck check = validate_local(p, g);
  if (!check.ok) throw NotLocal(check.reason);
  StructureTensor c = structure_constants(g);
  std::vector<std::string> labels;
  for (const Monomial& m : g.standard_monomials)
    labels.push_back(mono_label(m, p.variables));
  return LocalAlgebra::from_structure_constants(std::move(c), std::move(labels),
                                                p.is_graded());
}

std::vector<std::size_t> hilbert_samuel(const LocalAlgebra& a) {
  Filtration f = filtration(a);
  std::vector<std::size_t> ks;
  for (std::size_t i = 0; i <= f.r; ++i) {
    std::size_t next = (i + 1 <= f.r) ? f.powers[i + 1].dim() : 0;
    ks.push_back(f.powers[i].dim() - next);
  }
  return ks;
}

Subspace socle(const LocalAlgebra& a) {
  const std::size_t n = a.dim();
  const auto& mb = a.m_basis();
  const std::size_t d = mb.size();
  if (d == 0) return Subspace(n);
  // Unknowns: coordinates over the m-basis. One row per (j in m, output k).
  QMatrix sys(d * n, d);
  for (std::size_t jj = 0; jj < d; ++jj)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t ii = 0; ii < d; ++ii)
        sys.at(jj * n + k, ii) = a.tensor()[mb[ii]][mb[jj]][k];
  Subspace ker = kernel(sys);
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : ker.basis()) {
    std::vector<Rational> w(n);
    for (std::size_t ii = 0; ii < d; ++ii) w[mb[ii]] = v[ii];
    rows.push_back(std::move(w));
  }
  return Subspace::span(n, rows);
}

bool is_gorenstein(const LocalAlgebra& a) { return socle(a).dim() == 1; }

AdaptedBasis cotangent(const LocalAlgebra& a) {
  const std::size_t n = a.dim();
  Filtration f = filtration(a);
  AdaptedBasis ab;
  ab.n = n;
  // Strata: extend a basis of m^{i+1} to m^i, for i = 1..r; the completing
  // vectors of stratum i are taken from the RREF basis of m^i in order.
  std::vector<std::vector<std::vector<Rational>>> strata(f.r + 1);
  for (std::size_t i = 1; i <= f.r; ++i) {
    std::vector<std::vector<Rational>> acc;
    if (i + 1 <= f.r)
      for (const auto& v : f.powers[i + 1].basis()) acc.push_back(v);
    std::size_t base_dim = Subspace::span(n, acc).dim();
    // Walk the RREF basis from the last pivot back: pivots of later basis
    // coordinates come first, which puts the V-representatives in the order
    // the variables were declared (t before s, x1 before x2, ...).
    const auto& pw = f.powers[i].basis();
    for (auto it = pw.rbegin(); it != pw.rend(); ++it) {
      const auto& v = *it;
      auto trial = acc;
      trial.push_back(v);
      std::size_t d2 = Subspace::span(n, trial).dim();
      if (d2 > base_dim) {
        strata[i].push_back(v);
        acc = std::move(trial);
        base_dim = d2;
      }
    }
  }
  for (std::size_t i = 1; i <= f.r; ++i) {
    ab.strata_sizes.push_back(strata[i].size());
    for (auto& v : strata[i]) ab.vectors.push_back(std::move(v));
  }
  ab.q = f.r >= 1 ? ab.strata_sizes[0] : 0;

  // Coordinate change on m: columns of adapted_to_m are the adapted vectors
  // in m-basis coordinates.
  const auto& mb = a.m_basis();
  const std::size_t d = mb.size();
  assert(ab.vectors.size() == d);
  QMatrix t(d, d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t row = 0; row < d; ++row)
      t.at(row, col) = ab.vectors[col][mb[row]];
  ab.adapted_to_m = t;
  // Invert by row-reducing [T | I].
  QMatrix aug(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = t.at(i, j);
    aug.at(i, d + i) = 1;
  }
  std::size_t rank = aug.rref_in_place();
  if (rank != d) throw Error("adapted basis is singular");
  QMatrix inv(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) inv.at(i, j) = aug.at(i, d + j);
  ab.m_to_adapted = std::move(inv);
  return ab;
}

StructureTensor adapted_m_tensor(const LocalAlgebra& a,
                                 const AdaptedBasis& ab) {
  const auto& mb = a.m_basis();
  const std::size_t d = mb.size();
  StructureTensor c(d, std::vector<std::vector<Rational>>(
                           d, std::vector<Rational>(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::vector<Rational> prod = a.multiply(ab.vectors[i], ab.vectors[j]);
      assert(prod[a.unit_index()] == 0);
      std::vector<Rational> m_coords(d);
      for (std::size_t k = 0; k < d; ++k) m_coords[k] = prod[mb[k]];
      std::vector<Rational> ad = ab.m_to_adapted.apply(m_coords);
      c[i][j] = ad;
      c[j][i] = std::move(ad);
    }
  return c;
}

IndexPolynomial index_polynomial(const LocalAlgebra& a) {
  return index_polynomial(a, cotangent(a));
}

IndexPolynomial index_polynomial(const LocalAlgebra& a,
                                 const AdaptedBasis& ab) {
  Subspace soc = socle(a);
  if (soc.dim() != 1)
    throw NotGorenstein("socle dimension is " + std::to_string(soc.dim()));
  const std::size_t d = a.m_basis().size();
  const std::size_t q = ab.q;
  const std::size_t r = ab.strata_sizes.size();
  StructureTensor c = adapted_m_tensor(a, ab);

  // Generic element sum v_i a_i over the V-representatives, raised to the
  // r-th power through the adapted tensor; coordinates are polynomials in v.
  std::vector<MultiPoly> gen(d, MultiPoly(q));
  for (std::size_t i = 0; i < q; ++i) gen[i] = MultiPoly::variable(q, i);
  std::vector<MultiPoly> power = gen;
  for (std::size_t step = 2; step <= r; ++step) {
    std::vector<MultiPoly> next(d, MultiPoly(q));
    for (std::size_t i = 0; i < d; ++i) {
      if (power[i].is_zero()) continue;
      for (std::size_t j = 0; j < q; ++j) {
        MultiPoly prod = power[i] * gen[j];
        for (std::size_t k = 0; k < d; ++k)
          if (c[i][j][k] != 0) next[k] = next[k] + prod * c[i][j][k];
      }
    }
    power = std::move(next);
  }

  const std::size_t s_index = d - 1;  // last adapted vector spans m^r = Soc
  for (std::size_t k = 0; k + 1 < d; ++k)
    if (!power[k].is_zero())
      throw SupportLeak("generic r-th power has a component on adapted basis "
                        "vector " + std::to_string(k));
  MultiPoly p = power[s_index];
  if (p.is_zero()) throw SupportLeak("index polynomial is identically zero");
  if (!p.is_homogeneous() || p.degree() != static_cast<int>(r))
    throw SupportLeak("index polynomial is not homogeneous of degree r");
  IndexPolynomial out{p.monic(), r, s_index, p.leading_coeff()};
  return out;
}

}  // namespace artinder
