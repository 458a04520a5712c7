#include "artinder/derivations.hpp"

#include <cassert>

#include "artinder/errors.hpp"
#include "artinder/subspace.hpp"

namespace artinder {

namespace {

// Restrict a sub-collection of derivations (given as coefficient rows over
// d.basis) and rebuild a deterministic DerivationSpace.
DerivationSpace rebuild(const DerivationSpace& d,
                        const std::vector<std::vector<Rational>>& coeff_rows) {
  const std::size_t m = d.n - 1;
  std::vector<std::vector<Rational>> vec_rows;
  for (const auto& coeffs : coeff_rows)
    vec_rows.push_back(d.combine(coeffs).vectorized());
  Subspace sp = Subspace::span(m * m, vec_rows);
  DerivationSpace out = d;
  out.basis.clear();
  for (const auto& row : sp.basis())
    out.basis.push_back(QMatrix::from_vector(m, m, row));
  return out;
}

}  // namespace

QMatrix DerivationSpace::combine(const std::vector<Rational>& coeffs) const {
  assert(coeffs.size() == basis.size());
  const std::size_t m = n - 1;
  QMatrix out(m, m);
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (coeffs[a] != 0) out = out + basis[a] * coeffs[a];
  return out;
}

DerivationSpace derivation_space(const LocalAlgebra& alg) {
  const std::size_t n = alg.dim();
  const std::size_t m = n - 1;
  DerivationSpace d;
  d.n = n;
  d.adapted = cotangent(alg);
  d.q = d.adapted.q;
  d.m_tensor = adapted_m_tensor(alg, d.adapted);
  const StructureTensor& c = d.m_tensor;

  // Unknowns xi[k][i] (entry (k,i): coefficient of b_k in xi(b_i)),
  // vectorized row-major. One equation per pair i <= j and coordinate k:
  //   sum_l c[i][j][l] xi[k][l] - sum_l xi[l][i] c[l][j][k]
  //                             - sum_l xi[l][j] c[i][l][k] = 0.
  std::size_t n_pairs = m * (m + 1) / 2;
  QMatrix sys(n_pairs * m, m * m);
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k, ++row) {
        for (std::size_t l = 0; l < m; ++l) {
          sys.at(row, k * m + l) += c[i][j][l];
          sys.at(row, l * m + i) -= c[l][j][k];
          sys.at(row, l * m + j) -= c[i][l][k];
        }
      }
    }
  Subspace ker = kernel(sys);
  for (const auto& v : ker.basis())
    d.basis.push_back(QMatrix::from_vector(m, m, v));

  // Socle in adapted coordinates.
  Subspace soc = socle(alg);
  const auto& mb = alg.m_basis();
  for (const auto& s : soc.basis()) {
    std::vector<Rational> m_coords(m);
    for (std::size_t k = 0; k < m; ++k) m_coords[k] = s[mb[k]];
    d.socle_ad.push_back(d.adapted.m_to_adapted.apply(m_coords));
  }
  return d;
}

QMatrix induced_rep(const DerivationSpace& d, const QMatrix& xi) {
  QMatrix r(d.q, d.q);
  for (std::size_t i = 0; i < d.q; ++i)
    for (std::size_t j = 0; j < d.q; ++j) r.at(i, j) = xi.at(i, j);
  return r;
}

QMatrix induced_rep(const DerivationSpace& d, std::size_t basis_index) {
  return induced_rep(d, d.basis.at(basis_index));
}

QMatrix socle_action(const DerivationSpace& d, const QMatrix& xi) {
  const std::size_t sd = d.socle_ad.size();
  const std::size_t m = d.n - 1;
  // xi maps the socle into itself; express xi(s_i) in the socle basis by
  // solving against the (RREF-spanned) socle rows.
  QMatrix out(sd, sd);
  for (std::size_t i = 0; i < sd; ++i) {
    std::vector<Rational> img = xi.apply(d.socle_ad[i]);
    // Solve sum_j x_j s_j = img.
    QMatrix sys(m, sd + 1);
    for (std::size_t rowi = 0; rowi < m; ++rowi) {
      for (std::size_t j = 0; j < sd; ++j) sys.at(rowi, j) = d.socle_ad[j][rowi];
      sys.at(rowi, sd) = img[rowi];
    }
    std::size_t rank = sys.rref_in_place();
    for (std::size_t rowi = 0; rowi < rank; ++rowi) {
      std::size_t piv = 0;
      while (piv <= sd && sys.at(rowi, piv) == 0) ++piv;
      if (piv == sd)
        throw Error("socle is not invariant under a derivation");
      if (piv < sd) out.at(piv, i) = sys.at(rowi, sd);
    }
  }
  return out;
}

DerivationSpace socle_annihilator(const DerivationSpace& d) {
  const std::size_t nd = d.dim();
  const std::size_t m = d.n - 1;
  const std::size_t sd = d.socle_ad.size();
  if (sd == 0) return d;
  // Condition on coefficients: (sum_a c_a xi_a)(s_i) = 0 for all socle rows.
  QMatrix sys(sd * m, nd);
  for (std::size_t i = 0; i < sd; ++i)
    for (std::size_t a = 0; a < nd; ++a) {
      std::vector<Rational> img = d.basis[a].apply(d.socle_ad[i]);
      for (std::size_t k = 0; k < m; ++k) sys.at(i * m + k, a) = img[k];
    }
  Subspace ker = kernel(sys);
  return rebuild(d, ker.basis());
}

DerivationSpace rep_kernel(const DerivationSpace& d) {
  const std::size_t nd = d.dim();
  QMatrix sys(d.q * d.q, nd);
  for (std::size_t a = 0; a < nd; ++a)
    for (std::size_t i = 0; i < d.q; ++i)
      for (std::size_t j = 0; j < d.q; ++j)
        sys.at(i * d.q + j, a) = d.basis[a].at(i, j);
  Subspace ker = kernel(sys);
  return rebuild(d, ker.basis());
}

bool satisfies_leibniz(const DerivationSpace& d, const QMatrix& xi) {
  const std::size_t m = d.n - 1;
  const StructureTensor& c = d.m_tensor;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      // xi(b_i b_j)
      std::vector<Rational> lhs(m);
      for (std::size_t l = 0; l < m; ++l)
        if (c[i][j][l] != 0)
          for (std::size_t k = 0; k < m; ++k) lhs[k] += c[i][j][l] * xi.at(k, l);
      // xi(b_i) b_j + b_i xi(b_j)
      std::vector<Rational> rhs(m);
      for (std::size_t l = 0; l < m; ++l) {
        if (xi.at(l, i) != 0)
          for (std::size_t k = 0; k < m; ++k)
            rhs[k] += xi.at(l, i) * c[l][j][k];
        if (xi.at(l, j) != 0)
          for (std::size_t k = 0; k < m; ++k)
            rhs[k] += xi.at(l, j) * c[i][l][k];
      }
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace artinder
