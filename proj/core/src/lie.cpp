#include "artinder/lie.hpp"

#include <cassert>

#include "artinder/errors.hpp"

namespace artinder {

QMatrix bracket(const QMatrix& x, const QMatrix& y) {
  return x * y - y * x;
}

MatrixLieAlgebra MatrixLieAlgebra::make(std::size_t ambient,
                                        const Subspace& sp) {
  MatrixLieAlgebra l;
  l.ambient_ = ambient;
  l.span_ = sp;
  for (const auto& row : sp.basis())
    l.basis_.push_back(QMatrix::from_vector(ambient, ambient, row));
  return l;
}

MatrixLieAlgebra MatrixLieAlgebra::from_span(
    std::size_t ambient, const std::vector<QMatrix>& matrices) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : matrices) {
    assert(m.rows() == ambient && m.cols() == ambient);
    rows.push_back(m.vectorized());
  }
  Subspace sp = Subspace::span(ambient * ambient, rows);
  MatrixLieAlgebra l = make(ambient, sp);
  for (std::size_t i = 0; i < l.basis_.size(); ++i)
    for (std::size_t j = i + 1; j < l.basis_.size(); ++j)
      if (!l.contains(bracket(l.basis_[i], l.basis_[j])))
        throw Error("span is not closed under bracket");
  return l;
}

MatrixLieAlgebra MatrixLieAlgebra::close_under_bracket(
    std::size_t ambient, const std::vector<QMatrix>& matrices) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : matrices) rows.push_back(m.vectorized());
  Subspace sp = Subspace::span(ambient * ambient, rows);
  for (;;) {
    MatrixLieAlgebra l = make(ambient, sp);
    std::vector<std::vector<Rational>> next = sp.basis();
    for (std::size_t i = 0; i < l.basis_.size(); ++i)
      for (std::size_t j = i + 1; j < l.basis_.size(); ++j)
        next.push_back(bracket(l.basis_[i], l.basis_[j]).vectorized());
    Subspace sp2 = Subspace::span(ambient * ambient, next);
    if (sp2.dim() == sp.dim()) return l;
    sp = sp2;
  }
}

bool MatrixLieAlgebra::contains(const QMatrix& x) const {
  return span_.contains(x.vectorized());
}

std::vector<Rational> MatrixLieAlgebra::coordinates(const QMatrix& x) const {
  // Basis rows are RREF, so coordinates read off at the pivot positions.
  const std::size_t nn = ambient_ * ambient_;
  std::vector<Rational> v = x.vectorized();
  std::vector<Rational> coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& row = span_.basis()[i];
    std::size_t piv = 0;
    while (piv < nn && row[piv] == 0) ++piv;
    coords[i] = v[piv];
    for (std::size_t j = 0; j < nn; ++j) v[j] -= coords[i] * row[j];
  }
  for (const auto& rest : v) {
    if (rest != 0) throw Error("matrix outside the span");
  }
  return coords;
}

MatrixLieAlgebra MatrixLieAlgebra::derived() const {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      rows.push_back(bracket(basis_[i], basis_[j]).vectorized());
  return make(ambient_, Subspace::span(ambient_ * ambient_, rows));
}

Subspace MatrixLieAlgebra::bracket_span(const MatrixLieAlgebra& other) const {
  std::vector<std::vector<Rational>> rows;
  for (const auto& x : basis_)
    for (const auto& y : other.basis())
      rows.push_back(bracket(x, y).vectorized());
  return Subspace::span(ambient_ * ambient_, rows);
}

SeriesResult derived_series(const MatrixLieAlgebra& l) {
  SeriesResult out{{l.dim()}, false, l};
  MatrixLieAlgebra cur = l;
  for (;;) {
    MatrixLieAlgebra next = cur.derived();
    if (next.dim() == cur.dim()) {
      out.reaches_zero = cur.dim() == 0;
      out.stabilized = cur;
      return out;
    }
    out.dims.push_back(next.dim());
    cur = next;
  }
}

bool is_solvable(const MatrixLieAlgebra& l) {
  return derived_series(l).reaches_zero;
}

SeriesResult lower_central_series(const MatrixLieAlgebra& l) {
  SeriesResult out{{l.dim()}, false, l};
  MatrixLieAlgebra cur = l;
  for (;;) {
    Subspace sp = l.bracket_span(cur);
    MatrixLieAlgebra next = MatrixLieAlgebra::from_span(
        l.ambient(), [&] {
          std::vector<QMatrix> ms;
          for (const auto& row : sp.basis())
            ms.push_back(QMatrix::from_vector(l.ambient(), l.ambient(), row));
          return ms;
        }());
    if (next.dim() == cur.dim()) {
      out.reaches_zero = cur.dim() == 0;
      out.stabilized = cur;
      return out;
    }
    out.dims.push_back(next.dim());
    cur = next;
  }
}

bool is_nilpotent_lie(const MatrixLieAlgebra& l) {
  return lower_central_series(l).reaches_zero;
}

namespace {

// ad matrices of L's basis, as dim x dim matrices in basis coordinates.
std::vector<QMatrix> ad_basis(const MatrixLieAlgebra& l) {
  const std::size_t d = l.dim();
  std::vector<QMatrix> ads;
  for (std::size_t i = 0; i < d; ++i) {
    QMatrix ad(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> col =
          l.coordinates(bracket(l.basis()[i], l.basis()[j]));
      for (std::size_t k = 0; k < d; ++k) ad.at(k, j) = col[k];
    }
    ads.push_back(std::move(ad));
  }
  return ads;
}

}  // namespace

bool cartan_solvable(const MatrixLieAlgebra& l) {
  std::vector<QMatrix> ads = ad_basis(l);
  MatrixLieAlgebra der = l.derived();
  for (const auto& y : der.basis()) {
    std::vector<Rational> yc = l.coordinates(y);
    QMatrix ad_y(l.dim(), l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i)
      if (yc[i] != 0) ad_y = ad_y + ads[i] * yc[i];
    for (const auto& ad_x : ads)
      if ((ad_x * ad_y).trace() != 0) return false;
  }
  return true;
}

QMatrix killing_gram(const MatrixLieAlgebra& l) {
  std::vector<QMatrix> ads = ad_basis(l);
  const std::size_t d = l.dim();
  QMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      g.at(i, j) = (ads[i] * ads[j]).trace();
  return g;
}

bool is_scalar_image(const std::vector<QMatrix>& basis,
                     std::vector<Rational>* scalars) {
  std::vector<Rational> out;
  for (const auto& m : basis) {
    Rational s;
    if (!m.is_scalar(&s)) return false;
    out.push_back(s);
  }
  if (scalars) *scalars = std::move(out);
  return true;
}

}  // namespace artinder
