#include "artinder/nullindex.hpp"

#include <cassert>
#include <map>
#include <random>

#include "artinder/errors.hpp"
#include "artinder/lie.hpp"

namespace artinder {

namespace {

// Polynomial in formal variables t_1..t_k with NumberField coefficients;
// only what the generic-eigenvector expansion needs.
struct FPoly {
  const NumberField* f;
  std::map<Monomial, NumberField::Elem, GrlexGreater> terms;

  void add(const Monomial& m, const NumberField::Elem& c) {
    if (f->is_zero(c)) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
      it->second = f->add(it->second, c);
      if (f->is_zero(it->second)) terms.erase(it);
    }
  }

  FPoly mul(const FPoly& o) const {
    FPoly r{f, {}};
    for (const auto& [m1, c1] : terms)
      for (const auto& [m2, c2] : o.terms)
        r.add(mono_mul(m1, m2), f->mul(c1, c2));
    return r;
  }
};

}  // namespace

bool p_vanishes_on_eigenspace(
    const MultiPoly& p, const NumberField& f,
    const std::vector<std::vector<NumberField::Elem>>& eigenbasis) {
  assert(!eigenbasis.empty());
  const std::size_t q = p.nvars();
  const std::size_t k = eigenbasis.size();
  // v_i = sum_j eigenbasis[j][i] t_j as linear FPoly forms.
  std::vector<FPoly> v(q, FPoly{&f, {}});
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Monomial t(k, 0);
      t[j] = 1;
      v[i].add(t, eigenbasis[j][i]);
    }
  FPoly total{&f, {}};
  for (const auto& [mono, coeff] : p.terms()) {
    FPoly term{&f, {}};
    term.add(Monomial(k, 0), f.from_rational(coeff));
    for (std::size_t i = 0; i < q; ++i)
      for (int e = 0; e < mono[i]; ++e) term = term.mul(v[i]);
    for (const auto& [m, c] : term.terms) total.add(m, c);
  }
  return total.terms.empty();
}

bool differential_identity_check(const IndexPolynomial& p, const QMatrix& rho) {
  const std::size_t q = p.poly.nvars();
  assert(rho.rows() == q && rho.cols() == q);
  MultiPoly total(q);
  for (std::size_t i = 0; i < q; ++i) {
    MultiPoly dpi = p.poly.derivative(i);
    if (dpi.is_zero()) continue;
    // (rho v)_i = sum_j rho[i][j] v_j
    MultiPoly rv(q);
    for (std::size_t j = 0; j < q; ++j)
      if (rho.at(i, j) != 0)
        rv = rv + MultiPoly::variable(q, j) * rho.at(i, j);
    total = total + dpi * rv;
  }
  return total.is_zero();
}

bool socle_derivative_identity(const DerivationSpace& d, const QMatrix& xi) {
  const std::size_t m = d.n - 1;
  const std::size_t r = d.adapted.strata_sizes.size();
  const StructureTensor& c = d.m_tensor;
  // Generic element of m with one indeterminate per adapted basis vector.
  std::vector<MultiPoly> gen(m, MultiPoly(m));
  for (std::size_t i = 0; i < m; ++i) gen[i] = MultiPoly::variable(m, i);
  // xi(m): linear coordinates.
  std::vector<MultiPoly> xim(m, MultiPoly(m));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l)
      if (xi.at(k, l) != 0)
        xim[k] = xim[k] + MultiPoly::variable(m, l) * xi.at(k, l);
  if (r == 1) {
    for (const auto& comp : xim)
      if (!comp.is_zero()) return false;
    return true;
  }
  auto tensor_mul = [&](const std::vector<MultiPoly>& a,
                        const std::vector<MultiPoly>& b) {
    std::vector<MultiPoly> out(m, MultiPoly(m));
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[j].is_zero()) continue;
        MultiPoly prod = a[i] * b[j];
        for (std::size_t k = 0; k < m; ++k)
          if (c[i][j][k] != 0) out[k] = out[k] + prod * c[i][j][k];
      }
    }
    return out;
  };
  std::vector<MultiPoly> power = gen;
  for (std::size_t step = 2; step <= r - 1; ++step)
    power = tensor_mul(power, gen);
  std::vector<MultiPoly> result = tensor_mul(power, xim);
  for (const auto& comp : result)
    if (!comp.is_zero()) return false;
  return true;
}

namespace {

struct SearchState {
  const DerivationSpace& d;
  const IndexPolynomial& p;
  std::size_t tried = 0;
  std::size_t unfactored = 0;

  // True when a NotFull witness was verified for this candidate.
  std::optional<NullIndexVerdict::Witness> test(
      const std::vector<Rational>& coeffs) {
    QMatrix xi = d.combine(coeffs);
    QMatrix rho = induced_rep(d, xi);
    ++tried;
    if (rho.is_zero()) return std::nullopt;  // Spec = {0}, V_0 = V, P != 0
    Factorization fac = factor_bounded(char_poly(rho));
    if (!fac.complete()) {
      ++unfactored;
      return std::nullopt;
    }
    for (const auto& [factor, mult] : fac.factors) {
      NumberField field(factor);
      NumberField::Elem lambda = field.from_poly(UniPoly::term(Rational(1), 1));
      NFMatrix m(d.q, std::vector<NumberField::Elem>(d.q));
      for (std::size_t i = 0; i < d.q; ++i)
        for (std::size_t j = 0; j < d.q; ++j) {
          m[i][j] = field.from_rational(rho.at(i, j));
          if (i == j) m[i][j] = field.sub(m[i][j], lambda);
        }
      auto basis = nf_kernel(field, m);
      assert(!basis.empty());
      if (p_vanishes_on_eigenspace(p.poly, field, basis))
        return NullIndexVerdict::Witness{coeffs, factor, basis};
    }
    return std::nullopt;
  }
};

// Re-derive everything the witness claims, independently of the search.
bool verify_witness(const DerivationSpace& d, const IndexPolynomial& p,
                    const NullIndexVerdict::Witness& w) {
  QMatrix rho = induced_rep(d, d.combine(w.derivation_coeffs));
  NumberField field(w.eigenvalue_min_poly);
  NumberField::Elem lambda = field.from_poly(UniPoly::term(Rational(1), 1));
  if (w.eigenbasis.empty()) return false;
  for (const auto& vec : w.eigenbasis) {
    // (rho - lambda I) vec = 0
    for (std::size_t i = 0; i < d.q; ++i) {
      NumberField::Elem acc = field.neg(field.mul(lambda, vec[i]));
      for (std::size_t j = 0; j < d.q; ++j)
        acc = field.add(acc, field.mul(vec[j], field.from_rational(rho.at(i, j))));
      if (!field.is_zero(acc)) return false;
    }
  }
  return p_vanishes_on_eigenspace(p.poly, field, w.eigenbasis);
}

}  // namespace

NullIndexVerdict check_full_null_index(const LocalAlgebra& a,
                                       const DerivationSpace& d,
                                       const IndexPolynomial& p,
                                       const NullIndexConfig& cfg) {
  if (!is_gorenstein(a)) throw NotGorenstein("full-null-index check");
  NullIndexVerdict v;

  // (1) dim V = 1: P_A = x^r after normalization, nonzero off 0, and every
  // eigenvector spans V.
  if (d.q == 1) {
    v.kind = NullIndexVerdict::Kind::Full;
    v.certificate = NullIndexVerdict::Certificate::TrivialV;
    return v;
  }

  // (2) scalar rho-image: every nonzero vector is an eigenvector and P_A is
  // not the zero polynomial.
  std::vector<QMatrix> rho_basis;
  for (std::size_t i = 0; i < d.dim(); ++i)
    rho_basis.push_back(induced_rep(d, i));
  if (is_scalar_image(rho_basis)) {
    v.kind = NullIndexVerdict::Kind::Full;
    v.certificate = NullIndexVerdict::Certificate::ScalarImage;
    return v;
  }

  // (3) witness search over basis elements and small integer combinations.
  SearchState st{d, p};
  auto finish_not_full = [&](NullIndexVerdict::Witness w) {
    if (!verify_witness(d, p, w))
      throw Error("null-index witness failed re-verification");
    v.kind = NullIndexVerdict::Kind::NotFull;
    v.witness = std::move(w);
    v.samples_tried = st.tried;
    v.unfactored_cases = st.unfactored;
    return v;
  };
  const std::size_t nd = d.dim();
  for (std::size_t i = 0; i < nd; ++i) {
    std::vector<Rational> coeffs(nd);
    coeffs[i] = 1;
    if (auto w = st.test(coeffs)) return finish_not_full(std::move(*w));
  }
  // Subsets of size 2..max_combo with nonzero coefficients in
  // [-range, range], first coefficient positive.
  std::vector<int> nonzero;
  for (int c = -cfg.coeff_range; c <= cfg.coeff_range; ++c)
    if (c != 0) nonzero.push_back(c);
  std::vector<std::size_t> subset;
  auto search_subsets = [&](auto&& self, std::size_t start) -> std::optional<NullIndexVerdict> {
    if (subset.size() >= 2) {
      std::vector<std::size_t> pick(subset.size(), 0);
      for (;;) {
        if (nonzero[pick[0]] > 0) {
          std::vector<Rational> coeffs(nd);
          for (std::size_t k = 0; k < subset.size(); ++k)
            coeffs[subset[k]] = nonzero[pick[k]];
          if (auto w = st.test(coeffs)) return finish_not_full(std::move(*w));
        }
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == nonzero.size()) {
          pick[pos] = 0;
          ++pos;
        }
        if (pos == pick.size()) break;
      }
    }
    if (subset.size() == cfg.max_combo) return std::nullopt;
    for (std::size_t i = start; i < nd; ++i) {
      subset.push_back(i);
      if (auto res = self(self, i + 1)) return res;
      subset.pop_back();
    }
    return std::nullopt;
  };
  if (auto res = search_subsets(search_subsets, 0)) return *res;

  // (4) random rational combinations.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> num(-2 * cfg.coeff_range,
                                         2 * cfg.coeff_range);
  std::uniform_int_distribution<int> den(1, 3);
  for (std::size_t s = 0; s < cfg.sample_count; ++s) {
    std::vector<Rational> coeffs(nd);
    bool all_zero = true;
    for (auto& c : coeffs) {
      c = Rational(num(rng)) / Rational(den(rng));
      if (c != 0) all_zero = false;
    }
    if (all_zero) continue;
    if (auto w = st.test(coeffs)) return finish_not_full(std::move(*w));
  }

  v.kind = NullIndexVerdict::Kind::Unknown;
  v.samples_tried = st.tried;
  v.unfactored_cases = st.unfactored;
  return v;
}

NullIndexVerdict check_full_null_index(const LocalAlgebra& a,
                                       const NullIndexConfig& cfg) {
  DerivationSpace d = derivation_space(a);
  IndexPolynomial p = index_polynomial(a, d.adapted);
  return check_full_null_index(a, d, p, cfg);
}

std::string NullIndexVerdict::describe() const {
  switch (kind) {
    case Kind::Full:
      return certificate == Certificate::TrivialV ? "Full(trivial-V)"
                                                  : "Full(scalar-image)";
    case Kind::NotFull:
      return "NotFull(eigenvalue min poly " +
             witness->eigenvalue_min_poly.to_string("w") + ")";
    case Kind::Unknown:
      return "Unknown(samples=" + std::to_string(samples_tried) +
             ", unfactored=" + std::to_string(unfactored_cases) + ")";
  }
  return "?";
}

}  // namespace artinder
