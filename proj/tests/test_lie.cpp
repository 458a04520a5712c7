#include <doctest.h>

#include "artinder/derivations.hpp"
#include "artinder/errors.hpp"
#include "artinder/lie.hpp"
#include "artinder/parser.hpp"

using namespace artinder;

namespace {

MatrixLieAlgebra der_lie(const char* text) {
  LocalAlgebra a = from_presentation(parse_presentation(text));
  DerivationSpace d = derivation_space(a);
  return MatrixLieAlgebra::from_span(a.dim() - 1, d.basis);
}

const char* kQuadrics =
    "vars x1 x2 x3\nrel x1*x2\nrel x1*x3\nrel x2*x3\n"
    "rel x1^2 - x2^2\nrel x2^2 - x3^2\n";

}  // namespace

TEST_CASE("bracket basics") {
  QMatrix e(2, 2), f(2, 2), h(2, 2);
  e.at(0, 1) = 1;
  f.at(1, 0) = 1;
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  CHECK(bracket(e, f) == h);
  CHECK(bracket(e, e).is_zero());
  // Jacobi identity.
  QMatrix j = bracket(e, bracket(f, h)) + bracket(f, bracket(h, e)) +
              bracket(h, bracket(e, f));
  CHECK(j.is_zero());
}

TEST_CASE("sl2: not solvable, Killing form nondegenerate") {
  QMatrix e(2, 2), f(2, 2), h(2, 2);
  e.at(0, 1) = 1;
  f.at(1, 0) = 1;
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  MatrixLieAlgebra sl2 = MatrixLieAlgebra::from_span(2, {e, f, h});
  CHECK(sl2.dim() == 3);
  SeriesResult ds = derived_series(sl2);
  CHECK_FALSE(ds.reaches_zero);
  CHECK(ds.stabilized.dim() == 3);  // perfect
  CHECK_FALSE(is_solvable(sl2));
  CHECK_FALSE(cartan_solvable(sl2));
  CHECK(killing_gram(sl2).rank() == 3);
}

TEST_CASE("upper triangular 2x2: solvable but not nilpotent") {
  QMatrix a(2, 2), b(2, 2), c(2, 2);
  a.at(0, 0) = 1;
  b.at(1, 1) = 1;
  c.at(0, 1) = 1;
  MatrixLieAlgebra t2 = MatrixLieAlgebra::from_span(2, {a, b, c});
  CHECK(is_solvable(t2));
  CHECK(cartan_solvable(t2));
  CHECK_FALSE(is_nilpotent_lie(t2));
  // Strictly upper triangular part is nilpotent.
  MatrixLieAlgebra n2 = MatrixLieAlgebra::from_span(2, {c});
  CHECK(is_nilpotent_lie(n2));
}

TEST_CASE("from_span rejects non-closed spans") {
  QMatrix e(2, 2), f(2, 2);
  e.at(0, 1) = 1;
  f.at(1, 0) = 1;  // [e, f] = h outside span{e, f}
  CHECK_THROWS_AS((void)MatrixLieAlgebra::from_span(2, {e, f}), Error);
  MatrixLieAlgebra closed = MatrixLieAlgebra::close_under_bracket(2, {e, f});
  CHECK(closed.dim() == 3);
}

TEST_CASE("derivation algebras are bracket-closed") {
  for (const char* text :
       {"vars t\nrel t^5\n", "vars t s\nrel t*s\nrel t^3 - s^2\n",
        "vars t s\nrel t*s\nrel t^3 - s^3\n", kQuadrics}) {
    CHECK_NOTHROW((void)der_lie(text));
  }
}

TEST_CASE("chain-algebra derivations: solvable, derived dims 3 2 0") {
  MatrixLieAlgebra l = der_lie("vars t\nrel t^4\n");
  SeriesResult ds = derived_series(l);
  CHECK(ds.dims == std::vector<std::size_t>{3, 2, 0});
  CHECK(ds.reaches_zero);
  CHECK(cartan_solvable(l));
}

TEST_CASE("curve algebras: derivations solvable, Cartan agrees") {
  for (const char* text : {"vars t s\nrel t*s\nrel t^3 - s^2\n",
                           "vars t s\nrel t*s\nrel t^3 - s^3\n"}) {
    MatrixLieAlgebra l = der_lie(text);
    CHECK(is_solvable(l));
    CHECK(cartan_solvable(l));
  }
}

TEST_CASE("five quadrics: Der not solvable; series stops at a 6-dim term") {
  MatrixLieAlgebra l = der_lie(kQuadrics);
  CHECK(l.dim() == 7);
  SeriesResult ds = derived_series(l);
  CHECK_FALSE(ds.reaches_zero);
  // [Der, Der] drops exactly the trace part and is then perfect:
  // the stabilized derived subalgebra has dimension 6, not 3 -- the
  // 3-dimensional simple part only splits off in the V-image (below).
  CHECK(ds.dims == std::vector<std::size_t>{7, 6});
  CHECK(ds.stabilized.dim() == 6);
  CHECK_FALSE(cartan_solvable(l));
}

TEST_CASE("five quadrics: V-image contains so3") {
  LocalAlgebra a = from_presentation(parse_presentation(kQuadrics));
  DerivationSpace d = derivation_space(a);
  std::vector<QMatrix> reps;
  for (std::size_t i = 0; i < d.dim(); ++i) reps.push_back(induced_rep(d, i));
  MatrixLieAlgebra image = MatrixLieAlgebra::close_under_bracket(3, reps);
  CHECK(image.dim() == 4);  // scalars + rotations
  SeriesResult ds = derived_series(image);
  CHECK_FALSE(ds.reaches_zero);
  CHECK(ds.stabilized.dim() == 3);
  // The stabilized part is simple of rotation type: antisymmetric matrices
  // with nondegenerate Killing form.
  for (const QMatrix& m : ds.stabilized.basis())
    CHECK(m.transpose() == m * Rational(-1));
  CHECK(killing_gram(ds.stabilized).rank() == 3);
  CHECK_FALSE(is_nilpotent_lie(ds.stabilized));
}

TEST_CASE("lower central series of a solvable non-nilpotent algebra") {
  MatrixLieAlgebra l = der_lie("vars t\nrel t^4\n");
  SeriesResult lc = lower_central_series(l);
  CHECK_FALSE(lc.reaches_zero);  // t d/dt acts with nonzero eigenvalues
  CHECK(lc.stabilized.dim() == 2);
}

TEST_CASE("scalar image detection") {
  std::vector<QMatrix> scalars{QMatrix::identity(3) * Rational(2),
                               QMatrix::identity(3) * (Rational(-1) / 3)};
  std::vector<Rational> s;
  CHECK(is_scalar_image(scalars, &s));
  CHECK(s == std::vector<Rational>{2, Rational(-1) / 3});
  QMatrix off(3, 3);
  off.at(0, 1) = 1;
  scalars.push_back(off);
  CHECK_FALSE(is_scalar_image(scalars));
}

TEST_CASE("solvability passes to computed subalgebras") {
  LocalAlgebra a =
      from_presentation(parse_presentation("vars t s\nrel t*s\nrel t^3 - s^2\n"));
  DerivationSpace d = derivation_space(a);
  MatrixLieAlgebra full = MatrixLieAlgebra::from_span(a.dim() - 1, d.basis);
  REQUIRE(is_solvable(full));
  for (const DerivationSpace& sub : {socle_annihilator(d), rep_kernel(d)}) {
    MatrixLieAlgebra l = MatrixLieAlgebra::from_span(a.dim() - 1, sub.basis);
    CHECK(is_solvable(l));
    CHECK(cartan_solvable(l));
  }
}
