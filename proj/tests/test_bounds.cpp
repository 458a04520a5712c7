#include <doctest.h>

#include "artinder/bounds.hpp"
#include "artinder/lie.hpp"
#include "artinder/parser.hpp"
#include "artinder/staircase.hpp"

using namespace artinder;

namespace {

struct Prepared {
  Presentation pres;
  GroebnerBasis gb;
  LocalAlgebra a;
  DerivationSpace d;
};

Prepared prep(const std::string& text) {
  Presentation p = parse_presentation(text);
  GroebnerBasis g = buchberger(p);
  LocalAlgebra a = from_presentation(p);
  DerivationSpace d = derivation_space(a);
  return {std::move(p), std::move(g), std::move(a), std::move(d)};
}

const char* kQuadrics =
    "vars x1 x2 x3\nrel x1*x2\nrel x1*x3\nrel x2*x3\n"
    "rel x1^2 - x2^2\nrel x2^2 - x3^2\n";

}  // namespace

TEST_CASE("perepechko bound on the named algebras") {
  Prepared q = prep(kQuadrics);
  BoundReport b = check_perepechko(q.a, q.d);
  CHECK(b.lhs == 7);
  CHECK(b.rhs == 3);
  CHECK(b.holds);

  Prepared sz = prep(
      "vars x y z\nrel x^2\nrel x*y\nrel x*z\nrel y^2\nrel y*z\nrel z^2\n");
  b = check_perepechko(sz.a, sz.d);
  CHECK(b.lhs == 9);
  CHECK(b.rhs == 9);  // equality: (n-1)^2 vs (n-1)*(n-1)
  CHECK(b.holds);

  Prepared chain = prep("vars t\nrel t^6\n");
  b = check_perepechko(chain.a, chain.d);
  CHECK(b.lhs == 5);
  CHECK(b.rhs == 1);
  CHECK(b.holds);
}

TEST_CASE("yau bound: graded cases hold, non-graded is not applicable") {
  Prepared chain = prep("vars t\nrel t^5\n");
  BoundReport b = check_yau(chain.a, chain.d);
  CHECK(b.applicable);
  CHECK(b.lhs == 4);
  CHECK(b.rhs == 4);  // equality for chains
  CHECK(b.holds);

  Prepared g3 = prep("vars t s\nrel t*s\nrel t^3 - s^3\n");
  b = check_yau(g3.a, g3.d);
  CHECK(b.applicable);
  CHECK(b.rhs == 5);
  CHECK(b.holds);

  Prepared g2 = prep("vars t s\nrel t*s\nrel t^3 - s^2\n");
  b = check_yau(g2.a, g2.d);
  CHECK_FALSE(b.applicable);  // t^3 - s^2 is inhomogeneous
}

TEST_CASE("schulze criterion numbers on the named algebras") {
  // Two minimal generators: dim(I/pI) = 2 < 2 + 2 - 1.
  Prepared g2 = prep("vars t s\nrel t*s\nrel t^3 - s^2\n");
  BoundReport b = schulze_criterion(g2.pres, g2.gb);
  CHECK(b.lhs == 2);
  CHECK(b.rhs == 3);
  CHECK(b.holds);

  // Five minimal quadric generators: 5 >= 3 + 2 - 1, silent.
  Prepared q = prep(kQuadrics);
  b = schulze_criterion(q.pres, q.gb);
  CHECK(b.lhs == 5);
  CHECK(b.rhs == 4);
  CHECK_FALSE(b.holds);

  // Principal ideal: 1 < 1 + n - 1.
  Prepared chain = prep("vars t\nrel t^6\n");
  b = schulze_criterion(chain.pres, chain.gb);
  CHECK(b.lhs == 1);
  CHECK(b.rhs == 6);
  CHECK(b.holds);
}

TEST_CASE("schulze count ignores redundant generators") {
  // Same ideal with a redundant third generator t^2*s = t*(t*s).
  Prepared lean = prep("vars t s\nrel t*s\nrel t^3 - s^2\n");
  Prepared fat = prep("vars t s\nrel t*s\nrel t^3 - s^2\nrel t^2*s\n");
  BoundReport a = schulze_criterion(lean.pres, lean.gb);
  BoundReport b = schulze_criterion(fat.pres, fat.gb);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
}

TEST_CASE("schulze hypothesis implies solvable over the monomial corpus") {
  for (const Staircase& s : enumerate_staircases(6, 3)) {
    if (s.size() < 2) continue;
    Presentation p = s.to_presentation();
    GroebnerBasis g = buchberger(p);
    LocalAlgebra a = from_presentation(p);
    BoundReport b = schulze_criterion(p, g);
    if (!b.applicable || !b.holds) continue;
    DerivationSpace d = derivation_space(a);
    MatrixLieAlgebra l = MatrixLieAlgebra::from_span(a.dim() - 1, d.basis);
    CHECK(is_solvable(l));
  }
}

TEST_CASE("christophersen records for the named algebras") {
  Prepared chain = prep("vars t\nrel t^4\n");
  ChristophersenRecord r = christophersen_check(chain.a, chain.d);
  CHECK(r.bound_holds);
  CHECK(r.equality);
  CHECK(r.is_chain);

  Prepared sz = prep(
      "vars x y z\nrel x^2\nrel x*y\nrel x*z\nrel y^2\nrel y*z\nrel z^2\n");
  r = christophersen_check(sz.a, sz.d);
  CHECK(r.dim_der == 9);
  CHECK(r.bound_holds);
  CHECK_FALSE(r.equality);
  CHECK_FALSE(r.is_chain);

  Prepared q = prep(kQuadrics);
  r = christophersen_check(q.a, q.d);
  CHECK(r.dim_der == 7);
  CHECK(r.n == 5);
  CHECK(r.bound_holds);
  CHECK_FALSE(r.equality);
}

TEST_CASE("smallest chain algebra: dual numbers") {
  Prepared dual = prep("vars t\nrel t^2\n");
  CHECK(dual.a.dim() == 2);
  CHECK(dual.d.dim() == 1);
  ChristophersenRecord r = christophersen_check(dual.a, dual.d);
  CHECK(r.equality);
  CHECK(r.is_chain);
}
