#include <doctest.h>

#include <random>

#include "artinder/errors.hpp"
#include "artinder/numberfield.hpp"

using namespace artinder;

namespace {

NumberField::Elem random_elem(const NumberField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  NumberField::Elem e(f.degree());
  for (auto& c : e) c = Rational(num(rng)) / Rational(den(rng));
  return e;
}

}  // namespace

TEST_CASE("degree-1 field is Q") {
  NumberField f(UniPoly({-3, 1}));  // x - 3: residue of x is 3
  CHECK(f.degree() == 1);
  CHECK(f.generator() == NumberField::Elem{3});
  CHECK(f.mul(f.from_rational(2), f.from_rational(Rational(1) / 2)) == f.one());
}

TEST_CASE("sqrt(2) arithmetic") {
  NumberField f(UniPoly({-2, 0, 1}));  // x^2 - 2
  auto w = f.generator();
  CHECK(f.mul(w, w) == f.from_rational(2));
  // 1/(1+w) = w - 1 since (1+w)(w-1) = w^2 - 1 = 1.
  auto inv = f.inv(f.add(f.one(), w));
  CHECK(inv == f.sub(w, f.one()));
}

TEST_CASE("field axioms under random sampling") {
  for (const UniPoly& mod :
       {UniPoly({-2, 0, 1}), UniPoly({-2, 0, 0, 1}), UniPoly({2, 0, 0, 0, 1}),
        UniPoly({1, 1, 1})}) {
    NumberField f(mod);
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_elem(f, rng);
      auto b = random_elem(f, rng);
      auto c = random_elem(f, rng);
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (!f.is_zero(a)) {
        CHECK(f.mul(f.mul(a, b), f.inv(a)) == b);  // (a*b)*a^-1 = b
        CHECK(f.div(b, a) == f.mul(b, f.inv(a)));
      }
    }
  }
}

TEST_CASE("reducible modulus is detected on inversion") {
  NumberField f(UniPoly({-1, 0, 1}));  // x^2 - 1 = (x-1)(x+1)
  auto zero_divisor = f.sub(f.generator(), f.one());
  CHECK_THROWS_AS((void)f.inv(zero_divisor), ModulusReducible);
}

TEST_CASE("nf_kernel over an extension") {
  // Eigenvectors of [[0,-1],[1,0]] for eigenvalue i over Q[w]/(w^2+1):
  // kernel of [[-w,-1],[1,-w]].
  NumberField f(UniPoly({1, 0, 1}));
  auto w = f.generator();
  NFMatrix m(2, std::vector<NumberField::Elem>(2));
  m[0][0] = f.neg(w);
  m[0][1] = f.from_rational(-1);
  m[1][0] = f.one();
  m[1][1] = f.neg(w);
  auto basis = nf_kernel(f, m);
  REQUIRE(basis.size() == 1);
  // Canonical free-column normalization: unit in the free coordinate.
  CHECK(basis[0][1] == f.one());
  CHECK(basis[0][0] == w);
  // Check it really is a null vector.
  for (std::size_t i = 0; i < 2; ++i) {
    auto acc = f.zero();
    for (std::size_t j = 0; j < 2; ++j)
      acc = f.add(acc, f.mul(m[i][j], basis[0][j]));
    CHECK(f.is_zero(acc));
  }
}

TEST_CASE("nf_kernel of an invertible matrix is trivial") {
  NumberField f(UniPoly({-2, 0, 1}));
  NFMatrix m(2, std::vector<NumberField::Elem>(2));
  m[0][0] = f.generator();
  m[0][1] = f.one();
  m[1][0] = f.zero();
  m[1][1] = f.generator();
  CHECK(nf_kernel(f, m).empty());
}
