#include <doctest.h>

#include <algorithm>
#include <set>

#include "artinder/algebra.hpp"
#include "artinder/staircase.hpp"

using namespace artinder;

namespace {

// Brute-force oracle: grow order ideals monomial by monomial with a global
// dedup set, no cleverness shared with the production enumerator.
std::set<std::set<Monomial>> brute_force_order_ideals(std::size_t max_dim,
                                                      std::size_t k) {
  std::vector<Monomial> candidates;
  Monomial m(k, 0);
  for (;;) {
    if (total_degree(m) > 0 && total_degree(m) < static_cast<int>(max_dim))
      candidates.push_back(m);
    std::size_t pos = 0;
    while (pos < k && ++m[pos] == static_cast<int>(max_dim)) {
      m[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::set<std::set<Monomial>> found{{Monomial(k, 0)}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::set<Monomial>> next = found;
    for (const auto& ideal : found) {
      if (ideal.size() == max_dim) continue;
      for (const Monomial& c : candidates) {
        if (ideal.count(c)) continue;
        bool closed = true;
        for (std::size_t i = 0; i < k && closed; ++i) {
          if (c[i] == 0) continue;
          Monomial down = c;
          down[i] -= 1;
          if (!ideal.count(down)) closed = false;
        }
        if (!closed) continue;
        auto bigger = ideal;
        bigger.insert(c);
        if (next.insert(bigger).second) grew = true;
      }
    }
    found = std::move(next);
  }
  return found;
}

}  // namespace

TEST_CASE("enumeration counts match the brute-force oracle") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t max_dim = 1; max_dim <= 6; ++max_dim) {
      auto oracle = brute_force_order_ideals(max_dim, k);
      auto fast = enumerate_staircases(max_dim, k, /*dedup=*/false);
      CHECK(fast.size() == oracle.size());
      // Same sets, not just same count.
      for (const Staircase& s : fast) CHECK(oracle.count(s.monomials) == 1);
    }
}

TEST_CASE("known small counts") {
  // Size-3, two variables: the chain {1,t,t^2} and the square-free {1,t,s}.
  auto size3 = enumerate_staircases(3, 2);
  std::size_t exactly3 = 0;
  for (const auto& s : size3)
    if (s.size() == 3) ++exactly3;
  CHECK(exactly3 == 2);

  // Size-4, two variables: partitions of 4 give 5 pre-dedup, 3 post-dedup.
  auto pre = enumerate_staircases(4, 2, /*dedup=*/false);
  auto post = enumerate_staircases(4, 2);
  auto count_size = [](const std::vector<Staircase>& v, std::size_t n) {
    std::size_t c = 0;
    for (const auto& s : v)
      if (s.size() == n) ++c;
    return c;
  };
  CHECK(count_size(pre, 4) == 5);
  CHECK(count_size(post, 4) == 3);
  // Cumulative post-dedup rows of sizes 2..4: 1 + 2 + 3.
  CHECK(post.size() - count_size(post, 1) == 6);
}

TEST_CASE("canonical keys identify permuted staircases") {
  Staircase a{2, {{0, 0}, {1, 0}, {2, 0}}};  // 1, t, t^2
  Staircase b{2, {{0, 0}, {0, 1}, {0, 2}}};  // 1, s, s^2
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a.is_canonical() != b.is_canonical());  // exactly one representative
  Staircase c{2, {{0, 0}, {1, 0}, {0, 1}}};
  CHECK(c.canonical_key() != a.canonical_key());
}

TEST_CASE("presentations rebuild the staircase as standard monomials") {
  for (const Staircase& s : enumerate_staircases(5, 2)) {
    if (s.size() < 2) continue;
    Presentation p = s.to_presentation();
    GroebnerBasis g = buchberger(p);
    REQUIRE(g.finite_quotient);
    // The standard monomials are exactly the staircase on its used variables.
    std::set<Monomial> expected;
    auto used = s.used_vars();
    for (const Monomial& m : s.monomials) {
      Monomial r(used.size());
      for (std::size_t i = 0; i < used.size(); ++i) r[i] = m[used[i]];
      expected.insert(r);
    }
    std::set<Monomial> got(g.standard_monomials.begin(),
                           g.standard_monomials.end());
    CHECK(got == expected);
    // Every staircase presentation is a genuine local algebra.
    CHECK_NOTHROW((void)from_presentation(p));
  }
}

TEST_CASE("relations are minimal generators") {
  Staircase s{2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};  // full 2x2 box
  Presentation p = s.to_presentation();
  // Minimal outside monomials: t^2 and s^2.
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].leading_monomial() == Monomial{0, 2});
  CHECK(p.relations[1].leading_monomial() == Monomial{2, 0});
}

TEST_CASE("unused variables are dropped from presentations") {
  Staircase s{3, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
  Presentation p = s.to_presentation();
  CHECK(p.variables.size() == 1);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].leading_monomial() == Monomial{3});
}

TEST_CASE("deterministic output order") {
  auto a = enumerate_staircases(5, 2);
  auto b = enumerate_staircases(5, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].monomials == b[i].monomials);
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    CHECK(a[i].size() <= a[i + 1].size());
}
