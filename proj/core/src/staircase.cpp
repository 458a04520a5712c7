#include "artinder/staircase.hpp"

#include <algorithm>
#include <map>

namespace artinder {

std::vector<std::size_t> Staircase::used_vars() const {
  std::vector<bool> used(nvars, false);
  for (const Monomial& m : monomials)
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] > 0) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

namespace {

std::string encode_sorted(const std::set<Monomial>& monos) {
  std::vector<Monomial> v(monos.begin(), monos.end());
  std::sort(v.begin(), v.end());
  std::string s;
  for (const Monomial& m : v) {
    for (int e : m) s += static_cast<char>('0' + e);
    s += '|';
  }
  return s;
}

}  // namespace

std::string Staircase::canonical_key() const {
  std::vector<std::size_t> perm(nvars);
  for (std::size_t i = 0; i < nvars; ++i) perm[i] = i;
  std::string best;
  do {
    std::set<Monomial> permuted;
    for (const Monomial& m : monomials) {
      Monomial p(nvars);
      for (std::size_t i = 0; i < nvars; ++i) p[i] = m[perm[i]];
      permuted.insert(std::move(p));
    }
    std::string key = encode_sorted(permuted);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool Staircase::is_canonical() const {
  return encode_sorted(monomials) == canonical_key();
}

Presentation Staircase::to_presentation() const {
  std::vector<std::size_t> used = used_vars();
  const std::size_t k = used.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i)
    names.push_back("x" + std::to_string(i + 1));

  // Restrict the staircase to the used variables.
  std::set<Monomial> s;
  for (const Monomial& m : monomials) {
    Monomial r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = m[used[i]];
    s.insert(std::move(r));
  }
  // Minimal monomials outside the staircase: every proper divisor inside.
  int maxdeg = 0;
  for (const Monomial& m : s) maxdeg = std::max(maxdeg, total_degree(m));
  std::vector<MultiPoly> rels;
  std::vector<Monomial> frontier{Monomial(k, 0)};
  std::set<Monomial> seen{Monomial(k, 0)};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier)
      for (std::size_t i = 0; i < k; ++i) {
        Monomial up = m;
        up[i] += 1;
        if (!seen.insert(up).second) continue;
        if (s.count(up)) {
          next.push_back(up);
          continue;
        }
        // up is outside; minimal iff all its proper divisors (one step down)
        // are inside the staircase.
        bool minimal = true;
        for (std::size_t j = 0; j < k && minimal; ++j) {
          if (up[j] == 0) continue;
          Monomial down = up;
          down[j] -= 1;
          if (!s.count(down)) minimal = false;
        }
        if (minimal) rels.push_back(MultiPoly::term(k, up, 1));
      }
    frontier = std::move(next);
  }
  std::sort(rels.begin(), rels.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return grlex_less(a.leading_monomial(), b.leading_monomial());
            });
  return Presentation(std::move(names), std::move(rels));
}

std::string Staircase::encode() const {
  std::vector<Monomial> v(monomials.begin(), monomials.end());
  std::sort(v.begin(), v.end(), grlex_less);
  std::string s;
  for (const Monomial& m : v) {
    if (!s.empty()) s += " ";
    std::string part;
    for (int e : m) part += std::to_string(e);
    s += part;
  }
  return s;
}

std::vector<Staircase> enumerate_staircases(std::size_t max_dim,
                                            std::size_t max_vars, bool dedup) {
  // DFS adding monomials in strictly increasing graded-lex order; every
  // prefix of a graded-lex-sorted order ideal is an order ideal, so each
  // staircase is produced exactly once.
  std::vector<Staircase> out;
  const std::size_t k = max_vars;
  Staircase cur{k, {Monomial(k, 0)}};

  auto closed_if_added = [&](const Monomial& m) {
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] == 0) continue;
      Monomial down = m;
      down[i] -= 1;
      if (!cur.monomials.count(down)) return false;
    }
    return true;
  };

  auto emit = [&]() {
    if (!dedup || cur.is_canonical()) out.push_back(cur);
  };

  // Candidate monomials: bounded componentwise by max_dim (an order ideal of
  // size <= max_dim has exponents < max_dim).
  std::vector<Monomial> all;
  {
    Monomial m(k, 0);
    for (;;) {
      if (total_degree(m) < static_cast<int>(max_dim) && total_degree(m) > 0)
        all.push_back(m);
      std::size_t pos = 0;
      while (pos < k && ++m[pos] == static_cast<int>(max_dim)) {
        m[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
    std::sort(all.begin(), all.end(), grlex_less);
  }

  auto dfs = [&](auto&& self, std::size_t start) -> void {
    emit();
    if (cur.size() == max_dim) return;
    for (std::size_t i = start; i < all.size(); ++i) {
      if (!closed_if_added(all[i])) continue;
      cur.monomials.insert(all[i]);
      self(self, i + 1);
      cur.monomials.erase(all[i]);
    }
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(), [](const Staircase& a, const Staircase& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

}  // namespace artinder
