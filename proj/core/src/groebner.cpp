#include "artinder/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "artinder/errors.hpp"

namespace artinder {

Presentation::Presentation(std::vector<std::string> vars,
                           std::vector<MultiPoly> rels, int cap)
    : variables(std::move(vars)), relations(std::move(rels)), degree_cap(cap) {
  if (variables.empty() || variables.size() > 4)
    throw Error("presentation must have 1..4 variables");
  Monomial unit(variables.size(), 0);
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const MultiPoly& f = relations[k];
    if (f.nvars() != variables.size())
      throw Error("relation/variable arity mismatch");
    if (f.coeff(unit) != 0)
      throw LocalityViolation(static_cast<int>(k),
                              "relation has a nonzero constant term");
    for (std::size_t i = 0; i < variables.size(); ++i) {
      Monomial lin(variables.size(), 0);
      lin[i] = 1;
      if (f.coeff(lin) != 0)
        throw LocalityViolation(static_cast<int>(k),
                                "relation has a nonzero linear term in " +
                                    variables[i]);
    }
  }
}

bool Presentation::is_graded() const {
  for (const MultiPoly& f : relations)
    if (!f.is_homogeneous()) return false;
  return true;
}

std::string Presentation::to_text() const {
  std::string out = "vars";
  for (const auto& v : variables) out += " " + v;
  out += "\n";
  for (const MultiPoly& f : relations)
    out += "rel " + f.to_string(variables) + "\n";
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g) {
  MultiPoly rem(f.nvars());
  MultiPoly work = f;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const Rational lc = work.leading_coeff();
    bool reduced = false;
    for (const MultiPoly& gen : g.generators) {
      if (gen.is_zero()) continue;
      if (divides(gen.leading_monomial(), lm)) {
        Monomial q = mono_div(lm, gen.leading_monomial());
        work = work - gen.mul_term(q, lc / gen.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      work.add_term(lm, -lc);
    }
  }
  return rem;
}

namespace {

MultiPoly s_poly(const MultiPoly& a, const MultiPoly& b) {
  Monomial l = mono_lcm(a.leading_monomial(), b.leading_monomial());
  MultiPoly pa = a.mul_term(mono_div(l, a.leading_monomial()),
                            Rational(1) / a.leading_coeff());
  MultiPoly pb = b.mul_term(mono_div(l, b.leading_monomial()),
                            Rational(1) / b.leading_coeff());
  return pa - pb;
}

void check_cap(const MultiPoly& f, int cap) {
  if (f.degree() > cap)
    throw DegreeCapExceeded("intermediate polynomial of degree " +
                            std::to_string(f.degree()) + " exceeds cap " +
                            std::to_string(cap));
}

// Ascending graded-lex enumeration of the staircase below the leading-term
// ideal. Pre: the quotient is finite.
std::vector<Monomial> staircase(std::size_t nvars,
                                const std::vector<Monomial>& leads) {
  auto blocked = [&](const Monomial& m) {
    for (const Monomial& l : leads)
      if (divides(l, m)) return true;
    return false;
  };
  std::vector<Monomial> out;
  std::deque<Monomial> queue{Monomial(nvars, 0)};
  std::set<Monomial> seen{Monomial(nvars, 0)};
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    if (blocked(m)) continue;
    out.push_back(m);
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial next = m;
      next[i] += 1;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Presentation& p) {
  const std::size_t nvars = p.variables.size();
  const int cap = p.degree_cap;
  std::vector<MultiPoly> basis;
  for (const MultiPoly& f : p.relations) {
    if (f.is_zero()) continue;
    check_cap(f, cap);
    basis.push_back(f.monic());
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  GroebnerBasis g{nvars, basis, false, {}};
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    MultiPoly s = s_poly(g.generators[i], g.generators[j]);
    check_cap(s, cap);
    MultiPoly r = normal_form(s, g);
    if (r.is_zero()) continue;
    check_cap(r, cap);
    g.generators.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.generators.size(); ++k)
      pairs.emplace_back(k, g.generators.size() - 1);
  }

  // Auto-reduce: drop generators whose leading monomial is divisible by
  // another's, then reduce each tail against the rest.
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    const Monomial& lm = g.generators[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < g.generators.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = g.generators[j].leading_monomial();
      if (divides(lj, lm) && (lj != lm || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(g.generators[i]);
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    GroebnerBasis others{nvars, {}, false, {}};
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.generators.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], others).monic();
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return grlex_less(a.leading_monomial(), b.leading_monomial());
            });
  g.generators = std::move(reduced);

  // Finiteness: every variable needs a pure power among the leading monomials.
  std::vector<Monomial> leads;
  for (const MultiPoly& f : g.generators) leads.push_back(f.leading_monomial());
  g.finite_quotient = true;
  for (std::size_t v = 0; v < nvars && g.finite_quotient; ++v) {
    bool found = false;
    for (const Monomial& l : leads) {
      bool pure = l[v] > 0;
      for (std::size_t w = 0; w < nvars && pure; ++w)
        if (w != v && l[w] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    g.finite_quotient = found;
  }
  if (g.finite_quotient) g.standard_monomials = staircase(nvars, leads);
  return g;
}

LocalCheck validate_local(const Presentation& p, const GroebnerBasis& g) {
  if (!g.finite_quotient) {
    // Name a variable with no pure power in the leading-term ideal.
    for (std::size_t v = 0; v < g.nvars; ++v) {
      bool found = false;
      for (const MultiPoly& f : g.generators) {
        const Monomial& l = f.leading_monomial();
        bool pure = l[v] > 0;
        for (std::size_t w = 0; w < g.nvars && pure; ++w)
          if (w != v && l[w] != 0) pure = false;
        if (pure) found = true;
      }
      if (!found)
        return {false, "variable " + p.variables[v] +
                           " is not nilpotent (infinite staircase)"};
    }
    return {false, "infinite staircase"};
  }
  const int d = static_cast<int>(g.standard_monomials.size()) + 1;
  for (std::size_t v = 0; v < g.nvars; ++v) {
    Monomial m(g.nvars, 0);
    m[v] = d;
    if (!normal_form(MultiPoly::term(g.nvars, m, 1), g).is_zero())
      return {false, "variable " + p.variables[v] +
                         " is not nilpotent in the quotient"};
  }
  return {true, ""};
}

StructureTensor structure_constants(const GroebnerBasis& g) {
  const auto& sm = g.standard_monomials;
  const std::size_t n = sm.size();
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[sm[k]] = k;
  StructureTensor c(n, std::vector<std::vector<Rational>>(
                           n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      MultiPoly prod = MultiPoly::term(g.nvars, mono_mul(sm[i], sm[j]), 1);
      MultiPoly nf = normal_form(prod, g);
      for (const auto& [m, coeff] : nf.terms()) {
        std::size_t k = index.at(m);
        c[i][j][k] = coeff;
        c[j][i][k] = coeff;
      }
    }
  return c;
}

}  // namespace artinder
