#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artinder/multipoly.hpp"

namespace artinder {

// A polynomial presentation C[x1..xm]/I of a candidate local algebra.
// Relations must vanish to second order at the origin; the constructor
// enforces this (LocalityViolation otherwise).
struct Presentation {
  std::vector<std::string> variables;  // <= 4
  std::vector<MultiPoly> relations;
  int degree_cap = 24;

  Presentation(std::vector<std::string> vars, std::vector<MultiPoly> rels,
               int cap = 24);

  // All relations homogeneous in total degree.
  bool is_graded() const;

  std::string to_text() const;  // re-parses to an identical presentation
};

// Completed, auto-reduced, monic Groebner basis under graded-lex.
struct GroebnerBasis {
  std::size_t nvars;
  std::vector<MultiPoly> generators;
  // Finite iff for every variable some leading monomial is a pure power.
  bool finite_quotient;
  // Monomials outside the leading-term ideal, ascending graded-lex
  // (so the constant monomial 1 is first). Empty when not finite.
  std::vector<Monomial> standard_monomials;
};

// Deterministic leading-term reduction; the result is supported only on
// standard monomials and differs from f by an element of the ideal.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g);

// Buchberger with a degree cap: any intermediate polynomial of total degree
// above the cap aborts with DegreeCapExceeded.
GroebnerBasis buchberger(const Presentation& p);

struct LocalCheck {
  bool ok;
  std::string reason;  // names the offending variable when !ok
};

// The quotient is a local algebra iff the staircase is finite and every
// variable is nilpotent in the quotient.
LocalCheck validate_local(const Presentation& p, const GroebnerBasis& g);

// c[i][j][k] with b_i * b_j = sum_k c[i][j][k] b_k over standard monomials.
using StructureTensor = std::vector<std::vector<std::vector<Rational>>>;
StructureTensor structure_constants(const GroebnerBasis& g);

}  // namespace artinder
