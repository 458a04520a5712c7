#pragma once

#include <set>
#include <string>
#include <vector>

#include "artinder/groebner.hpp"

namespace artinder {

// A finite division-closed monomial set containing 1; the standard-monomial
// diagram of a monomial Artinian quotient.
struct Staircase {
  std::size_t nvars;
  std::set<Monomial> monomials;  // contains the zero exponent vector

  std::size_t size() const { return monomials.size(); }
  // Variables actually appearing (those with x_i in the set).
  std::vector<std::size_t> used_vars() const;

  // Lexicographically minimal sorted exponent-vector encoding over all
  // variable permutations; identifies staircases up to relabeling.
  std::string canonical_key() const;
  bool is_canonical() const;

  // Presentation on the used variables whose relations are the minimal
  // monomials outside the staircase.
  Presentation to_presentation() const;

  std::string encode() const;  // human-readable monomial list
};

// All staircases of size <= max_dim in exactly max_vars variables (unused
// variables allowed), deduplicated by variable permutation when dedup is
// set. Deterministic order: by size, then canonical key.
std::vector<Staircase> enumerate_staircases(std::size_t max_dim,
                                            std::size_t max_vars,
                                            bool dedup = true);

}  // namespace artinder
