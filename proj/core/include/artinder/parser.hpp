#pragma once

#include <string>
#include <vector>

#include "artinder/groebner.hpp"

namespace artinder {

// Polynomial term syntax: `^` for powers, `*` for products (optional between
// a coefficient and a variable), `+`/`-`, integer or `p/q` coefficients.
// Example: "t^3 - s^2". Line/col positions in errors are 1-based.
MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& variables, int line = 1);

// Line-oriented presentation grammar:
//   vars <name> <name> ...     (exactly once, first)
//   rel <polynomial>           (one or more)
//   # comment / blank lines ignored
Presentation parse_presentation(const std::string& text, int degree_cap = 24);

Presentation parse_presentation_file(const std::string& path,
                                     int degree_cap = 24);

}  // namespace artinder
