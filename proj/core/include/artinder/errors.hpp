#pragma once

#include <stdexcept>
#include <string>

namespace artinder {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact-linalg
struct ModulusReducible : Error {
  using Error::Error;
};

// poly-engine
struct DegreeCapExceeded : Error {
  using Error::Error;
};

// algebra-core
struct NotLocal : Error {
  using Error::Error;
};
struct NotAssociative : Error {
  using Error::Error;
};
struct NotCommutative : Error {
  using Error::Error;
};
struct NoUnit : Error {
  using Error::Error;
};
struct NotGorenstein : Error {
  using Error::Error;
};
struct SupportLeak : Error {
  using Error::Error;
};

// cli / parsing
struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};
struct LocalityViolation : Error {
  int relation_index;
  explicit LocalityViolation(int idx, const std::string& msg)
      : Error("relation " + std::to_string(idx + 1) + ": " + msg),
        relation_index(idx) {}
};

}  // namespace artinder
