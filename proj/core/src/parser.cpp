#include "artinder/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "artinder/errors.hpp"

namespace artinder {

namespace {

struct PolyParser {
  const std::string& text;
  const std::vector<std::string>& vars;
  int line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, static_cast<int>(pos) + 1, msg);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return Integer(text.substr(start, pos - start));
  }

  int parse_exponent() {
    Integer e = parse_integer();
    if (e < 0 || e > 1000) fail("exponent out of range");
    return static_cast<int>(e);
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a variable name");
    return text.substr(start, pos - start);
  }

  int var_index(const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    fail("unknown variable '" + name + "'");
  }

  // term := [coef] [*] factor (* factor)*  |  coef
  // factor := var [^ int]
  MultiPoly parse_term() {
    MultiPoly t = MultiPoly::constant(vars.size(), 1);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_integer();
      Rational coef(num);
      if (eat('/')) {
        Integer den = parse_integer();
        if (den == 0) fail("zero denominator");
        coef = Rational(num) / Rational(den);
      }
      t = t * coef;
      have_factor = true;
      if (!eat('*') &&
          !(peek() != '\0' &&
            (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')))
        return t;
    }
    for (;;) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) break;
      int vi = var_index(parse_name());
      int e = 1;
      if (eat('^')) e = parse_exponent();
      Monomial m(vars.size(), 0);
      m[vi] = e;
      t = t * MultiPoly::term(vars.size(), m, 1);
      have_factor = true;
      if (!eat('*')) {
        // after a variable, only another explicit '*'-joined factor continues
        // the term
        break;
      }
    }
    if (!have_factor) fail("expected a term");
    return t;
  }

  MultiPoly parse() {
    MultiPoly p(vars.size());
    skip_ws();
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    for (;;) {
      MultiPoly t = parse_term();
      p = negate ? p - t : p + t;
      skip_ws();
      if (pos >= text.size()) break;
      if (eat('+')) negate = false;
      else if (eat('-')) negate = true;
      else fail(std::string("unexpected character '") + text[pos] + "'");
    }
    return p;
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& variables, int line) {
  PolyParser p{text, variables, line};
  return p.parse();
}

Presentation parse_presentation(const std::string& text, int degree_cap) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, int>> rel_lines;
  bool saw_vars = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    std::istringstream ls(s);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "vars") {
      if (saw_vars) throw ParseError(lineno, 1, "duplicate 'vars' line");
      std::string name;
      while (ls >> name) {
        for (const std::string& seen : vars)
          if (seen == name)
            throw ParseError(lineno, 1, "duplicate variable '" + name + "'");
        vars.push_back(name);
      }
      if (vars.empty()) throw ParseError(lineno, 1, "no variables named");
      saw_vars = true;
    } else if (keyword == "rel") {
      if (!saw_vars)
        throw ParseError(lineno, 1, "'rel' before 'vars'");
      std::string rest;
      std::getline(ls, rest);
      rel_lines.emplace_back(rest, lineno);
    } else {
      throw ParseError(lineno, 1, "unknown keyword '" + keyword + "'");
    }
  }
  if (!saw_vars) throw ParseError(lineno, 1, "missing 'vars' line");
  if (rel_lines.empty()) throw ParseError(lineno, 1, "no relations");
  std::vector<MultiPoly> rels;
  for (const auto& [src, ln] : rel_lines)
    rels.push_back(parse_poly(src, vars, ln));
  return Presentation(std::move(vars), std::move(rels), degree_cap);
}

Presentation parse_presentation_file(const std::string& path, int degree_cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str(), degree_cap);
}

}  // namespace artinder
