#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmres/monomial.hpp"

namespace bmres {

/// Error with the 1-based line number that failed to parse.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

/// Parses the ideal text format: one monomial per line, `#` comments and
/// blank lines ignored.  A line is either an exponent CSV (`1,1,0`), an
/// indexed product (`x1^2*x2`), or letter shorthand (`xy`, `x^2*y`; one
/// variable per letter, exponents require `^`).  Letters are mapped to
/// variables in alphabetical order.  Returns the minimalized ideal.
MonomialIdeal parse_ideal_text(const std::string& text);

/// Same format with monomials separated by `,` or `;` instead of newlines.
/// (CSV exponent lines are not available inline.)
MonomialIdeal parse_ideal_inline(const std::string& text);

MonomialIdeal parse_ideal_file(const std::string& path);

}  // namespace bmres
