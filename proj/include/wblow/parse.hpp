#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wblow/polynomial.hpp"

namespace wblow {

// A list of polynomials sharing one variable table.
struct PolynomialSystem {
  std::vector<std::string> names;
  std::vector<Polynomial> polys;
};

// Parses a single polynomial in the text grammar
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ['*'] factor ('*' factor)* | coeff | factor ('*' factor)*
//   coeff  := int | int '/' int
//   factor := name ['^' int]
// Names match [a-zA-Z][a-zA-Z0-9]*; whitespace is insignificant.
//
// When `declared` is non-empty, only those names are accepted and they map to
// indices in declaration order. Otherwise names are numbered by first
// appearance. Throws ParseError with 1-based line/column.
PolynomialSystem parse_polynomial(std::string_view text,
                                  const std::vector<std::string>& declared = {});

// Same, for a list separated by ',', ';' or newlines. Text after '#' up to
// the end of a line is a comment.
PolynomialSystem parse_system(std::string_view text,
                              const std::vector<std::string>& declared = {});

// Convenience for tests and examples: parses with a fixed variable list.
Polynomial parse_in(std::string_view text, const std::vector<std::string>& names);

// Splits "a,b,c" into trimmed non-empty fields.
std::vector<std::string> split_list(std::string_view text);

}  // namespace wblow
