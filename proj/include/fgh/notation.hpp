#pragma once

#include <string>
#include <string_view>

#include "fgh/ordinal.hpp"

namespace fgh {

// Text notation for ordinal terms:
//
//   expr   := term ('+' term)*
//   term   := 'w' ['^' factor] ['*' nat] | nat | 'e0'
//   factor := nat | 'w' | '(' expr ')'
//
// Whitespace is insignificant; `nat` is a decimal numeral of any size.
// Non-canonical sums are accepted and normalized ("1 + w" parses to w).
//
// Throws ParseError on malformed input and ArgumentTooLarge when 'e0' occurs
// inside an exponent or a product.
Ordinal parse(std::string_view text);

// Canonical rendering: decreasing exponents, '*k' omitted for k = 1, '^E'
// omitted for E = 1, parentheses around exponents that are not a numeral or
// a bare 'w', plain numerals for the finite part, "0" and "e0" for the two
// constants. parse(render(a)) == a.
std::string render(const Ordinal& a);

}  // namespace fgh
