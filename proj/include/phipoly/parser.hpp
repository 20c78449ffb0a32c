#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phipoly/polynomial.hpp"
#include "phipoly/value_group.hpp"

namespace phipoly {

// Grammar: terms `c`, `c*x^k`, `c x^k`, `cx^k`, `x^k`, `x`, joined by + and -
// with arbitrary whitespace. Coefficients are arbitrary-precision integers;
// exponents are capped at 10^6. Repeated powers accumulate, so "x + x" is
// 2*x. Throws parse_error with the character offset on bad input.
IntPolynomial parse_polynomial(const std::string& text);

// Canonical rendering, descending powers, no spaces: "x^5+2*x^4+64".
// parse_polynomial(poly_to_string(f)) == f for every f.
std::string poly_to_string(const IntPolynomial& f);

// Comma-separated integer coefficients, ascending powers: "64,0,0,0,2,1".
IntPolynomial parse_coefficient_list(const std::string& text);

// Valuation list for the direct-input mode. Entries are separated by ';'
// (',' also accepted at rank 1); each entry is "inf" or rank many rationals
// "num[/den]" separated by ','. Examples: "6,1,inf,inf,inf,0" at rank 1;
// "1,0;inf;0,0" at rank 2.
std::vector<ExtendedValue> parse_valuation_list(const std::string& text,
                                                int rank);

// "z" or "zlex:R" with 2 <= R <= 8.
ValueGroup parse_group(const std::string& text);

}  // namespace phipoly
