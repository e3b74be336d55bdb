#pragma once

#include <string>
#include <vector>

#include "genus0/poly.hpp"

namespace genus0 {

// Input grammar (also used for printing):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-')* base
//   base    := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
//
// Implicit multiplication ("2x") is rejected. Division is only allowed where
// it keeps the object in its domain: by nonzero constants for curve
// polynomials, freely for rational functions.

// Polynomial in x and y. Throws parse_error with a position on bad input.
Poly2 parse_poly(const std::string& text);

// Rational function in t, reduced with monic denominator.
URat<Rat> parse_ratfunc(const std::string& text);

// Comma-separated list of rational functions in t.
std::vector<URat<Rat>> parse_param_list(const std::string& text);

}  // namespace genus0
