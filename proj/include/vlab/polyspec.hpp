#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlab/polynomial.hpp"

namespace vlab {

// Parses either a comma-separated list of exact rationals, constant term
// first ("1,2,3/4"), or a compact expression ("1 + 2*x + 3/4*x^2"). Throws
// ParseError on malformed input, including zero denominators.
Polynomial parse_polynomial(std::string_view text);

// Coefficients as canonical "p/q" strings, constant term first; the zero
// polynomial yields an empty list.
std::vector<std::string> coeff_strings(const Polynomial& p);

} // namespace vlab
