#pragma once

#include <string_view>

#include "hyperlc/poly.hpp"

namespace hyperlc {

// Two accepted spellings:
//   coefficient list  [c0, c1, ...]   ascending degree; entries are integers,
//                                     decimals or "p/q" (quotes optional)
//   expression        (x - 1/2)^2 * (x + 3) - 2*x, "x^2+1", "3x(x-1)"
// Throws ParseError on malformed input.
Poly parse_poly(std::string_view text);

// Ascending coefficient list rendering, e.g. ["-1", "0", "1"].
std::string to_coeff_list(const Poly& p);

}  // namespace hyperlc
