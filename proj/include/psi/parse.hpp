#pragma once

#include <cstddef>
#include <string_view>

#include "psi/polynomial.hpp"

namespace psi {

// Parses the polynomial text grammar
//
//   poly   := term (("+" | "-") term)*
//   term   := [sign] [rational "*"] factor ("*" factor)*
//   factor := "x" index ["^" exponent]
//   rational := integer ["/" positive-integer]
//
// with insignificant whitespace, e.g. "3/2*x1^2*x3 - x2*x4". A bare
// rational is accepted as a constant term. Throws ParseError carrying the
// byte offset of the problem; variable indices must lie in 1..d.
Polynomial parse_polynomial(std::string_view text, std::size_t d);

}  // namespace psi
