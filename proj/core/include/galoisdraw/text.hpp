#pragma once

// Text forms for exact values.
//
// The coefficient-list form is a comma-separated list of decimal integers or
// fractions, low degree first: "162,-432,504,-299,60,1" is
// x^5 + 60x^4 - 299x^3 + 504x^2 - 432x + 162.

#include <string>
#include <string_view>

#include "galoisdraw/bivariate.hpp"
#include "galoisdraw/exact.hpp"

namespace galoisdraw {

/// Parses "p" or "p/q"; throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view s);
Integer parse_integer(std::string_view s);

/// Throws InvalidArgument naming the offending position.
QPoly parse_coefficients(std::string_view s);
/// Like parse_coefficients but rejects non-integer coefficients.
ZPoly parse_integer_coefficients(std::string_view s);

std::string format_coefficients(const ZPoly& f);
std::string format_coefficients(const QPoly& f);

/// Human-readable form, highest degree first, e.g. "x^5 + 60x^4 - 299x^3".
std::string to_string(const ZPoly& f, std::string_view var = "x");
std::string to_string(const QPoly& f, std::string_view var = "x");
std::string to_string(const BiPoly& f, std::string_view a = "a", std::string_view b = "b");

/// Bivariate text form: ';'-separated coefficient lists in b, one per power
/// of a starting from a^0, e.g. "0,0,-1;0,-5;-5;0;0;2" style rows.
BiPoly parse_bivariate(std::string_view s);
std::string format_bivariate(const BiPoly& f);

}  // namespace galoisdraw
