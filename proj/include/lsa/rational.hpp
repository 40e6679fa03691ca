#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace lsa {

/// Exact arbitrary-precision rational, the only scalar type used anywhere in
/// the library. GMP keeps values canonical: fully reduced, denominator > 0,
/// so equality is literal equality of reduced forms.
using Rational = boost::multiprecision::mpq_rational;

using Integer = boost::multiprecision::mpz_int;

/// Renders canonically: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p/q" or the integer shorthand "p". Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace lsa
