#pragma once

// Exact integer and rational scalars. Every coordinate in the library is one
// of these; there is no floating point anywhere.

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace fricke {

using Integer = mpz_class;
using Rational = mpq_class;

/// Affine point in three coordinates.
using Triple = std::array<Rational, 3>;
using IntTriple = std::array<Integer, 3>;

/// num/den in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Inverse of to_string. Also accepts an unreduced or negative denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Comma-separated list of rationals, e.g. "2,1,1" or "15/4,-3/4,-6".
template <std::size_t N>
std::array<Rational, N> parse_rational_list(std::string_view text);

/// "(a, b, c)"
std::string to_string(const Triple& t);
std::string to_string(const IntTriple& t);

Triple to_rational(const IntTriple& t);

}  // namespace fricke
