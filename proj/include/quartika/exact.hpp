#ifndef QUARTIKA_EXACT_HPP
#define QUARTIKA_EXACT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "quartika/errors.hpp"

namespace quartika {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced fraction with positive denominator. mpq_class does not
// canonicalize values assembled from parts, so every such construction
// funnels through here.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(const Integer& num) { return Rational(num); }

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

// Exact integer square root: s with s*s = v, or nothing.
// Negative input is a domain error, not merely a non-square.
std::optional<Integer> int_sqrt_exact(const Integer& v);

// Exact rational square root: defined when both the reduced numerator
// and denominator are perfect squares.
std::optional<Rational> rat_sqrt_exact(const Rational& v);

// Parses a base-10 integer with optional sign; rejects anything else.
std::optional<Integer> parse_integer(const std::string& text);

Integer pow4(const Integer& v);
Rational pow4(const Rational& v);

} // namespace quartika

#endif
