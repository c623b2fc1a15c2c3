#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace soscert {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

/// Parses "7", "-3/4" or a finite decimal such as "0.25" into a canonical rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1) form.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Continued-fraction approximation with denominator at most `max_den`.
Rational rationalize(double value, long max_den = 1000000);

/// Rounds `value` to the nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& value, unsigned bits);

/// Rounds a double exactly (every finite double is a dyadic rational).
Rational exact_from_double(double value);

/// True when q is the square of a rational; `root` receives the nonnegative root.
bool is_rational_square(const Rational& q, Rational* root = nullptr);

/// Writes c = radicand * s^2 with radicand a positive integer. The radicand is
/// squarefree after trial division up to 10^6; larger square factors may remain,
/// which keeps the decomposition valid but not canonical. Requires c > 0.
void split_square(const Rational& c, Integer& radicand, Rational& s);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace soscert
