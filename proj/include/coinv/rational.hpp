#ifndef COINV_RATIONAL_HPP
#define COINV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace coinv {

// Exact arithmetic scalars. mpq_class keeps every value in lowest terms
// with a positive denominator, which is exactly the invariant the rest of
// the library relies on; no floating point appears anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);
Integer binomial(long n, long k);

// Accepts "p" or "p/q" with optional leading '-', reduces to lowest terms.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

}  // namespace coinv

#endif
