#pragma once

#include <gmpxx.h>

#include <string>

#include "feec/errors.hpp"

namespace feec {

/// Exact rational scalar. All coefficient arithmetic in this library is
/// carried out over the rationals; no floating point enters any result.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Malformed("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p", or "p/q". Throws Malformed on anything else.
Rational rational_from_string(const std::string& text);

/// Renders as "p" or "p/q" with canonical sign on the numerator.
std::string to_string(const Rational& q);

} // namespace feec
