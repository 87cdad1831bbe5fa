#pragma once

#include <gmpxx.h>

#include <string>

namespace ltheta {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational n/d. Throws std::domain_error when d == 0.
Rational rational(long n, long d = 1);
Rational rational(const Integer& n, const Integer& d);

// Accepts "p", "p/q", optional leading sign. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

bool is_integer(const Rational& r);
bool is_nonpositive_integer(const Rational& r);

// pre: is_integer(r) and the value fits in long.
long to_long(const Rational& r);

// Largest integer <= r.
long floor_long(const Rational& r);

// base^e with integer e; pre: base != 0 when e < 0.
Rational pow_int(const Rational& base, long e);

}  // namespace ltheta
