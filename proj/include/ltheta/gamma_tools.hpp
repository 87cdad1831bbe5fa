#pragma once

#include <utility>
#include <vector>

#include "ltheta/bigfloat.hpp"
#include "ltheta/rational.hpp"

namespace ltheta {

// Product of gamma values: prod Gamma(num[i]) / prod Gamma(den[j]).
// Invariant: every argument is a positive rational.
struct GammaBracket {
  std::vector<Rational> num;
  std::vector<Rational> den;
};

std::string to_string(const GammaBracket& br);

// Removes argument pairs common to numerator and denominator.
GammaBracket bracket_simplify(const GammaBracket& br);

// Merges two brackets (pointwise product of values).
GammaBracket bracket_mul(const GammaBracket& a, const GammaBracket& b);

// Gamma at a positive point, to working precision. Throws std::domain_error
// for x <= 0. Recomputing with working_digits + 20 moves the result by less
// than 10^-target relative (exercised by the property suite).
BigFloat gamma(const Rational& x, const PrecisionContext& ctx);
BigFloat gamma(const BigFloat& x, const PrecisionContext& ctx);

// Both sides of Gamma(n) Gamma(1-n) = pi / sin(pi n) for n in (0,1).
std::pair<BigFloat, BigFloat> reflection_check(const Rational& n, const PrecisionContext& ctx);

// Both sides of the multiplication formula
// Gamma(m z) = m^(m z - 1/2) / (2 pi)^((m-1)/2) prod_{k=0}^{m-1} Gamma(z + k/m)
// for integer m >= 2, z > 0.
std::pair<BigFloat, BigFloat> multiplication_check(const Rational& z, unsigned m,
                                                   const PrecisionContext& ctx);

// Evaluates the bracket. Throws std::domain_error on any nonpositive argument.
BigFloat gamma_bracket_eval(const GammaBracket& br, const PrecisionContext& ctx);

// Exact rising factorial (a)_n = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational& a, unsigned long n);

namespace detail {
// Gamma at any non-pole real (negative non-integers allowed). Internal use
// by connection formulas.
BigFloat gamma_any(const BigFloat& x);
}  // namespace detail

}  // namespace ltheta
