#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltheta/bigfloat.hpp"
#include "ltheta/rational.hpp"

namespace ltheta {

// Truncated q-expansion with exact rational coefficients.
//
// The coefficient of q^(k/denom) is scale * coeff[k] for 0 <= k < truncation;
// terms of exponent >= truncation/denom are unknown, i.e. the object
// represents the series modulo O(q^(truncation/denom)). The common scale
// keeps the integer payload small for series such as (1/16) theta products.
struct QExpansion {
  std::vector<Integer> coeff;
  Rational scale = Rational(1);
  long denom = 1;
  long truncation = 0;
};

// Zero series known modulo O(q^truncation_q).
QExpansion qs_zero(long truncation_q, long denom = 1);

// The constant series 1, known modulo O(q^truncation_q).
QExpansion qs_one(long truncation_q);

// c * q^e, known modulo O(q^truncation_q). Requires e >= 0.
QExpansion qs_monomial(const Rational& c, const Rational& e, long truncation_q);

// Folds the coefficient content into the scale and reduces the exponent
// denominator when every supported index shares a factor with it.
void qs_normalize(QExpansion& x);

QExpansion qs_add(const QExpansion& a, const QExpansion& b);
QExpansion qs_sub(const QExpansion& a, const QExpansion& b);
QExpansion qs_scalar(const QExpansion& a, const Rational& c);
QExpansion qs_mul(const QExpansion& a, const QExpansion& b);
QExpansion qs_pow(const QExpansion& a, unsigned long e);

// Substitutes q -> q^k for integer k >= 1.
QExpansion qs_scale_arg(const QExpansion& a, long k);

// Exact coefficient of q^e. Throws std::out_of_range when e lies at or
// beyond the truncation order. Exponents off the support grid yield 0.
Rational qs_coeff(const QExpansion& a, const Rational& e);

// First nonzero term as (exponent, coefficient); nullopt when the series is
// identically zero through its truncation order.
std::optional<std::pair<Rational, Rational>> qs_leading(const QExpansion& a);

// The truncation order in q-units (exponents below it are known).
Rational qs_order(const QExpansion& a);

// True when every known coefficient vanishes.
bool qs_is_zero(const QExpansion& a);

// Exact equality of all coefficients below the smaller truncation order.
bool qs_equal(const QExpansion& a, const QExpansion& b);

// Partial sum at a numeric point q in [0, 1).
BigFloat qs_eval(const QExpansion& a, const BigFloat& q, const PrecisionContext& ctx);

// Human-readable form such as "q - 4*q^2 + 2*q^(9/4) + O(q^3)".
std::string to_string(const QExpansion& a, std::size_t max_terms = 12);

}  // namespace ltheta
