#pragma once

#include <mpfr.h>

#include <string>

#include "ltheta/rational.hpp"

namespace ltheta {

class BigFloat;

// Decimal precision policy shared by all floating evaluations.
// Invariants: guard_digits >= 10, working_digits >= target_digits + guard_digits.
struct PrecisionContext {
  int target_digits = 30;
  int guard_digits = 15;
  int working_digits = 50;

  static PrecisionContext make(int target, int guard = 15, int working = 0);

  mpfr_prec_t working_bits() const;
  BigFloat real(long n) const;
  BigFloat real(const Rational& r) const;
  BigFloat real(const std::string& decimal) const;
  BigFloat pi() const;
  BigFloat pow10(long e) const;  // 10^e
};

// Arbitrary-precision real backed by mpfr_t. Every value carries its own
// precision; binary operations compute at the wider operand's precision.
// Rounding is to nearest throughout.
class BigFloat {
 public:
  BigFloat();  // NaN at the minimum precision
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat zero(mpfr_prec_t bits);
  static BigFloat from(long n, mpfr_prec_t bits);
  static BigFloat from(const Rational& r, mpfr_prec_t bits);
  static BigFloat from_decimal(const std::string& text, mpfr_prec_t bits);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent; pre: finite nonzero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string str(int digits) const;

 private:
  explicit BigFloat(mpfr_prec_t bits);
  mpfr_t v_;

  friend BigFloat make_prec(mpfr_prec_t bits);
};

BigFloat make_prec(mpfr_prec_t bits);

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);

BigFloat operator+(const BigFloat& a, long b);
BigFloat operator+(long a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, long b);
BigFloat operator-(long a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, long b);
BigFloat operator*(long a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, long b);
BigFloat operator/(long a, const BigFloat& b);

int compare(const BigFloat& a, const BigFloat& b);
bool operator<(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);
bool operator!=(const BigFloat& a, const BigFloat& b);
bool operator<(const BigFloat& a, long b);
bool operator>(const BigFloat& a, long b);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log2_floor_safe(const BigFloat& x);  // log(|x|)/log(2) as BigFloat; pre nonzero
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat pow(const BigFloat& x, long e);
BigFloat pow(const BigFloat& x, const BigFloat& y);    // pre: x > 0
BigFloat pow(const BigFloat& x, const Rational& r);    // pre: x > 0; exact p/q root
BigFloat const_pi(mpfr_prec_t bits);
BigFloat mpfr_gamma_raw(const BigFloat& x);    // gamma at any non-pole real
BigFloat mpfr_digamma_raw(const BigFloat& x);  // digamma at any non-pole real
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

// floor(log10(|a/b|)), the count of agreeing leading decimal digits between
// two nonzero values measured as -log10(|a-b|/|b|). Returns `cap` when the
// difference is exactly zero or the ratio is below 10^-cap.
int agreed_digits(const BigFloat& a, const BigFloat& b, int cap);

}  // namespace ltheta
