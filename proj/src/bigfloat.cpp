#include "ltheta/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ltheta {

PrecisionContext PrecisionContext::make(int target, int guard, int working) {
  if (target < 1) throw std::domain_error("PrecisionContext: target_digits < 1");
  if (guard < 10) guard = 10;
  int w = std::max(working, target + guard + 5);
  return PrecisionContext{target, guard, w};
}

mpfr_prec_t PrecisionContext::working_bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits * 3.3219280948873623)) + 16;
}

BigFloat PrecisionContext::real(long n) const { return BigFloat::from(n, working_bits()); }
BigFloat PrecisionContext::real(const Rational& r) const { return BigFloat::from(r, working_bits()); }
BigFloat PrecisionContext::real(const std::string& d) const { return BigFloat::from_decimal(d, working_bits()); }
BigFloat PrecisionContext::pi() const { return const_pi(working_bits()); }

BigFloat PrecisionContext::pow10(long e) const {
  BigFloat r = make_prec(working_bits());
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

BigFloat::BigFloat() {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_set_nan(v_);
}

BigFloat::BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat make_prec(mpfr_prec_t bits) { return BigFloat(bits); }

BigFloat BigFloat::zero(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_zero(r.v_, 1);
  return r;
}

BigFloat BigFloat::from(long n, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from(const Rational& q, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_decimal(const std::string& text, mpfr_prec_t bits) {
  BigFloat r(bits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigFloat: malformed decimal '" + text + "'");
  return r;
}

std::string BigFloat::str(int digits) const {
  if (digits < 2) digits = 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNe", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {
mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

#define LT_BINOP(op, fn)                                        \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {  \
    BigFloat r = make_prec(wider(a, b));                        \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                   \
    return r;                                                   \
  }

LT_BINOP(+, mpfr_add)
LT_BINOP(-, mpfr_sub)
LT_BINOP(*, mpfr_mul)
LT_BINOP(/, mpfr_div)
#undef LT_BINOP

BigFloat operator-(const BigFloat& a) {
  BigFloat r = make_prec(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, long b) {
  BigFloat r = make_prec(a.prec());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator+(long a, const BigFloat& b) { return b + a; }
BigFloat operator-(const BigFloat& a, long b) {
  BigFloat r = make_prec(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator-(long a, const BigFloat& b) {
  BigFloat r = make_prec(b.prec());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r = make_prec(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator*(long a, const BigFloat& b) { return b * a; }
BigFloat operator/(const BigFloat& a, long b) {
  BigFloat r = make_prec(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigFloat operator/(long a, const BigFloat& b) {
  BigFloat r = make_prec(b.prec());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }
bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
bool operator<(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
bool operator>(const BigFloat& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }

#define LT_UNFN(name, fn)                  \
  BigFloat name(const BigFloat& x) {       \
    BigFloat r = make_prec(x.prec());      \
    fn(r.raw(), x.raw(), MPFR_RNDN);       \
    return r;                              \
  }

LT_UNFN(abs, mpfr_abs)
LT_UNFN(sqrt, mpfr_sqrt)
LT_UNFN(cbrt, mpfr_cbrt)
LT_UNFN(exp, mpfr_exp)
LT_UNFN(log, mpfr_log)
LT_UNFN(sin, mpfr_sin)
LT_UNFN(cos, mpfr_cos)
LT_UNFN(sinh, mpfr_sinh)
LT_UNFN(cosh, mpfr_cosh)
LT_UNFN(tanh, mpfr_tanh)
LT_UNFN(mpfr_gamma_raw, mpfr_gamma)
LT_UNFN(mpfr_digamma_raw, mpfr_digamma)
#undef LT_UNFN

BigFloat log2_floor_safe(const BigFloat& x) {
  BigFloat r = make_prec(x.prec());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  mpfr_log2(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat r = make_prec(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r = make_prec(wider(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const Rational& q) {
  if (x.sign() < 0) throw std::domain_error("pow: negative base with rational exponent");
  long p = to_long(Rational(q.get_num()));
  unsigned long d = q.get_den().get_ui();
  BigFloat r = pow(x, p);
  if (d != 1) mpfr_rootn_ui(r.raw(), r.raw(), d, MPFR_RNDN);
  return r;
}

BigFloat const_pi(mpfr_prec_t bits) {
  BigFloat r = make_prec(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }

int agreed_digits(const BigFloat& a, const BigFloat& b, int cap) {
  BigFloat d = abs(a - b);
  if (d.is_zero()) return cap;
  BigFloat denom = abs(b);
  if (denom.is_zero()) denom = abs(a);
  if (denom.is_zero()) return 0;
  double ratio_log10 = (static_cast<double>(d.exponent()) - static_cast<double>(denom.exponent())) * 0.30102999566398;
  // Refine with mantissas to avoid edge effects of pure exponent arithmetic.
  BigFloat q = d / denom;
  mpfr_t l;
  mpfr_init2(l, 64);
  mpfr_log10(l, q.raw(), MPFR_RNDN);
  ratio_log10 = mpfr_get_d(l, MPFR_RNDN);
  mpfr_clear(l);
  int digits = static_cast<int>(std::floor(-ratio_log10));
  if (digits < 0) digits = 0;
  if (digits > cap) digits = cap;
  return digits;
}

}  // namespace ltheta
