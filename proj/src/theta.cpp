#include "ltheta/theta.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ltheta {

namespace {

constexpr long kMaxSeriesTerms = 1000000;

QExpansion blank(long scaled_truncation, long denom) {
  QExpansion x;
  x.denom = denom;
  x.truncation = scaled_truncation;
  x.coeff.assign(static_cast<std::size_t>(scaled_truncation), Integer(0));
  return x;
}

QExpansion theta2_qexp(long scale, long order) {
  // theta2(q^s) = 2 sum_{n>=0} q^(s (2n+1)^2 / 4)
  QExpansion x = blank(4 * order, 4);
  for (long n = 0;; ++n) {
    const long idx = scale * (2 * n + 1) * (2 * n + 1);
    if (idx >= x.truncation) break;
    x.coeff[static_cast<std::size_t>(idx)] += 2;
  }
  qs_normalize(x);
  return x;
}

QExpansion theta34_qexp(bool alternating, long scale, long order) {
  QExpansion x = blank(order, 1);
  if (order > 0) x.coeff[0] = 1;
  for (long n = 1;; ++n) {
    const long idx = scale * n * n;
    if (idx >= x.truncation) break;
    x.coeff[static_cast<std::size_t>(idx)] += (alternating && (n & 1)) ? -2 : 2;
  }
  qs_normalize(x);
  return x;
}

QExpansion borwein_a_qexp(long scale, long order) {
  QExpansion x = blank(order, 1);
  const long kmax = (order - 1) / scale;
  const long bound = static_cast<long>(std::sqrt(4.0 * static_cast<double>(kmax) / 3.0)) + 2;
  for (long n = -bound; n <= bound; ++n) {
    for (long m = -bound; m <= bound; ++m) {
      const long e = n * n + n * m + m * m;
      if (e <= kmax) x.coeff[static_cast<std::size_t>(scale * e)] += 1;
    }
  }
  qs_normalize(x);
  return x;
}

QExpansion borwein_b_qexp(long scale, long order) {
  const long kmax = (order - 1) / scale;
  std::vector<long> cls0(static_cast<std::size_t>(kmax + 1), 0);
  std::vector<long> cls1(static_cast<std::size_t>(kmax + 1), 0);
  std::vector<long> cls2(static_cast<std::size_t>(kmax + 1), 0);
  const long bound = static_cast<long>(std::sqrt(4.0 * static_cast<double>(kmax) / 3.0)) + 2;
  for (long n = -bound; n <= bound; ++n) {
    for (long m = -bound; m <= bound; ++m) {
      const long e = n * n + n * m + m * m;
      if (e > kmax) continue;
      const long r = ((n - m) % 3 + 3) % 3;
      auto& cls = r == 0 ? cls0 : (r == 1 ? cls1 : cls2);
      cls[static_cast<std::size_t>(e)] += 1;
    }
  }
  QExpansion x = blank(order, 1);
  for (long e = 0; e <= kmax; ++e) {
    const auto i = static_cast<std::size_t>(e);
    if (cls1[i] != cls2[i]) {
      throw std::logic_error("borwein_b_qexp: character class counts fail to pair");
    }
    x.coeff[static_cast<std::size_t>(scale * e)] = cls0[i] - cls1[i];
  }
  qs_normalize(x);
  return x;
}

QExpansion borwein_c_qexp(long scale, long order) {
  // c(q^s) = sum over Z^2 of q^(s (n^2+nm+m^2+n+m+1/3)); exponents lie on
  // the grid s(3k+1)/3 with k = n^2+nm+m^2+n+m >= 0.
  QExpansion x = blank(3 * order, 3);
  const long kmax = (3 * order / scale - 1) / 3;
  if (kmax < 0) {
    qs_normalize(x);
    return x;
  }
  const long bound =
      static_cast<long>(std::sqrt(4.0 * static_cast<double>(kmax + 1) / 3.0)) + 2;
  for (long n = -bound; n <= bound; ++n) {
    for (long m = -bound; m <= bound; ++m) {
      const long e = n * n + n * m + m * m + n + m;
      if (e < 0 || e > kmax) continue;
      const long idx = scale * (3 * e + 1);
      if (idx < x.truncation) x.coeff[static_cast<std::size_t>(idx)] += 1;
    }
  }
  qs_normalize(x);
  return x;
}

// theta_j(exp(-pi x)) by the plain series; rapid for x >= 1. A single exp
// seeds Q = e^{-pi x}; successive powers Q^{n^2} (and Q^{n^2+n} for theta2)
// come from two-multiply update chains.
BigFloat jacobi_series(int which, const BigFloat& x, const PrecisionContext& ctx) {
  const BigFloat q = exp(-(ctx.pi() * x));
  const BigFloat q2 = q * q;
  const long floor_exp = -static_cast<long>(ctx.working_bits()) - 32;

  if (which == 2) {
    // 2 Q^{1/4} sum_{n>=0} Q^{n^2+n}; exponent increments are 2n+2.
    BigFloat acc = ctx.real(1);
    BigFloat u = ctx.real(1);
    BigFloat step = q2;
    for (long n = 0; n < kMaxSeriesTerms; ++n) {
      u = u * step;
      step = step * q2;
      acc = acc + u;
      if (u.is_zero() || u.exponent() < floor_exp) break;
    }
    BigFloat root = q;
    mpfr_rootn_ui(root.raw(), root.raw(), 4, MPFR_RNDN);
    return 2 * root * acc;
  }

  // theta3/theta4: 1 + 2 sum_{n>=1} (+-1)^n Q^{n^2}; increments are 2n+1.
  BigFloat acc = ctx.real(1);
  BigFloat u = q;
  BigFloat step = q * q2;
  for (long n = 1; n < kMaxSeriesTerms; ++n) {
    if (which == 4 && (n & 1)) {
      acc = acc - 2 * u;
    } else {
      acc = acc + 2 * u;
    }
    if (u.is_zero() || u.exponent() < floor_exp) break;
    u = u * step;
    step = step * q2;
  }
  return acc;
}

// theta_j(exp(-pi x)) for all x > 0 via the inversion
// theta3(x) = x^(-1/2) theta3(1/x), theta2(x) = x^(-1/2) theta4(1/x),
// theta4(x) = x^(-1/2) theta2(1/x)   (arguments written as the parameter x).
BigFloat jacobi_value(int which, const BigFloat& x, const PrecisionContext& ctx) {
  if (x < ctx.real(1)) {
    const int swapped = which == 3 ? 3 : (which == 2 ? 4 : 2);
    return pow(x, rational(-1, 2)) * jacobi_value(swapped, ctx.real(1) / x, ctx);
  }
  return jacobi_series(which, x, ctx);
}

// E(y) = sum_{k in Z} (-1)^k exp(-2 pi y k(3k-1)/2); eta(i y) = e^(-pi y/12) E(y).
BigFloat pentagonal_series(const BigFloat& y, const PrecisionContext& ctx) {
  // sum over generalized pentagonal exponents k(3k-1)/2 and k(3k+1)/2; the
  // exponent increments are 3k+1 and 3k+2, so one exp seeds x = e^{-2 pi y}
  // and two multiply chains produce every term.
  const BigFloat x = exp(-(ctx.real(2) * ctx.pi() * y));
  const BigFloat x3 = x * x * x;
  BigFloat acc = ctx.real(1);
  BigFloat u = x;           // x^{k(3k-1)/2}, k = 1
  BigFloat v = x * x;       // x^{k(3k+1)/2}, k = 1
  BigFloat su = x * x3;     // x^{3k+1}, k = 1
  BigFloat sv = x * x * x3; // x^{3k+2}, k = 1
  const long floor_exp = -static_cast<long>(ctx.working_bits()) - 32;
  for (long k = 1; k < kMaxSeriesTerms; ++k) {
    if (k & 1) {
      acc = acc - (u + v);
    } else {
      acc = acc + (u + v);
    }
    if (u.is_zero() || u.exponent() < floor_exp) break;
    u = u * su;
    v = v * sv;
    su = su * x3;
    sv = sv * x3;
  }
  return acc;
}

// a, b, c at q = exp(-2 pi sigma) from the eta quotients
// b = eta(i sigma)^3 / eta(3 i sigma), c = 3 eta(3 i sigma)^3 / eta(i sigma),
// a = (b^3 + c^3)^(1/3). The eta prefactors are combined symbolically so
// each branch multiplies a single explicit exponential by pentagonal sums.
BigFloat borwein_value(ThetaKind kind, const BigFloat& sigma,
                       const PrecisionContext& ctx, bool allow_inversion) {
  const BigFloat one = ctx.real(1);
  BigFloat b = one;
  BigFloat c = one;
  const bool need_b = kind != ThetaKind::BorweinC;
  const bool need_c = kind != ThetaKind::BorweinB;
  if (!allow_inversion || sigma >= ctx.real(rational(1, 5))) {
    const BigFloat e1 = pentagonal_series(sigma, ctx);
    const BigFloat e3 = pentagonal_series(ctx.real(3) * sigma, ctx);
    if (need_b) b = e1 * e1 * e1 / e3;
    if (need_c) {
      c = ctx.real(3) * exp(ctx.real(rational(-2, 3)) * ctx.pi() * sigma) * e3 * e3 * e3 / e1;
    }
  } else {
    // eta(i sigma) = sigma^(-1/2) eta(i/sigma) applied to both eta factors.
    const BigFloat u = one / sigma;
    const BigFloat eu = pentagonal_series(u, ctx);
    const BigFloat eu3 = pentagonal_series(u / ctx.real(3), ctx);
    if (need_b) {
      b = sqrt(ctx.real(3)) * u * exp(ctx.real(rational(-2, 9)) * ctx.pi() * u) * eu * eu * eu / eu3;
    }
    if (need_c) {
      c = u / sqrt(ctx.real(3)) * eu3 * eu3 * eu3 / eu;
    }
  }
  switch (kind) {
    case ThetaKind::BorweinB:
      return b;
    case ThetaKind::BorweinC:
      return c;
    default:
      return cbrt(b * b * b + c * c * c);
  }
}

BigFloat theta_value_impl(ThetaKind kind, long scale, const BigFloat& t,
                          const PrecisionContext& ctx, bool allow_inversion) {
  if (scale < 1) throw std::domain_error("theta_value: scale must be a positive integer");
  if (!(t.sign() > 0) || !t.is_finite()) {
    throw std::domain_error("theta_value: t must be positive and finite");
  }
  BigFloat tw = make_prec(ctx.working_bits());
  mpfr_set(tw.raw(), t.raw(), MPFR_RNDN);
  tw = tw * scale;
  switch (kind) {
    case ThetaKind::Jacobi2:
    case ThetaKind::Jacobi3:
    case ThetaKind::Jacobi4: {
      const int which = kind == ThetaKind::Jacobi2 ? 2 : (kind == ThetaKind::Jacobi3 ? 3 : 4);
      const BigFloat x = tw / ctx.pi();
      return allow_inversion ? jacobi_value(which, x, ctx) : jacobi_series(which, x, ctx);
    }
    default: {
      const BigFloat sigma = tw / (ctx.real(2) * ctx.pi());
      return borwein_value(kind, sigma, ctx, allow_inversion);
    }
  }
}

}  // namespace

bool is_jacobi(ThetaKind kind) {
  return kind == ThetaKind::Jacobi2 || kind == ThetaKind::Jacobi3 ||
         kind == ThetaKind::Jacobi4;
}

Rational weight(const ThetaProductForm& form) {
  Rational w(0);
  for (const auto& f : form.factors) {
    w += Rational(static_cast<long>(f.exponent)) *
         (is_jacobi(f.kind) ? rational(1, 2) : Rational(1));
  }
  return w;
}

std::string to_string(ThetaKind kind) {
  switch (kind) {
    case ThetaKind::Jacobi2:
      return "theta2";
    case ThetaKind::Jacobi3:
      return "theta3";
    case ThetaKind::Jacobi4:
      return "theta4";
    case ThetaKind::BorweinA:
      return "a";
    case ThetaKind::BorweinB:
      return "b";
    default:
      return "c";
  }
}

std::string to_string(const ThetaProductForm& form) {
  std::ostringstream os;
  os << "(" << to_string(form.prefactor) << ")";
  for (const auto& f : form.factors) {
    os << " * " << to_string(f.kind) << "(q";
    if (f.arg_scale != 1) os << "^" << f.arg_scale;
    os << ")";
    if (f.exponent != 1) os << "^" << f.exponent;
  }
  return os.str();
}

QExpansion theta_qexp(ThetaKind kind, long scale, long order) {
  if (scale < 1) throw std::domain_error("theta_qexp: scale must be a positive integer");
  if (order < 1) throw std::domain_error("theta_qexp: order must be >= 1");
  switch (kind) {
    case ThetaKind::Jacobi2:
      return theta2_qexp(scale, order);
    case ThetaKind::Jacobi3:
      return theta34_qexp(false, scale, order);
    case ThetaKind::Jacobi4:
      return theta34_qexp(true, scale, order);
    case ThetaKind::BorweinA:
      return borwein_a_qexp(scale, order);
    case ThetaKind::BorweinB:
      return borwein_b_qexp(scale, order);
    default:
      return borwein_c_qexp(scale, order);
  }
}

QExpansion jacobi_theta_qexp(ThetaKind kind, long scale, long order) {
  if (!is_jacobi(kind)) {
    throw std::domain_error("jacobi_theta_qexp: kind is not a Jacobi theta");
  }
  return theta_qexp(kind, scale, order);
}

QExpansion borwein_theta_qexp(ThetaKind kind, long scale, long order) {
  if (is_jacobi(kind)) {
    throw std::domain_error("borwein_theta_qexp: kind is not a Borwein theta");
  }
  return theta_qexp(kind, scale, order);
}

QExpansion form_qexp(const ThetaProductForm& form, long order) {
  QExpansion acc = qs_one(order);
  for (const auto& f : form.factors) {
    acc = qs_mul(acc, qs_pow(theta_qexp(f.kind, f.arg_scale, order), f.exponent));
  }
  return qs_scalar(acc, form.prefactor);
}

BigFloat theta_value(ThetaKind kind, long scale, const BigFloat& t,
                     const PrecisionContext& ctx) {
  return theta_value_impl(kind, scale, t, ctx, true);
}

BigFloat form_value(const ThetaProductForm& form, const BigFloat& t,
                    const PrecisionContext& ctx) {
  BigFloat acc = ctx.real(form.prefactor);
  for (const auto& f : form.factors) {
    acc = acc * pow(theta_value(f.kind, f.arg_scale, t, ctx), static_cast<long>(f.exponent));
  }
  return acc;
}

BigFloat theta_numeric(ThetaKind kind, const BigFloat& q, const PrecisionContext& ctx) {
  if (!(q.sign() > 0) || !(q < ctx.real(1))) {
    throw std::domain_error("theta_numeric: q must lie in (0, 1)");
  }
  return theta_value(kind, 1, -log(q), ctx);
}

BigFloat form_numeric(const ThetaProductForm& form, const BigFloat& q,
                      const PrecisionContext& ctx) {
  if (!(q.sign() > 0) || !(q < ctx.real(1))) {
    throw std::domain_error("form_numeric: q must lie in (0, 1)");
  }
  return form_value(form, -log(q), ctx);
}

namespace detail {

BigFloat theta_value_direct(ThetaKind kind, long scale, const BigFloat& t,
                            const PrecisionContext& ctx) {
  return theta_value_impl(kind, scale, t, ctx, false);
}

}  // namespace detail

}  // namespace ltheta
