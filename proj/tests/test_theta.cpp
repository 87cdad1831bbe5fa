#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ltheta/catalog.hpp"
#include "ltheta/gamma_tools.hpp"
#include "ltheta/qseries.hpp"
#include "ltheta/theta.hpp"

using namespace ltheta;

namespace {
const PrecisionContext ctx = PrecisionContext::make(30);
}

TEST_CASE("jacobi theta expansions") {
  const QExpansion t3 = theta_qexp(ThetaKind::Jacobi3, 1, 12);
  CHECK(qs_coeff(t3, Rational(0)) == 1);
  CHECK(qs_coeff(t3, Rational(1)) == 2);
  CHECK(qs_coeff(t3, Rational(2)) == 0);
  CHECK(qs_coeff(t3, Rational(4)) == 2);
  CHECK(qs_coeff(t3, Rational(9)) == 2);

  const QExpansion t4 = theta_qexp(ThetaKind::Jacobi4, 1, 12);
  CHECK(qs_coeff(t4, Rational(0)) == 1);
  CHECK(qs_coeff(t4, Rational(1)) == -2);
  CHECK(qs_coeff(t4, Rational(4)) == 2);
  CHECK(qs_coeff(t4, Rational(9)) == -2);

  const QExpansion t2 = theta_qexp(ThetaKind::Jacobi2, 1, 12);
  CHECK(qs_coeff(t2, rational(1, 4)) == 2);
  CHECK(qs_coeff(t2, rational(9, 4)) == 2);
  CHECK(qs_coeff(t2, Rational(1)) == 0);
}

TEST_CASE("cubic theta expansions") {
  const QExpansion a = theta_qexp(ThetaKind::BorweinA, 1, 8);
  CHECK(qs_coeff(a, Rational(0)) == 1);
  CHECK(qs_coeff(a, Rational(1)) == 6);
  CHECK(qs_coeff(a, Rational(2)) == 0);
  CHECK(qs_coeff(a, Rational(3)) == 6);
  CHECK(qs_coeff(a, Rational(4)) == 6);
  CHECK(qs_coeff(a, Rational(7)) == 12);

  const QExpansion b = theta_qexp(ThetaKind::BorweinB, 1, 8);
  CHECK(qs_coeff(b, Rational(0)) == 1);
  CHECK(qs_coeff(b, Rational(1)) == -3);
  CHECK(qs_coeff(b, Rational(2)) == 0);
  CHECK(qs_coeff(b, Rational(3)) == 6);
  CHECK(qs_coeff(b, Rational(4)) == -3);
  CHECK(qs_coeff(b, Rational(7)) == -6);

  const QExpansion c3 = theta_qexp(ThetaKind::BorweinC, 3, 8);
  CHECK(c3.denom == 1);
  CHECK(qs_coeff(c3, Rational(1)) == 3);
  CHECK(qs_coeff(c3, Rational(4)) == 3);
  CHECK(qs_coeff(c3, Rational(7)) == 6);

  const QExpansion c = theta_qexp(ThetaKind::BorweinC, 1, 4);
  CHECK(qs_coeff(c, rational(1, 3)) == 3);
  CHECK(qs_coeff(c, rational(4, 3)) == 3);
  CHECK(qs_coeff(c, rational(7, 3)) == 6);
}

TEST_CASE("family-checked accessors reject the other family") {
  CHECK_THROWS_AS((void)jacobi_theta_qexp(ThetaKind::BorweinA, 1, 8), std::domain_error);
  CHECK_THROWS_AS((void)borwein_theta_qexp(ThetaKind::Jacobi2, 1, 8), std::domain_error);
  CHECK(qs_equal(jacobi_theta_qexp(ThetaKind::Jacobi3, 1, 8),
                 theta_qexp(ThetaKind::Jacobi3, 1, 8)));
  CHECK(qs_equal(borwein_theta_qexp(ThetaKind::BorweinB, 1, 8),
                 theta_qexp(ThetaKind::BorweinB, 1, 8)));
}

TEST_CASE("every catalog form has weight 3") {
  for (const auto& e : catalog()) {
    CHECK(weight(e.form) == Rational(3));
  }
}

TEST_CASE("catalog form expansions are normalized") {
  const QExpansion xiii = form_qexp(catalog_entry("T1.xiii").form, 4);
  CHECK(qs_coeff(xiii, Rational(1)) == 1);
  CHECK(qs_coeff(xiii, Rational(2)) == -4);

  const QExpansion t2i = form_qexp(catalog_entry("T2.i").form, 3);
  CHECK(t2i.denom == 1);
  CHECK(qs_coeff(t2i, Rational(1)) == 1);
}

TEST_CASE("theta3 null value at q = exp(-pi)") {
  // theta3(exp(-pi)) = pi^{1/4} / Gamma(3/4)
  const BigFloat lhs = theta_value(ThetaKind::Jacobi3, 1, ctx.pi(), ctx);
  const BigFloat rhs = pow(ctx.pi(), rational(1, 4)) / gamma(rational(3, 4), ctx);
  CHECK(agreed_digits(lhs, rhs, 48) >= 42);
  // Self-dual point: theta2 = theta4 there.
  const BigFloat t2 = theta_value(ThetaKind::Jacobi2, 1, ctx.pi(), ctx);
  const BigFloat t4 = theta_value(ThetaKind::Jacobi4, 1, ctx.pi(), ctx);
  CHECK(agreed_digits(t2, t4, 48) >= 42);
}

TEST_CASE("modular inversion agrees with the direct series") {
  // t below pi forces the transformed branch for Jacobi kinds; the direct
  // series still converges there, so both routes must agree.
  const BigFloat t = ctx.real(rational(9, 10)) * ctx.pi();
  for (const auto kind : {ThetaKind::Jacobi2, ThetaKind::Jacobi3, ThetaKind::Jacobi4}) {
    const BigFloat inv = theta_value(kind, 1, t, ctx);
    const BigFloat direct = detail::theta_value_direct(kind, 1, t, ctx);
    CHECK(agreed_digits(inv, direct, 48) >= 40);
  }
  // sigma = 0.9/(2 pi) < 1/5 exercises the inverted eta branch.
  const BigFloat tb = ctx.real(rational(9, 10));
  for (const auto kind :
       {ThetaKind::BorweinA, ThetaKind::BorweinB, ThetaKind::BorweinC}) {
    const BigFloat inv = theta_value(kind, 1, tb, ctx);
    const BigFloat direct = detail::theta_value_direct(kind, 1, tb, ctx);
    CHECK(agreed_digits(inv, direct, 48) >= 38);
  }
}

TEST_CASE("numeric values match partial sums of the exact expansion") {
  const BigFloat q = ctx.real(rational(3, 10));
  for (const auto kind : {ThetaKind::Jacobi2, ThetaKind::Jacobi3, ThetaKind::Jacobi4,
                          ThetaKind::BorweinA, ThetaKind::BorweinB, ThetaKind::BorweinC}) {
    const BigFloat direct = theta_numeric(kind, q, ctx);
    const BigFloat series = qs_eval(theta_qexp(kind, 1, 200), q, ctx);
    CHECK(agreed_digits(direct, series, 48) >= 40);
  }
}

TEST_CASE("jacobi identity numerically across the unit interval") {
  for (int i = 1; i <= 20; ++i) {
    const BigFloat q = ctx.real(rational(i, 21));
    const BigFloat t2 = theta_numeric(ThetaKind::Jacobi2, q, ctx);
    const BigFloat t3 = theta_numeric(ThetaKind::Jacobi3, q, ctx);
    const BigFloat t4 = theta_numeric(ThetaKind::Jacobi4, q, ctx);
    const BigFloat res = abs(pow(t3, 4) - pow(t2, 4) - pow(t4, 4));
    CHECK(res < ctx.pow10(-38) * pow(t3, 4));
  }
}

TEST_CASE("cubic identity numerically across the unit interval") {
  for (int i = 1; i <= 20; ++i) {
    const BigFloat q = ctx.real(rational(i, 21));
    const BigFloat a = theta_numeric(ThetaKind::BorweinA, q, ctx);
    const BigFloat b = theta_numeric(ThetaKind::BorweinB, q, ctx);
    const BigFloat c = theta_numeric(ThetaKind::BorweinC, q, ctx);
    const BigFloat res = abs(pow(a, 3) - pow(b, 3) - pow(c, 3));
    CHECK(res < ctx.pow10(-38) * pow(a, 3));
  }
}

TEST_CASE("form values match evaluated expansions") {
  const auto& xiii = catalog_entry("T1.xiii").form;
  for (const auto& qr : {rational(1, 10), rational(1, 20)}) {
    const BigFloat q = ctx.real(qr);
    const BigFloat direct = form_numeric(xiii, q, ctx);
    const BigFloat series = qs_eval(form_qexp(xiii, 140), q, ctx);
    CHECK(agreed_digits(direct, series, 48) >= 40);
  }
  const auto& t2iv = catalog_entry("T2.iv").form;
  const BigFloat q = ctx.real(rational(1, 10));
  CHECK(agreed_digits(form_numeric(t2iv, q, ctx),
                      qs_eval(form_qexp(t2iv, 140), q, ctx), 48) >= 40);
}

TEST_CASE("value entry points reject bad arguments") {
  CHECK_THROWS_AS((void)theta_value(ThetaKind::Jacobi3, 0, ctx.real(1), ctx),
                  std::domain_error);
  CHECK_THROWS_AS((void)theta_value(ThetaKind::Jacobi3, 1, ctx.real(0), ctx),
                  std::domain_error);
  CHECK_THROWS_AS((void)theta_numeric(ThetaKind::Jacobi3, ctx.real(1), ctx),
                  std::domain_error);
  CHECK_THROWS_AS((void)theta_numeric(ThetaKind::Jacobi3, ctx.real(0), ctx),
                  std::domain_error);
}
