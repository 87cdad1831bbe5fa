#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ltheta/catalog.hpp"
#include "ltheta/gamma_tools.hpp"
#include "ltheta/hyperg.hpp"
#include "ltheta/theta.hpp"

using namespace ltheta;

namespace {
const PrecisionContext ctx = PrecisionContext::make(30);
}

TEST_CASE("series basics") {
  const HypParams p{{rational(1, 2), rational(1, 3)}, {rational(5, 4)}};
  CHECK(agreed_digits(pfq_series(p, ctx.real(0), ctx).value, ctx.real(1), 48) >= 46);

  // 0F0[;; z] = e^z
  const HypParams expo{{}, {}};
  CHECK(agreed_digits(pfq_series(expo, ctx.real(rational(3, 5)), ctx).value,
                      exp(ctx.real(rational(3, 5))), 48) >= 42);

  // 1F0[a;; z] = (1-z)^(-a)
  const HypParams bino{{rational(1, 3)}, {}};
  CHECK(agreed_digits(pfq_series(bino, ctx.real(rational(7, 10)), ctx).value,
                      pow(ctx.real(rational(3, 10)), rational(-1, 3)), 48) >= 42);
}

TEST_CASE("series input validation") {
  const HypParams p{{rational(1, 2), rational(1, 3)}, {rational(5, 4)}};
  CHECK_THROWS_AS((void)pfq_series(p, ctx.real(1), ctx), std::domain_error);
  CHECK_THROWS_AS((void)pfq_series(p, ctx.real(-1) / 2, ctx), std::domain_error);
  const HypParams bad_lower{{rational(1, 2)}, {Rational(-2)}};
  CHECK_THROWS_AS((void)pfq_series(bad_lower, ctx.real(1) / 2, ctx), std::domain_error);
  const HypParams bad_shape{{Rational(1), Rational(1), Rational(1)}, {}};
  CHECK_THROWS_AS((void)pfq_series(bad_shape, ctx.real(1) / 2, ctx), std::domain_error);
}

TEST_CASE("terminating series are summed exactly") {
  // 2F1[-3, 1/2; 2; z] is a cubic polynomial.
  const HypParams p{{Rational(-3), rational(1, 2)}, {Rational(2)}};
  const BigFloat z = ctx.real(rational(4, 5));
  const BigFloat got = pfq_series(p, z, ctx).value;
  // sum_k (-3)_k (1/2)_k / ((2)_k k!) z^k, four terms
  BigFloat want = ctx.real(0);
  for (unsigned long k = 0; k <= 3; ++k) {
    Rational term = pochhammer(Rational(-3), k) * pochhammer(rational(1, 2), k);
    term /= pochhammer(Rational(2), k) * pochhammer(Rational(1), k);
    want = want + ctx.real(term) * pow(z, static_cast<long>(k));
  }
  CHECK(agreed_digits(got, want, 48) >= 44);
}

TEST_CASE("tail bound dominates the actual truncation error") {
  const HypParams p{{rational(1, 2), rational(1, 3)}, {rational(5, 4)}};
  const BigFloat z = ctx.real(rational(1, 2));
  const HypEvalReport rep = pfq_series(p, z, ctx);
  const PrecisionContext wide = PrecisionContext::make(30, 15, 80);
  const HypEvalReport rep_wide = pfq_series(p, wide.real(rational(1, 2)), wide);
  CHECK(abs(rep.value - rep_wide.value) <= rep.tail_bound + ctx.pow10(-44));
}

TEST_CASE("connection-formula 2F1 agrees with the direct series past 1/2") {
  struct Triple {
    Rational a, b, c;
  };
  // s = c-a-b covers: noninteger positive, integer 1, integer 0, negative
  // half-integer (Euler flip), integer 1 again with asymmetric parameters,
  // and integer 2.
  const Triple cases[] = {
      {rational(1, 3), rational(1, 2), rational(5, 4)},
      {rational(1, 2), rational(1, 2), Rational(2)},
      {rational(1, 2), rational(1, 2), Rational(1)},
      {rational(1, 3), rational(2, 3), rational(1, 2)},
      {rational(1, 4), rational(3, 4), Rational(2)},
      {rational(1, 5), rational(1, 5), rational(12, 5)},
  };
  for (const auto& t : cases) {
    const Hyp2F1 f(t.a, t.b, t.c, ctx);
    const HypParams p{{t.a, t.b}, {t.c}};
    for (const auto& xr : {rational(11, 20), rational(7, 10)}) {
      const BigFloat x = ctx.real(xr);
      const BigFloat via_connection = f.eval(x);
      const BigFloat via_series = pfq_series(p, x, ctx).value;
      CHECK(agreed_digits(via_connection, via_series, 48) >= 38);
    }
    // Direct branch sanity below the crossover.
    const BigFloat x = ctx.real(rational(1, 5));
    CHECK(agreed_digits(f.eval(x), pfq_series(p, x, ctx).value, 48) >= 42);
  }
}

TEST_CASE("gauss summation") {
  const GammaBracket half_pi = gauss_sum(rational(1, 2), rational(1, 2), rational(3, 2));
  CHECK(agreed_digits(gamma_bracket_eval(half_pi, ctx), ctx.pi() / 2, 48) >= 42);
  CHECK_THROWS_AS((void)gauss_sum(Rational(1), Rational(1), Rational(2)),
                  std::domain_error);
  CHECK_THROWS_AS((void)gauss_sum(rational(1, 2), rational(1, 2), Rational(1)),
                  std::domain_error);
}

TEST_CASE("values at one: closed forms and cross-route agreement") {
  // 3F2[1, 1/2, 1/2; 3/2, 1; 1] -> cancellation to a Gauss-summable 2F1.
  const HypParams p1{{Rational(1), rational(1, 2), rational(1, 2)},
                     {rational(3, 2), Rational(1)}};
  const HypEvalReport r1 = pfq_at_one(p1, ctx);
  CHECK(r1.method == HypMethod::ClosedForm);
  CHECK(agreed_digits(r1.value, ctx.pi() / 2, 48) >= 40);
  CHECK(agreed_digits(pfq_at_one(p1, ctx, AtOneMethod::Integral).value, ctx.pi() / 2,
                      48) >= 38);

  // 3F2[1/2, 1/2, 1/2; 1, 1; 1] = Gamma(1/4)^4 / (4 pi^3)
  const HypParams p2{{rational(1, 2), rational(1, 2), rational(1, 2)},
                     {Rational(1), Rational(1)}};
  const BigFloat g = gamma(rational(1, 4), ctx);
  const BigFloat closed = pow(g, 4) / (ctx.real(4) * pow(ctx.pi(), 3));
  CHECK(agreed_digits(pfq_at_one(p2, ctx, AtOneMethod::Integral).value, closed, 48) >= 38);

  // 3F2[1/3, 1/3, 2/3; 2/3, 1; 1] -> 2F1[1/3, 1/3; 1; 1] = Gamma[1, 1/3 / 2/3, 2/3]
  const HypParams p3{{rational(1, 3), rational(1, 3), rational(2, 3)},
                     {rational(2, 3), Rational(1)}};
  const BigFloat want =
      gamma(rational(1, 3), ctx) / pow(gamma(rational(2, 3), ctx), 2);
  const HypEvalReport r3 = pfq_at_one(p3, ctx);
  CHECK(r3.method == HypMethod::ClosedForm);
  CHECK(agreed_digits(r3.value, want, 48) >= 40);
  CHECK(agreed_digits(pfq_at_one(p3, ctx, AtOneMethod::Integral).value, want, 48) >= 38);

  // Levin-accelerated series as the value of record.
  const HypParams p4{{rational(1, 2), rational(1, 3)}, {rational(11, 6)}};
  const HypEvalReport r4 = pfq_at_one(p4, ctx, AtOneMethod::Series);
  CHECK(r4.method == HypMethod::AcceleratedSeries);
  const BigFloat gauss = gamma_bracket_eval(
      gauss_sum(rational(1, 2), rational(1, 3), rational(11, 6)), ctx);
  CHECK(agreed_digits(r4.value, gauss, 48) >= 20);
}

TEST_CASE("divergent shapes at one are rejected") {
  const HypParams diverging{{Rational(1), Rational(1)}, {Rational(1)}};
  CHECK_THROWS_AS((void)pfq_at_one(diverging, ctx), std::domain_error);
  const HypParams negative_excess{{Rational(2), Rational(3)}, {Rational(4)}};
  CHECK_THROWS_AS((void)pfq_at_one(negative_excess, ctx), std::domain_error);
}

TEST_CASE("watson summation and shape matcher") {
  // The instance behind one closed-form table entry: a = 1/4, b = c = 1/2.
  const GammaBracket w = watson_sum(rational(1, 4), rational(1, 2), rational(1, 2));
  const HypParams p{{rational(1, 4), rational(1, 2), rational(1, 2)},
                    {rational(7, 8), Rational(1)}};
  CHECK(agreed_digits(gamma_bracket_eval(w, ctx),
                      pfq_at_one(p, ctx, AtOneMethod::Integral).value, 48) >= 38);

  // Matcher accepts any labeling whose lower parameters fit literally.
  const HypParams q{{rational(3, 4), rational(1, 2), rational(1, 2)},
                    {Rational(1), rational(3, 2)}};
  const GammaBracket m = watson_match(q);
  CHECK(agreed_digits(gamma_bracket_eval(m, ctx),
                      pfq_at_one(q, ctx, AtOneMethod::Integral).value, 48) >= 38);

  const HypParams bad{{rational(1, 2), rational(1, 2), rational(1, 2)},
                      {rational(5, 8), Rational(1)}};
  CHECK_THROWS_AS((void)watson_match(bad), std::invalid_argument);
}

TEST_CASE("contiguous relation residuals") {
  // Instance used by the remark chain.
  const BigFloat res1 = contiguous_check(rational(1, 4), rational(1, 2), rational(1, 2),
                                         rational(3, 2), Rational(1), ctx.real(1), ctx);
  CHECK(res1 < ctx.pow10(-25));

  // Degenerate a = b: the relation collapses to 0 = 0.
  const BigFloat res2 = contiguous_check(rational(3, 7), rational(3, 7), rational(1, 2),
                                         rational(6, 5), Rational(1),
                                         ctx.real(rational(1, 2)), ctx);
  CHECK(res2 < ctx.pow10(-40));

  const BigFloat res3 = contiguous_check(rational(1, 3), rational(3, 4), rational(6, 5),
                                         rational(7, 4), rational(13, 10),
                                         ctx.real(rational(1, 2)), ctx);
  CHECK(res3 < ctx.pow10(-25));
}

TEST_CASE("cubic transformation residuals") {
  CHECK(cubic_transform_check(rational(1, 2), ctx.real(0), ctx) < ctx.pow10(-44));
  CHECK(cubic_transform_check(Rational(1), ctx.real(rational(3, 10)), ctx) <
        ctx.pow10(-25));
  CHECK(cubic_transform_check(rational(1, 2), ctx.real(rational(1, 2)), ctx) <
        ctx.pow10(-25));
  CHECK(cubic_transform_check(rational(3, 2), ctx.real(rational(7, 10)), ctx) <
        ctx.pow10(-25));
}

TEST_CASE("cubic theta parametrization at a sample nome") {
  const BigFloat q = ctx.real(rational(1, 10));
  const BigFloat a = theta_numeric(ThetaKind::BorweinA, q, ctx);
  const BigFloat c = theta_numeric(ThetaKind::BorweinC, q, ctx);
  const BigFloat alpha = pow(c, 3) / pow(a, 3);
  const HypParams p{{rational(1, 3), rational(2, 3)}, {Rational(1)}};
  CHECK(agreed_digits(pfq_series(p, alpha, ctx).value, a, 48) >= 35);
}

TEST_CASE("euler integral agrees with the accelerated series on catalog 3F2s") {
  for (const auto& e : catalog()) {
    if (e.rhs.hyp_upper.empty()) continue;
    const HypParams p{e.rhs.hyp_upper, e.rhs.hyp_lower};
    const HypEvalReport via_integral = pfq_at_one(p, ctx, AtOneMethod::Integral);
    const HypEvalReport via_series = pfq_at_one(p, ctx, AtOneMethod::Series);
    CHECK(agreed_digits(via_integral.value, via_series.value, 48) >= 10);
  }
}
