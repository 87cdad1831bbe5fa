#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "ltheta/gamma_tools.hpp"

using namespace ltheta;

namespace {
const PrecisionContext ctx = PrecisionContext::make(30);
}

TEST_CASE("gamma at benchmark points") {
  CHECK(agreed_digits(gamma(rational(1, 2), ctx), sqrt(ctx.pi()), 48) >= 44);
  CHECK(agreed_digits(gamma(Rational(5), ctx), ctx.real(24), 48) >= 44);
  CHECK(agreed_digits(gamma(Rational(1), ctx), ctx.real(1), 48) >= 44);
  // Gamma(1/3) to published digits.
  CHECK(agreed_digits(gamma(rational(1, 3), ctx),
                      ctx.real("2.6789385347077476336556929409747"), 48) >= 29);
  // Gamma(1/4) to published digits.
  CHECK(agreed_digits(gamma(rational(1, 4), ctx),
                      ctx.real("3.625609908221908311930685155867"), 48) >= 29);
}

TEST_CASE("functional equation on random rationals") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 12);
  for (int i = 0; i < 20; ++i) {
    const Rational x = rational(num(rng), den(rng));
    const BigFloat lhs = gamma(x + 1, ctx);
    const BigFloat rhs = ctx.real(x) * gamma(x, ctx);
    CHECK(agreed_digits(lhs, rhs, 48) >= 42);
  }
}

TEST_CASE("reflection formula") {
  for (const auto& x : {rational(1, 2), rational(1, 4), rational(1, 3)}) {
    const auto [lhs, rhs] = reflection_check(x, ctx);
    CHECK(agreed_digits(lhs, rhs, 48) >= 42);
  }
  std::mt19937_64 rng(123);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<long> den(2, 64);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    const auto [lhs, rhs] = reflection_check(rational(num(rng), d), ctx);
    CHECK(agreed_digits(lhs, rhs, 48) >= 40);
  }
}

TEST_CASE("multiplication formula") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<long> num(1, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (unsigned m : {2u, 3u}) {
    for (int i = 0; i < 10; ++i) {
      const auto [lhs, rhs] = multiplication_check(rational(num(rng), den(rng)), m, ctx);
      CHECK(agreed_digits(lhs, rhs, 48) >= 40);
    }
  }
  const auto [lhs, rhs] = multiplication_check(rational(19, 9), 3, ctx);
  CHECK(agreed_digits(lhs, rhs, 48) >= 42);
}

TEST_CASE("pochhammer is the exact rising factorial") {
  CHECK(pochhammer(rational(1, 2), 3) == rational(15, 8));
  CHECK(pochhammer(Rational(1), 5) == Rational(120));
  CHECK(pochhammer(rational(-3, 2), 2) == rational(3, 4));
  CHECK(pochhammer(rational(2, 3), 0) == Rational(1));
  // Numeric consistency: (a)_n = Gamma(a+n) / Gamma(a).
  const Rational a = rational(3, 7);
  const BigFloat lhs = ctx.real(pochhammer(a, 11));
  const BigFloat rhs = gamma(a + 11, ctx) / gamma(a, ctx);
  CHECK(agreed_digits(lhs, rhs, 48) >= 42);
}

TEST_CASE("gamma brackets evaluate and simplify") {
  const GammaBracket half_pi{{rational(3, 2), rational(1, 2)}, {Rational(1), Rational(1)}};
  CHECK(agreed_digits(gamma_bracket_eval(half_pi, ctx), ctx.pi() / 2, 48) >= 42);

  const GammaBracket redundant{{rational(1, 2), rational(1, 3)}, {rational(1, 3)}};
  const GammaBracket simple = bracket_simplify(redundant);
  CHECK(simple.num.size() == 1);
  CHECK(simple.den.empty());
  CHECK(agreed_digits(gamma_bracket_eval(simple, ctx), sqrt(ctx.pi()), 48) >= 42);

  const GammaBracket a{{rational(1, 3)}, {rational(2, 3)}};
  const GammaBracket b{{rational(2, 3)}, {rational(1, 3)}};
  const GammaBracket prod = bracket_simplify(bracket_mul(a, b));
  CHECK(prod.num.empty());
  CHECK(prod.den.empty());
  CHECK(agreed_digits(gamma_bracket_eval(prod, ctx), ctx.real(1), 48) >= 42);
}

TEST_CASE("eighth-argument bracket reduces to the quarter-gamma constant") {
  // Gamma[1/4, 5/8, 1/2 / 7/8, 3/4, 3/4] = sqrt(sqrt(2)-1) Gamma(1/4)^4 / (2 pi^2),
  // a pure gamma identity following from reflection and duplication at eighths.
  const PrecisionContext wide = PrecisionContext::make(40);
  const GammaBracket br{{rational(1, 4), rational(5, 8), rational(1, 2)},
                        {rational(7, 8), rational(3, 4), rational(3, 4)}};
  const BigFloat lhs = gamma_bracket_eval(br, wide);
  const BigFloat g = gamma(rational(1, 4), wide);
  const BigFloat rhs = sqrt(sqrt(wide.real(2)) - 1) * pow(g, 4) /
                       (wide.real(2) * wide.pi() * wide.pi());
  CHECK(agreed_digits(lhs, rhs, 60) >= 50);
}

TEST_CASE("recomputation at higher precision is stable") {
  const PrecisionContext wide = PrecisionContext::make(30, 15, 70);
  const BigFloat a = gamma(rational(3, 8), ctx);
  const BigFloat b = gamma(rational(3, 8), wide);
  CHECK(agreed_digits(a, b, 60) >= ctx.target_digits);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS((void)gamma(Rational(0), ctx), std::domain_error);
  CHECK_THROWS_AS((void)gamma(rational(-3, 2), ctx), std::domain_error);
  CHECK_THROWS_AS((void)gamma(Rational(-4), ctx), std::domain_error);
  const GammaBracket bad{{Rational(0)}, {}};
  CHECK_THROWS_AS((void)gamma_bracket_eval(bad, ctx), std::domain_error);
}
