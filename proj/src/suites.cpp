#include "ltheta/suites.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "ltheta/catalog.hpp"
#include "ltheta/gamma_tools.hpp"
#include "ltheta/hyperg.hpp"
#include "ltheta/lvalue.hpp"
#include "ltheta/qseries.hpp"
#include "ltheta/theta.hpp"

namespace ltheta {

namespace {

// Uniform rational in (0, 2] with denominator at most max_den.
Rational random_unit(std::mt19937_64& rng, long max_den = 12) {
  std::uniform_int_distribution<long> pick_den(1, max_den);
  const long den = pick_den(rng);
  std::uniform_int_distribution<long> pick_num(1, 2 * den);
  return rational(pick_num(rng), den);
}

std::string through_order(long order) {
  return "exact through q^" + std::to_string(order);
}

}  // namespace

std::vector<SuiteResult> exact_identity_suites(long order) {
  std::vector<SuiteResult> out;
  const auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };

  const QExpansion t2 = theta_qexp(ThetaKind::Jacobi2, 1, order);
  const QExpansion t3 = theta_qexp(ThetaKind::Jacobi3, 1, order);
  const QExpansion t4 = theta_qexp(ThetaKind::Jacobi4, 1, order);
  add("jacobi-identity", qs_equal(qs_pow(t3, 4), qs_add(qs_pow(t2, 4), qs_pow(t4, 4))),
      through_order(order));
  add("theta34-double-argument",
      qs_equal(qs_mul(t3, t4), qs_pow(theta_qexp(ThetaKind::Jacobi4, 2, order), 2)),
      through_order(order));

  const QExpansion a = theta_qexp(ThetaKind::BorweinA, 1, order);
  const QExpansion b = theta_qexp(ThetaKind::BorweinB, 1, order);
  const QExpansion c = theta_qexp(ThetaKind::BorweinC, 1, order);
  add("cubic-identity", qs_equal(qs_pow(a, 3), qs_add(qs_pow(b, 3), qs_pow(c, 3))),
      through_order(order));
  add("cubic-a-triple",
      qs_equal(theta_qexp(ThetaKind::BorweinA, 3, order),
               qs_scalar(qs_add(a, qs_scalar(b, Rational(2))), rational(1, 3))),
      through_order(order));
  add("cubic-c-triple",
      qs_equal(theta_qexp(ThetaKind::BorweinC, 3, order),
               qs_scalar(qs_sub(a, b), rational(1, 3))),
      through_order(order));
  const QExpansion bb = qs_mul(b, b);
  add("cubic-b-triple",
      qs_equal(qs_pow(theta_qexp(ThetaKind::BorweinB, 3, order), 3),
               qs_scalar(qs_add(qs_add(qs_mul(qs_mul(a, a), b), qs_mul(a, bb)),
                                qs_mul(bb, b)),
                         rational(1, 3))),
      through_order(order));

  add("remark-splitting",
      qs_equal(form_qexp(remark_form(), order),
               qs_add(form_qexp(catalog_entry("T1.iv").form, order),
                      qs_scalar(form_qexp(catalog_entry("T1.xiv").form, order),
                                Rational(16)))),
      through_order(order));
  return out;
}

std::vector<SuiteResult> numeric_identity_suites(std::uint64_t seed,
                                                 const PrecisionContext& ctx) {
  std::vector<SuiteResult> out;
  const auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  std::mt19937_64 rng(seed);

  const int budget = ctx.target_digits + ctx.guard_digits;
  const BigFloat sum_tol = ctx.pow10(-std::min(20, budget - 10));
  const BigFloat residual_tol = ctx.pow10(-std::min(25, budget - 10));
  const int gamma_agree = ctx.target_digits - 5;

  {
    bool ok = true;
    BigFloat worst = ctx.real(0);
    for (int i = 0; i < 30; ++i) {
      const Rational a = random_unit(rng);
      const Rational b = random_unit(rng);
      const Rational c = a + b + random_unit(rng);
      const HypParams p{{a, b}, {c}};
      const BigFloat lhs = pfq_at_one(p, ctx, AtOneMethod::Integral).value;
      const BigFloat rhs = gamma_bracket_eval(gauss_sum(a, b, c), ctx);
      const BigFloat rel = abs(lhs - rhs) / abs(rhs);
      worst = max(worst, rel);
      if (!(rel < sum_tol)) ok = false;
    }
    add("gauss-summation", ok, "30 random parameter sets, worst rel err " + worst.str(3));
  }

  {
    bool ok = true;
    BigFloat worst = ctx.real(0);
    for (int i = 0; i < 20; ++i) {
      const Rational a = random_unit(rng);
      const Rational b = random_unit(rng);
      Rational base = (a + b - 1) / 2;
      if (base < 0) base = Rational(0);
      const Rational c = base + random_unit(rng);
      HypParams p;
      p.upper = {a, b, c};
      p.lower = {(Rational(1) + a + b) / 2, Rational(2) * c};
      const BigFloat lhs = pfq_at_one(p, ctx, AtOneMethod::Integral).value;
      const BigFloat rhs = gamma_bracket_eval(watson_match(p), ctx);
      const BigFloat rel = abs(lhs - rhs) / abs(rhs);
      worst = max(worst, rel);
      if (!(rel < sum_tol)) ok = false;
    }
    add("watson-summation", ok, "20 random parameter sets, worst rel err " + worst.str(3));
  }

  {
    bool ok = true;
    BigFloat worst = ctx.real(0);
    std::uniform_int_distribution<long> pick_split(6, 18);
    for (int i = 0; i < 20; ++i) {
      const Rational a = random_unit(rng);
      const Rational b = random_unit(rng);
      const Rational c = random_unit(rng);
      const Rational s = Rational(1) + random_unit(rng) / 2;  // excess in (1, 2]
      const Rational total = a + b + c + s;
      const Rational e = total * pick_split(rng) / 24;
      const Rational f = total - e;
      const BigFloat z = (i % 2 == 0) ? ctx.real(rational(1, 2)) : ctx.real(1);
      const BigFloat res = contiguous_check(a, b, c, e, f, z, ctx);
      worst = max(worst, res);
      if (!(res < residual_tol)) ok = false;
    }
    add("contiguous-relation", ok,
        "20 random parameter sets at z = 1/2 and z = 1, worst residual " + worst.str(3));
  }

  {
    bool ok = true;
    BigFloat worst = ctx.real(0);
    const Rational as[] = {rational(1, 3), rational(1, 2), Rational(1), rational(3, 2)};
    const Rational xs[] = {rational(1, 10), rational(3, 10), rational(1, 2), rational(7, 10)};
    for (const auto& a : as) {
      for (const auto& x : xs) {
        const BigFloat res = cubic_transform_check(a, ctx.real(x), ctx);
        worst = max(worst, res);
        if (!(res < residual_tol)) ok = false;
      }
    }
    add("cubic-transformation", ok, "4x4 (a, x) grid, worst residual " + worst.str(3));
  }

  {
    bool ok = true;
    int worst = ctx.working_digits;
    for (int i = 0; i < 50; ++i) {
      std::uniform_int_distribution<long> pick_den(2, 64);
      const long den = pick_den(rng);
      std::uniform_int_distribution<long> pick_num(1, den - 1);
      const auto [lhs, rhs] = reflection_check(rational(pick_num(rng), den), ctx);
      const int agreed = agreed_digits(lhs, rhs, ctx.working_digits);
      worst = std::min(worst, agreed);
      if (agreed < gamma_agree) ok = false;
    }
    add("gamma-reflection", ok,
        "50 random points, worst agreement " + std::to_string(worst) + " digits");
  }

  {
    bool ok = true;
    int worst = ctx.working_digits;
    for (unsigned m : {2u, 3u}) {
      for (int i = 0; i < 10; ++i) {
        const auto [lhs, rhs] = multiplication_check(random_unit(rng), m, ctx);
        const int agreed = agreed_digits(lhs, rhs, ctx.working_digits);
        worst = std::min(worst, agreed);
        if (agreed < gamma_agree) ok = false;
      }
    }
    add("gamma-multiplication", ok,
        "m = 2, 3 at 10 random points each, worst agreement " + std::to_string(worst) +
            " digits");
  }

  return out;
}

}  // namespace ltheta
