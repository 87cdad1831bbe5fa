#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "ltheta/catalog.hpp"
#include "ltheta/gamma_tools.hpp"
#include "ltheta/lvalue.hpp"
#include "ltheta/theta.hpp"

using namespace ltheta;

namespace {
const PrecisionContext ctx = PrecisionContext::make(30);

bool same(const std::vector<Rational>& got, const std::vector<Rational>& want) {
  return got == want;
}
}  // namespace

TEST_CASE("pullback structure: plain Jacobi product") {
  // (1/16) theta2(q)^4 theta4(q)^2: r = 1, s = 1/2.
  const PullbackResult pr = alpha_pullback(catalog_entry("T1.xiii"));
  CHECK(pr.scale == rational(1, 16));
  CHECK(same(pr.constant.num, {Rational(1), rational(1, 2)}));
  CHECK(same(pr.constant.den, {rational(3, 2)}));
  REQUIRE(pr.hyp.has_value());
  CHECK(same(pr.hyp->upper, {rational(1, 2), rational(1, 2), Rational(1)}));
  CHECK(same(pr.hyp->lower, {Rational(1), rational(3, 2)}));
}

TEST_CASE("pullback structure: theta4 at twice the base scale folds in") {
  // (1/2) theta2(q^4) theta4(q^8)^5: the square-argument factor contributes
  // 5/2 to each of the theta3 and theta4 exponents, so r = 1/4, s = 5/8.
  const PullbackResult pr = alpha_pullback(catalog_entry("T1.v"));
  CHECK(pr.scale == rational(1, 8));
  CHECK(same(pr.constant.num, {rational(1, 4), rational(5, 8)}));
  CHECK(same(pr.constant.den, {rational(7, 8)}));
  REQUIRE(pr.hyp.has_value());
  CHECK(same(pr.hyp->upper, {rational(1, 2), rational(1, 2), rational(1, 4)}));
  CHECK(same(pr.hyp->lower, {Rational(1), rational(7, 8)}));
}

TEST_CASE("pullback structure: cubic family") {
  const PullbackResult pr = alpha_pullback(catalog_entry("T2.i"));
  CHECK(pr.scale == rational(1, 9));
  CHECK(same(pr.constant.num, {rational(1, 3), rational(1, 3)}));
  CHECK(same(pr.constant.den, {rational(2, 3)}));
  REQUIRE(pr.hyp.has_value());
  CHECK(same(pr.hyp->upper, {rational(1, 3), rational(2, 3), rational(1, 3)}));
  CHECK(same(pr.hyp->lower, {Rational(1), rational(2, 3)}));
}

TEST_CASE("pullback rejects mixed-scale entries") {
  CHECK_THROWS_AS((void)alpha_pullback(catalog_entry("T2.iv")), std::invalid_argument);
  CHECK_THROWS_AS((void)alpha_pullback(catalog_entry("T2.v")), std::invalid_argument);
}

TEST_CASE("pullback value matches the transcribed right-hand side") {
  for (const char* id : {"T1.ii", "T2.iii"}) {
    const CatalogEntry& e = catalog_entry(id);
    const BigFloat pv = pullback_value(alpha_pullback(e), ctx);
    CHECK(agreed_digits(pv, rhs_eval(e, ctx), 48) >= 25);
  }
}

TEST_CASE("mellin integral of the simplest entry hits pi/16") {
  const CatalogEntry& e = catalog_entry("T1.xiii");
  const BigFloat lhs = l1_mellin(e.form, ctx);
  CHECK(agreed_digits(lhs, ctx.pi() / 16, 48) >= 25);
}

TEST_CASE("mellin input validation") {
  ThetaProductForm wrong_weight;
  wrong_weight.factors = {{ThetaKind::Jacobi3, 1, 2}};
  CHECK_THROWS_AS((void)l1_mellin(wrong_weight, ctx), std::domain_error);

  const CatalogEntry& e = catalog_entry("T1.xiii");
  MellinOptions bad_t0;
  bad_t0.t0 = Rational(0);
  CHECK_THROWS_AS((void)l1_mellin(e.form, ctx, bad_t0), std::domain_error);

  MellinOptions tiny_order;
  tiny_order.series_order = 32;
  CHECK_THROWS_AS((void)l1_mellin(e.form, ctx, tiny_order), std::domain_error);

  // At the minimum admissible order the rigorous remainder bound cannot meet
  // the tolerance, and the failure must be loud rather than silent.
  MellinOptions short_series;
  short_series.series_order = 64;
  CHECK_THROWS_AS((void)l1_mellin(e.form, ctx, short_series), std::runtime_error);
}

TEST_CASE("verify_entry reports agreement on both routes") {
  const LValueReport rep = verify_entry(catalog_entry("T1.xiii"), ctx);
  CHECK(rep.entry_id == "T1.xiii");
  CHECK(rep.pass);
  CHECK(rep.agreed_digits >= 25);
  REQUIRE(rep.pullback.has_value());
  CHECK(agreed_digits(*rep.pullback, rep.rhs, 48) >= 25);
  CHECK(rep.elapsed_ms_lhs >= 0);
  CHECK(rep.elapsed_ms_rhs >= 0);
}

TEST_CASE("combined-form identity holds along all three routes") {
  const LValueReport rep = verify_remark(ctx);
  CHECK(rep.entry_id == "remark");
  CHECK(rep.pass);
  CHECK(rep.agreed_digits >= 25);
  REQUIRE(rep.pullback.has_value());
  CHECK(agreed_digits(*rep.pullback, rep.rhs, 48) >= 25);
}

TEST_CASE("independent bracket series confirms the nonuniform-scale entry") {
  const BigFloat oracle = series_iv_oracle(ctx);
  const BigFloat table = rhs_eval(catalog_entry("T2.iv"), ctx);
  CHECK(agreed_digits(oracle, table, 48) >= 10);
}

TEST_CASE("report JSON round-trip") {
  const LValueReport rep = verify_entry(catalog_entry("T1.xiii"), ctx);
  const std::string text = report_to_json(rep, 30);
  const LValueReport back = report_from_json(text);
  CHECK(back.entry_id == rep.entry_id);
  CHECK(back.pass == rep.pass);
  CHECK(back.agreed_digits == rep.agreed_digits);
  CHECK(back.elapsed_ms_lhs == rep.elapsed_ms_lhs);
  CHECK(back.elapsed_ms_rhs == rep.elapsed_ms_rhs);
  CHECK(agreed_digits(back.lhs, rep.lhs, 29) >= 25);
  CHECK(agreed_digits(back.rhs, rep.rhs, 29) >= 25);
  REQUIRE(back.pullback.has_value());
  CHECK(agreed_digits(*back.pullback, *rep.pullback, 29) >= 25);
}
