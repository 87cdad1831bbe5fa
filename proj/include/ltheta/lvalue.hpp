#pragma once

#include <optional>
#include <string>

#include "ltheta/bigfloat.hpp"
#include "ltheta/catalog.hpp"
#include "ltheta/gamma_tools.hpp"
#include "ltheta/hyperg.hpp"
#include "ltheta/theta.hpp"

namespace ltheta {

struct MellinOptions {
  Rational t0 = Rational(1);  // split point of the integral over (0, inf)
  long series_order = 2000;   // q-expansion order backing the tail sum
};

// L(f,1) = int_0^1 f(q) dq/q = int_0^inf f(e^{-t}) dt for a weight-3 form
// vanishing at both endpoints (checked). The tail over [t0, inf) is summed
// termwise from the exact q-expansion with a rigorous geometric remainder
// bound derived from an |a_n| <= K n^2 coefficient envelope (K measured on
// the computed coefficients and doubled, then asserted); the head over
// (0, t0) is tanh-sinh quadrature of the numeric form, whose theta factors
// switch to the modular-transformed series for small t.
// Throws std::runtime_error when the tail bound cannot be met at the
// configured order (raise series_order), or on quadrature non-convergence.
BigFloat l1_mellin(const ThetaProductForm& form, const PrecisionContext& ctx,
                   const MellinOptions& opts = {});

// Symbolic reduction of a catalog entry's Mellin integral to
//   scale * Gamma-bracket * 3F2(1).
struct PullbackResult {
  Rational scale;
  GammaBracket constant;
  std::optional<HypParams> hyp;  // absent if the series part collapses away
};

// Rewrites the theta product in the hypergeometric parametrization variable
// alpha and applies the Euler reduction. Supported when all factors share one
// argument scale, allowing additional Jacobi theta4 factors at twice that
// scale (absorbed via theta4^2(x^2) = theta3(x) theta4(x)).
// Throws std::invalid_argument for entries marked pullback-unsupported.
PullbackResult alpha_pullback(const CatalogEntry& entry);

BigFloat pullback_value(const PullbackResult& pr, const PrecisionContext& ctx);

// Evaluates the transcribed right-hand side: prefactor atoms x 3F2(1).
BigFloat rhs_eval(const CatalogEntry& entry, const PrecisionContext& ctx);

struct LValueReport {
  std::string entry_id;
  BigFloat lhs;  // Mellin integral
  BigFloat rhs;  // table closed form
  std::optional<BigFloat> pullback;
  int agreed_digits = 0;
  bool pass = false;
  long elapsed_ms_lhs = 0;
  long elapsed_ms_rhs = 0;
};

// lhs vs rhs (and the pullback route when supported). Pass threshold:
// agreed_digits >= target-5, relaxed to target-10 for the two entries whose
// reduction is not symbolic. Disagreement yields pass=false, not a throw.
LValueReport verify_entry(const CatalogEntry& entry, const PrecisionContext& ctx,
                          const MellinOptions& opts = {});

// The combined form (1/2) theta2 theta3^4 theta4 (all at q^4).
ThetaProductForm remark_form();

// Three routes to the same constant Gamma^4(1/4) / (8 sqrt(2) pi^2):
// the exact q-series splitting into the two table forms, the sum of the two
// table right-hand sides, and the Mellin integral of the combined form.
LValueReport verify_remark(const PrecisionContext& ctx, const MellinOptions& opts = {});

// Independent slowly-convergent series for one entry:
//   3^{-4/3} sum_n (1/3)_n (2/3)_n / (1)_n^2 * Gamma[3n+1/3, 2/3 / 3n+1],
// Levin-accelerated; an oracle good to >= 10 digits.
BigFloat series_iv_oracle(const PrecisionContext& ctx);

std::string report_to_json(const LValueReport& r, int digits);
LValueReport report_from_json(const std::string& text);

}  // namespace ltheta
