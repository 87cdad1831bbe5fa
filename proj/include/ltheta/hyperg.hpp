#pragma once

#include <string>
#include <vector>

#include "ltheta/bigfloat.hpp"
#include "ltheta/gamma_tools.hpp"
#include "ltheta/rational.hpp"

namespace ltheta {

// Parameter lists of a generalized hypergeometric series
//   sum_{n>=0} prod_i (upper_i)_n / prod_j (lower_j)_n * z^n / n!.
// The balanced shape p+1Fp has upper.size() == lower.size() + 1.
struct HypParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

std::string to_string(const HypParams& p);

// Parameter excess sum(lower) - sum(upper). For p+1Fp shapes the series at
// z = 1 converges iff the excess is positive, with terms Theta(n^{-1-excess}).
Rational excess(const HypParams& p);
bool converges_at_one(const HypParams& p);

enum class HypMethod { DirectSeries, EulerIntegral, AcceleratedSeries, ClosedForm };
std::string to_string(HypMethod m);

struct HypEvalReport {
  BigFloat value;
  HypMethod method = HypMethod::DirectSeries;
  long terms_or_nodes = 0;
  BigFloat tail_bound;  // rigorous bound on the truncation error (absolute)
};

// Direct series on 0 <= z < 1 with a rigorous geometric tail bound: once all
// parameter shifts are positive, |t_{m+1}/t_m| <= z * g(n) for m >= n where
// g(n) pairs each upper parameter with a lower one (the implicit 1 of n!
// included) and takes max(1, (a+n)/(b+n)) per pair.
// Throws std::domain_error for nonpositive-integer lower parameters, z
// outside [0,1), or shapes with upper.size() > lower.size() + 1.
HypEvalReport pfq_series(const HypParams& p, const BigFloat& z, const PrecisionContext& ctx);

// Gauss hypergeometric function on (0,1) with the argument -> 1-argument
// connection for x > 1/2. Constants depending only on (a,b,c) are cached at
// construction. s := c - a - b decides the connection branch: Euler transform
// first when s < 0, two-series form for s noninteger, and the logarithmic
// digamma form for integer s >= 0.
class Hyp2F1 {
 public:
  Hyp2F1(const Rational& a, const Rational& b, const Rational& c, const PrecisionContext& ctx);

  BigFloat eval(const BigFloat& x) const;
  // Entry point for callers that know 1-x exactly (quadrature nodes).
  BigFloat eval(const BigFloat& x, const BigFloat& one_minus_x) const;

 private:
  Rational a_, b_, c_, s_;
  PrecisionContext ctx_;
  bool euler_flip_ = false;       // s < 0: evaluate (1-x)^s F(c-a, c-b; c; x)
  bool integer_branch_ = false;   // s integer >= 0 after any flip
  long m_ = 0;                    // the integer s of the log branch
  // Cached connection constants (noninteger branch): value may be zero when a
  // gamma pole annihilates the corresponding series.
  BigFloat c1_, c2_;
  // Cached prefactors (integer branch).
  BigFloat p1_, p2_;

  BigFloat eval_inner(const BigFloat& x, const BigFloat& omx) const;
};

// Euler integral representation: choose an (upper a, lower b) pair with
// b > a > 0 maximizing b - a, and evaluate
//   Gamma[b / a, b-a] * int_0^1 t^(a-1) (1-t)^(b-a-1) F'(z t) dt
// by tanh-sinh quadrature, where F' drops the chosen pair. The inner kernel is
// closed-form for 1F0, the connection-aware Hyp2F1 for 2F1, and the direct
// series otherwise. Valid for 0 < z <= 1 (z = 1 requires positive excess).
// Throws std::invalid_argument when no admissible pair exists.
HypEvalReport euler_integral_eval(const HypParams& p, const BigFloat& z,
                                  const PrecisionContext& ctx);

enum class AtOneMethod { Auto, Integral, Series };

// Value at z = 1. Cancels upper/lower parameter pairs first; then, under
// Auto, uses a Gauss closed form when the reduced shape is an admissible 2F1,
// otherwise the Euler integral; the result is always cross-checked against a
// Levin-accelerated direct series to >= 10 digits. `Series` makes the
// accelerated series the value of record (CLI override).
// Throws std::domain_error when the series diverges at z = 1.
HypEvalReport pfq_at_one(const HypParams& p, const PrecisionContext& ctx,
                         AtOneMethod method = AtOneMethod::Auto);

// Gauss summation 2F1[a,b;c;1] = Gamma[c, c-a-b / c-a, c-b].
// Throws std::domain_error when c-a-b <= 0 or c is a nonpositive integer.
GammaBracket gauss_sum(const Rational& a, const Rational& b, const Rational& c);

// Watson summation 3F2[a,b,c; (1+a+b)/2, 2c; 1] =
// Gamma[1/2, (1+2c)/2, (1+a+b)/2, (1-a-b+2c)/2
//       / (1+a)/2, (1+b)/2, (1-a+2c)/2, (1-b+2c)/2].
// Throws std::domain_error unless every bracket argument is positive (which
// also forces positive excess).
GammaBracket watson_sum(const Rational& a, const Rational& b, const Rational& c);

// Exact-shape matcher: p must be a 3F2 whose lower parameters equal
// {(1+a+b)/2, 2c} literally for some labeling of the upper parameters.
// Throws std::invalid_argument when no labeling matches.
GammaBracket watson_match(const HypParams& p);

// Residual |(b-a) F[a,b,c;e,f;z] + a F[a+1,b,c;e,f;z] - b F[a,b+1,c;e,f;z]|
// for z in (0,1]. Members at z = 1 are evaluated by pfq_at_one and require
// positive excess (std::domain_error otherwise).
BigFloat contiguous_check(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& e, const Rational& f, const BigFloat& z,
                          const PrecisionContext& ctx);

// Residual of the cubic transformation
//   2F1[a/3,(a+1)/3; (a+1)/2; 1-((1-x)/(1+2x))^3]
//     = (1+2x)^a 2F1[a/3,(a+1)/3; (a+5)/6; x^3]
// for x in [0,1); both sides by direct series.
BigFloat cubic_transform_check(const Rational& a, const BigFloat& x,
                               const PrecisionContext& ctx);

}  // namespace ltheta
