#pragma once

#include <string>
#include <vector>

#include "ltheta/bigfloat.hpp"
#include "ltheta/qseries.hpp"
#include "ltheta/rational.hpp"

namespace ltheta {

// The three Jacobi theta null values and the three cubic (a, b, c) theta
// series, as functions of the nome q:
//   theta2(q) = sum q^((n+1/2)^2),  theta3(q) = sum q^(n^2),
//   theta4(q) = sum (-1)^n q^(n^2)            (n over all integers),
//   a(q) = sum q^(n^2+nm+m^2),
//   b(q) = sum w^(n-m) q^(n^2+nm+m^2)          (w a primitive cube root of 1),
//   c(q) = sum q^((n+1/3)^2+(n+1/3)(m+1/3)+(m+1/3)^2)   ((n,m) over Z^2).
enum class ThetaKind { Jacobi2, Jacobi3, Jacobi4, BorweinA, BorweinB, BorweinC };

bool is_jacobi(ThetaKind kind);

// kind(q^arg_scale)^exponent
struct ThetaFactor {
  ThetaKind kind;
  long arg_scale = 1;
  unsigned exponent = 1;
};

// prefactor * prod_i kind_i(q^arg_scale_i)^exponent_i
struct ThetaProductForm {
  Rational prefactor = Rational(1);
  std::vector<ThetaFactor> factors;
};

// Half the total exponent over Jacobi factors plus the total exponent over
// Borwein factors; 3 for every catalog form.
Rational weight(const ThetaProductForm& form);

std::string to_string(ThetaKind kind);
std::string to_string(const ThetaProductForm& form);

// Exact q-expansion of kind(q^scale) modulo O(q^order). The jacobi_/borwein_
// entry points reject kinds from the other family.
QExpansion theta_qexp(ThetaKind kind, long scale, long order);
QExpansion jacobi_theta_qexp(ThetaKind kind, long scale, long order);
QExpansion borwein_theta_qexp(ThetaKind kind, long scale, long order);

// Exact q-expansion of the product form modulo O(q^order).
QExpansion form_qexp(const ThetaProductForm& form, long order);

// Value of kind(q^scale) at q = exp(-t), t > 0. Uses the direct series for
// moderate arguments and the inversion t -> 1/t transformation near q = 1,
// so the full range (0, infinity) of t is supported at working precision.
BigFloat theta_value(ThetaKind kind, long scale, const BigFloat& t,
                     const PrecisionContext& ctx);

// Value of the product form at q = exp(-t).
BigFloat form_value(const ThetaProductForm& form, const BigFloat& t,
                    const PrecisionContext& ctx);

// The same evaluators parameterized by q in (0,1).
BigFloat theta_numeric(ThetaKind kind, const BigFloat& q, const PrecisionContext& ctx);
BigFloat form_numeric(const ThetaProductForm& form, const BigFloat& q,
                      const PrecisionContext& ctx);

namespace detail {
// Direct series evaluation with the inversion branch disabled; converges
// for moderate t and exists so tests can confirm the transformation branch
// agrees with the plain series on overlapping domains.
BigFloat theta_value_direct(ThetaKind kind, long scale, const BigFloat& t,
                            const PrecisionContext& ctx);
}  // namespace detail

}  // namespace ltheta
