#pragma once

#include <functional>

#include "ltheta/bigfloat.hpp"

namespace ltheta {

struct QuadResult {
  BigFloat value;
  int levels = 0;        // finest level index reached
  long nodes = 0;        // total integrand evaluations
  BigFloat est_error;    // |I_k - I_{k-1}| at the final level
};

// Integrand over (0,1) receiving both x and 1-x so that endpoint-sensitive
// factors can be formed without cancellation.
using Integrand01 = std::function<BigFloat(const BigFloat& x, const BigFloat& one_minus_x)>;

// Double-exponential (tanh-sinh) quadrature of f over (0,1).
//
// Substitution: x = 1/(1 + e^{-2s}), 1-x = 1/(1 + e^{2s}) with
// s = (pi/2) sinh u, giving weight (pi/4) cosh u / cosh^2((pi/2) sinh u).
// The trapezoid rule in u is refined by halving h = 2^{-k}; at each level only
// the odd multiples of h are new. Nodes are emitted until four consecutive
// contributions are negligible at working precision. Converged when two
// successive levels agree to tol_digits (relative), with at least levels >= 3.
//
// Tolerates integrable algebraic/logarithmic endpoint singularities: the
// double-exponential decay of the weight dominates any x^{a-1}(1-x)^{b-1}
// factor with a, b > 0.
//
// Throws std::runtime_error if max_levels is exhausted without convergence.
QuadResult tanh_sinh_01(const Integrand01& f, const PrecisionContext& ctx,
                        int tol_digits, int max_levels = 12);

}  // namespace ltheta
