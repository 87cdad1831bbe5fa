#include "ltheta/quadrature.hpp"

#include <stdexcept>

namespace ltheta {

namespace {

// Contribution of the node at abscissa u (u >= 0): weight * f at +u, and for
// u > 0 also at -u (the mirrored point has x and 1-x exchanged). Returns the
// summed contribution without the step factor h.
struct NodeEval {
  BigFloat value;
  bool negligible = false;
};

NodeEval eval_node(const Integrand01& f, const BigFloat& u, bool mirrored,
                   long floor_exp, const BigFloat& half_pi) {
  const BigFloat s = half_pi * sinh(u);
  const BigFloat em = exp(-2 * s);   // e^{-2s}, tiny for large u
  const BigFloat ep = exp(2 * s);    // e^{+2s}, huge for large u
  const BigFloat x = 1 / (1 + em);   // close to 1
  const BigFloat omx = 1 / (1 + ep); // close to 0
  const BigFloat chs = cosh(s);
  const BigFloat w = (half_pi / 2) * cosh(u) / (chs * chs);

  NodeEval out;
  out.value = w * f(x, omx);
  if (mirrored) out.value = out.value + w * f(omx, x);
  if (!out.value.is_finite()) {
    throw std::runtime_error("tanh_sinh_01: integrand returned a non-finite value");
  }
  out.negligible = out.value.is_zero() || w.is_zero() ||
                   out.value.exponent() < floor_exp;
  return out;
}

}  // namespace

QuadResult tanh_sinh_01(const Integrand01& f, const PrecisionContext& ctx,
                        int tol_digits, int max_levels) {
  if (tol_digits < 1) tol_digits = 1;
  const mpfr_prec_t bits = ctx.working_bits();
  const BigFloat half_pi = ctx.pi() / 2;
  const BigFloat tol = ctx.pow10(-tol_digits);
  // A node is negligible once it cannot move the accumulated sum at working
  // precision; anchored to the sum's magnitude, updated per level.
  long floor_exp = -static_cast<long>(bits) - 64;

  QuadResult res;
  res.value = BigFloat::zero(bits);
  res.est_error = BigFloat::zero(bits);

  // Level 0: h = 1, nodes at u = 0, 1, 2, ...
  BigFloat sum = eval_node(f, BigFloat::zero(bits), false, floor_exp, half_pi).value;
  res.nodes += 1;
  int run = 0;
  for (long j = 1;; ++j) {
    NodeEval ne = eval_node(f, BigFloat::from(j, bits), true, floor_exp, half_pi);
    res.nodes += 2;
    sum = sum + ne.value;
    run = ne.negligible ? run + 1 : 0;
    if (run >= 4) break;
    if (j > 64) throw std::runtime_error("tanh_sinh_01: level-0 node cutoff not reached");
  }
  BigFloat prev = sum;  // I_0 with h = 1

  for (int k = 1; k <= max_levels; ++k) {
    // h_k = 2^{-k}; new nodes are odd multiples of h_k.
    BigFloat h = ctx.real(1);
    mpfr_div_2ui(h.raw(), h.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    if (!prev.is_zero()) floor_exp = prev.exponent() - static_cast<long>(bits) - 16;

    BigFloat add = BigFloat::zero(bits);
    int run2 = 0;
    for (long j = 1;; j += 2) {
      NodeEval ne = eval_node(f, h * j, true, floor_exp, half_pi);
      res.nodes += 2;
      add = add + ne.value;
      run2 = ne.negligible ? run2 + 1 : 0;
      if (run2 >= 4) break;
      if (j > (64L << k)) {
        throw std::runtime_error("tanh_sinh_01: node cutoff not reached at level " +
                                 std::to_string(k));
      }
    }
    BigFloat cur = prev / 2 + h * add;

    res.est_error = abs(cur - prev);
    res.levels = k;
    const BigFloat scale = max(abs(cur), ctx.pow10(-tol_digits));
    if (k >= 3 && res.est_error <= tol * scale) {
      res.value = cur;
      return res;
    }
    prev = cur;
  }
  throw std::runtime_error("tanh_sinh_01: no convergence within max_levels");
}

}  // namespace ltheta
