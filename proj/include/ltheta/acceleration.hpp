#pragma once

#include <vector>

#include "ltheta/bigfloat.hpp"

namespace ltheta {

struct AccelResult {
  BigFloat value;
  int order_used = 0;     // transform order k of the returned estimate
  BigFloat last_change;   // |estimate_k - estimate_{k-1}| at that order
};

// Levin u-transform of the series whose terms are given (a_0, a_1, ...), with
// beta = 1 and remainder estimates omega_n = (1+n) a_n:
//
//   est_k = [ sum_j (-1)^j C(k,j) (1+j)^{k-1} s_j / omega_j ]
//         / [ sum_j (-1)^j C(k,j) (1+j)^{k-1} / omega_j ],   s_j = a_0+...+a_j.
//
// The transform is evaluated at every order k and the estimate with the
// smallest successive change is returned, computed at boosted internal
// precision to absorb the growth of the binomial weights. Terms after the
// first zero term are ignored (omega would vanish).
AccelResult levin_u(const std::vector<BigFloat>& terms, const PrecisionContext& ctx);

}  // namespace ltheta
