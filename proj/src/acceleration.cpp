#include "ltheta/acceleration.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "ltheta/rational.hpp"

namespace ltheta {

AccelResult levin_u(const std::vector<BigFloat>& terms, const PrecisionContext& ctx) {
  // Usable prefix: stop before any zero term (its remainder estimate vanishes).
  std::size_t n = 0;
  while (n < terms.size() && !terms[n].is_zero()) ++n;
  if (n < 3) throw std::invalid_argument("levin_u: need at least 3 nonzero leading terms");

  // Weight magnitude ~ C(k,j)(1+j)^{k-1} <= 2^k (k+1)^{k-1}; boost precision
  // to keep the alternating sums meaningful.
  const long k_max = static_cast<long>(n) - 1;
  const mpfr_prec_t boost =
      ctx.working_bits() +
      static_cast<mpfr_prec_t>(static_cast<double>(k_max) * (std::log2(static_cast<double>(k_max) + 2.0) + 1.0)) +
      64;

  std::vector<BigFloat> s(n), inv_omega(n);
  BigFloat acc = BigFloat::zero(boost);
  const BigFloat one = BigFloat::from(1, boost);
  for (std::size_t j = 0; j < n; ++j) {
    BigFloat tj = make_prec(boost);
    mpfr_set(tj.raw(), terms[j].raw(), MPFR_RNDN);
    acc = acc + tj;
    s[j] = acc;
    inv_omega[j] = one / (tj * static_cast<long>(1 + j));
  }

  AccelResult best;
  best.value = s[n - 1];
  best.order_used = 0;
  best.last_change = abs(n >= 2 ? s[n - 1] - s[n - 2] : s[n - 1]);

  BigFloat prev_est = s[0];
  for (long k = 1; k <= k_max; ++k) {
    BigFloat num = BigFloat::zero(boost);
    BigFloat den = BigFloat::zero(boost);
    Integer binom;
    for (long j = 0; j <= k; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                   static_cast<unsigned long>(j));
      Integer w = binom;
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(1 + j),
                    static_cast<unsigned long>(k >= 1 ? k - 1 : 0));
      w *= p;
      if (j & 1) w = -w;
      const BigFloat wf = BigFloat::from(Rational(w), boost);
      const std::size_t idx = static_cast<std::size_t>(j);
      num = num + wf * s[idx] * inv_omega[idx];
      den = den + wf * inv_omega[idx];
    }
    if (den.is_zero()) continue;
    BigFloat est = num / den;
    if (!est.is_finite()) continue;
    BigFloat change = abs(est - prev_est);
    if (k >= 2 && (change < best.last_change || best.order_used == 0)) {
      best.value = est;
      best.order_used = static_cast<int>(k);
      best.last_change = change;
    }
    prev_est = est;
  }
  return best;
}

}  // namespace ltheta
