#include "ltheta/gamma_tools.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ltheta {

std::string to_string(const GammaBracket& br) {
  std::ostringstream os;
  os << "Gamma[";
  for (std::size_t i = 0; i < br.num.size(); ++i) {
    if (i) os << ", ";
    os << to_string(br.num[i]);
  }
  os << " / ";
  for (std::size_t i = 0; i < br.den.size(); ++i) {
    if (i) os << ", ";
    os << to_string(br.den[i]);
  }
  os << "]";
  return os.str();
}

GammaBracket bracket_simplify(const GammaBracket& br) {
  GammaBracket out;
  out.num = br.num;
  std::vector<bool> used(br.den.size(), false);
  std::vector<Rational> kept_num;
  for (const auto& a : out.num) {
    bool cancelled = false;
    for (std::size_t j = 0; j < br.den.size(); ++j) {
      if (!used[j] && br.den[j] == a) {
        used[j] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) kept_num.push_back(a);
  }
  out.num = std::move(kept_num);
  for (std::size_t j = 0; j < br.den.size(); ++j) {
    if (!used[j]) out.den.push_back(br.den[j]);
  }
  return out;
}

GammaBracket bracket_mul(const GammaBracket& a, const GammaBracket& b) {
  GammaBracket out = a;
  out.num.insert(out.num.end(), b.num.begin(), b.num.end());
  out.den.insert(out.den.end(), b.den.begin(), b.den.end());
  return bracket_simplify(out);
}

BigFloat gamma(const BigFloat& x, const PrecisionContext& ctx) {
  if (!(x.sign() > 0)) {
    throw std::domain_error("gamma: argument must be positive");
  }
  BigFloat z = make_prec(ctx.working_bits());
  mpfr_set(z.raw(), x.raw(), MPFR_RNDN);
  return mpfr_gamma_raw(z);
}

BigFloat gamma(const Rational& x, const PrecisionContext& ctx) {
  if (sgn(x) <= 0) {
    throw std::domain_error("gamma: argument must be positive");
  }
  return gamma(ctx.real(x), ctx);
}

std::pair<BigFloat, BigFloat> reflection_check(const Rational& n, const PrecisionContext& ctx) {
  if (sgn(n) <= 0 || n >= 1) {
    throw std::domain_error("reflection_check: n must lie in (0,1)");
  }
  const BigFloat lhs = gamma(n, ctx) * gamma(Rational(1) - n, ctx);
  const BigFloat pi = ctx.pi();
  const BigFloat rhs = pi / sin(pi * ctx.real(n));
  return {lhs, rhs};
}

std::pair<BigFloat, BigFloat> multiplication_check(const Rational& z, unsigned m,
                                                   const PrecisionContext& ctx) {
  if (m < 2) {
    throw std::domain_error("multiplication_check: m must be >= 2");
  }
  if (sgn(z) <= 0) {
    throw std::domain_error("multiplication_check: z must be positive");
  }
  const BigFloat lhs = gamma(Rational(static_cast<long>(m)) * z, ctx);
  const BigFloat zf = ctx.real(z);
  const BigFloat mf = ctx.real(static_cast<long>(m));
  // m^(m z - 1/2) (2 pi)^((1-m)/2) prod Gamma(z + k/m)
  BigFloat rhs = pow(mf, mf * zf - ctx.real(rational(1, 2)));
  rhs = rhs * pow(ctx.real(2) * ctx.pi(),
                  ctx.real(rational(1 - static_cast<long>(m), 2)));
  for (unsigned k = 0; k < m; ++k) {
    rhs = rhs * gamma(z + rational(static_cast<long>(k), static_cast<long>(m)), ctx);
  }
  return {lhs, rhs};
}

BigFloat gamma_bracket_eval(const GammaBracket& br, const PrecisionContext& ctx) {
  BigFloat acc = ctx.real(1);
  for (const auto& a : br.num) acc = acc * gamma(a, ctx);
  for (const auto& a : br.den) acc = acc / gamma(a, ctx);
  return acc;
}

Rational pochhammer(const Rational& a, unsigned long n) {
  Rational acc(1);
  Rational term = a;
  for (unsigned long k = 0; k < n; ++k) {
    acc *= term;
    term += 1;
  }
  return acc;
}

namespace detail {

BigFloat gamma_any(const BigFloat& x) {
  BigFloat z = make_prec(mpfr_get_prec(x.raw()));
  mpfr_set(z.raw(), x.raw(), MPFR_RNDN);
  BigFloat r = mpfr_gamma_raw(z);
  if (!r.is_finite()) {
    throw std::domain_error("gamma_any: argument at a pole");
  }
  return r;
}

}  // namespace detail

}  // namespace ltheta
