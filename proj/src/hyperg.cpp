#include "ltheta/hyperg.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ltheta/acceleration.hpp"
#include "ltheta/quadrature.hpp"

namespace ltheta {

namespace {

constexpr long kMaxSeriesTerms = 2000000;

void validate_lower(const std::vector<Rational>& lower, const char* who) {
  for (const auto& b : lower) {
    if (is_nonpositive_integer(b)) {
      throw std::domain_error(std::string(who) +
                              ": lower parameter is a nonpositive integer");
    }
  }
}

// First index past every sign change: a + n > 0 and b + n > 0 for n >= n_pos.
long positivity_index(const HypParams& p) {
  long n_pos = 0;
  auto bump = [&n_pos](const Rational& r) {
    if (r > 0) return;
    n_pos = std::max(n_pos, floor_long(-r) + 1);
  };
  for (const auto& a : p.upper) bump(a);
  for (const auto& b : p.lower) bump(b);
  return n_pos;
}

// Envelope g(n) with |t_{m+1}/t_m| <= z g(n) for all m >= n, valid once every
// parameter shift at n is positive. Each upper factor is paired with a lower
// one (implicit 1 from n! included): (a+m)/(b+m) is monotone toward 1, hence
// bounded by max(1, (a+n)/(b+n)) on m >= n; unpaired lower factors contribute
// 1/(b+m) <= 1/(b+n).
Rational ratio_envelope(std::vector<Rational> up, std::vector<Rational> lo, long n) {
  lo.push_back(Rational(1));
  std::sort(up.begin(), up.end());
  std::sort(lo.begin(), lo.end());
  Rational g(1);
  std::size_t iu = up.size();
  std::size_t il = lo.size();
  while (iu > 0 && il > 0) {
    --iu;
    --il;
    Rational f = (up[iu] + n) / (lo[il] + n);
    if (f > 1) g *= f;
  }
  while (il > 0) {
    --il;
    g /= lo[il] + n;
  }
  return g;
}

// Shared series engine; allow_one admits z = 1 for shapes whose envelope
// eventually drops below 1 there (upper.size() <= lower.size()).
HypEvalReport series_sum(const HypParams& p, const BigFloat& z, bool allow_one,
                         const PrecisionContext& ctx, const char* who) {
  validate_lower(p.lower, who);
  if (z.sign() < 0 || (allow_one ? z > 1 : !(z < 1))) {
    throw std::domain_error(std::string(who) + ": argument outside the series domain");
  }
  if (p.upper.size() > p.lower.size() + 1) {
    throw std::domain_error(std::string(who) + ": divergent series shape");
  }

  const mpfr_prec_t bits = ctx.working_bits();
  const long n_pos = positivity_index(p);
  const BigFloat one = ctx.real(1);

  BigFloat sum = BigFloat::zero(bits);
  BigFloat term = BigFloat::from(1, bits);
  HypEvalReport rep;
  rep.method = HypMethod::DirectSeries;

  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    sum = sum + term;

    Rational ratio(1);
    for (const auto& a : p.upper) ratio *= a + n;
    for (const auto& b : p.lower) ratio /= b + n;
    ratio /= n + 1;
    BigFloat next = term * ctx.real(ratio) * z;

    if (next.is_zero()) {  // terminating series (or z = 0)
      rep.value = sum;
      rep.terms_or_nodes = n + 1;
      rep.tail_bound = BigFloat::zero(bits);
      return rep;
    }
    const BigFloat tol = ctx.pow10(-(ctx.target_digits + ctx.guard_digits)) * (1 + abs(sum));
    if (n + 1 >= n_pos && abs(next) <= tol) {
      const BigFloat r = z * ctx.real(ratio_envelope(p.upper, p.lower, n + 1));
      if (r < 1) {
        const BigFloat tail = abs(next) / (one - r);
        if (tail <= tol) {
          rep.value = sum;
          rep.terms_or_nodes = n + 1;
          rep.tail_bound = tail;
          return rep;
        }
      }
    }
    term = next;
  }
  throw std::runtime_error(std::string(who) + ": series did not meet its tail bound");
}

HypParams cancel_pairs(const HypParams& p) {
  HypParams out;
  out.upper = p.upper;
  std::vector<Rational> lo = p.lower;
  for (auto it = out.upper.begin(); it != out.upper.end();) {
    auto hit = std::find(lo.begin(), lo.end(), *it);
    if (hit != lo.end()) {
      lo.erase(hit);
      it = out.upper.erase(it);
    } else {
      ++it;
    }
  }
  out.lower = std::move(lo);
  return out;
}

// Exact rational z = 1 terms, converted at a precision generous enough for
// the Levin transform's internal cancellation.
HypEvalReport accelerated_at_one(const HypParams& p, long nterms,
                                 const PrecisionContext& ctx) {
  const mpfr_prec_t bits =
      ctx.working_bits() + static_cast<mpfr_prec_t>(nterms) * 8 + 64;
  std::vector<BigFloat> terms;
  terms.reserve(static_cast<std::size_t>(nterms));
  Rational t(1);
  for (long n = 0; n < nterms; ++n) {
    terms.push_back(BigFloat::from(t, bits));
    Rational ratio(1);
    for (const auto& a : p.upper) ratio *= a + n;
    for (const auto& b : p.lower) ratio /= b + n;
    ratio /= n + 1;
    t *= ratio;
    if (t == 0) break;
  }
  AccelResult ar = levin_u(terms, ctx);
  HypEvalReport rep;
  rep.value = ar.value;
  rep.method = HypMethod::AcceleratedSeries;
  rep.terms_or_nodes = static_cast<long>(terms.size());
  rep.tail_bound = ar.last_change;  // heuristic accuracy estimate, not a bound
  return rep;
}

}  // namespace

std::string to_string(const HypParams& p) {
  std::ostringstream os;
  os << p.upper.size() << "F" << p.lower.size() << "[";
  for (std::size_t i = 0; i < p.upper.size(); ++i) {
    if (i) os << ", ";
    os << to_string(p.upper[i]);
  }
  os << "; ";
  for (std::size_t i = 0; i < p.lower.size(); ++i) {
    if (i) os << ", ";
    os << to_string(p.lower[i]);
  }
  os << "]";
  return os.str();
}

std::string to_string(HypMethod m) {
  switch (m) {
    case HypMethod::DirectSeries:
      return "direct-series";
    case HypMethod::EulerIntegral:
      return "euler-integral";
    case HypMethod::AcceleratedSeries:
      return "accelerated-series";
    default:
      return "closed-form";
  }
}

Rational excess(const HypParams& p) {
  Rational s(0);
  for (const auto& b : p.lower) s += b;
  for (const auto& a : p.upper) s -= a;
  return s;
}

bool converges_at_one(const HypParams& p) {
  if (p.upper.size() <= p.lower.size()) return true;
  if (p.upper.size() == p.lower.size() + 1) return excess(p) > 0;
  return false;
}

HypEvalReport pfq_series(const HypParams& p, const BigFloat& z,
                         const PrecisionContext& ctx) {
  return series_sum(p, z, false, ctx, "pfq_series");
}

Hyp2F1::Hyp2F1(const Rational& a, const Rational& b, const Rational& c,
               const PrecisionContext& ctx)
    : a_(a), b_(b), c_(c), ctx_(ctx) {
  if (is_nonpositive_integer(c)) {
    throw std::domain_error("Hyp2F1: lower parameter is a nonpositive integer");
  }
  s_ = c - a - b;
  if (s_ < 0) {
    euler_flip_ = true;
    a_ = c - a;
    b_ = c - b;
    s_ = -s_;
  }
  const mpfr_prec_t bits = ctx_.working_bits();
  c1_ = BigFloat::zero(bits);
  c2_ = BigFloat::zero(bits);
  p1_ = BigFloat::zero(bits);
  p2_ = BigFloat::zero(bits);

  integer_branch_ = is_integer(s_);
  if (integer_branch_) {
    m_ = to_long(s_);
    const BigFloat gc = detail::gamma_any(ctx_.real(c_));
    if (m_ >= 1 && !is_nonpositive_integer(a_ + s_) && !is_nonpositive_integer(b_ + s_)) {
      p1_ = gamma(Rational(m_), ctx_) * gc /
            (detail::gamma_any(ctx_.real(a_ + s_)) * detail::gamma_any(ctx_.real(b_ + s_)));
    }
    if (!is_nonpositive_integer(a_) && !is_nonpositive_integer(b_)) {
      p2_ = gc / (detail::gamma_any(ctx_.real(a_)) * detail::gamma_any(ctx_.real(b_)));
      if (m_ & 1) p2_ = -p2_;
    }
  } else {
    const BigFloat gc = detail::gamma_any(ctx_.real(c_));
    if (!is_nonpositive_integer(c_ - a_) && !is_nonpositive_integer(c_ - b_)) {
      c1_ = gc * detail::gamma_any(ctx_.real(s_)) /
            (detail::gamma_any(ctx_.real(c_ - a_)) * detail::gamma_any(ctx_.real(c_ - b_)));
    }
    if (!is_nonpositive_integer(a_) && !is_nonpositive_integer(b_)) {
      c2_ = gc * detail::gamma_any(ctx_.real(-s_)) /
            (detail::gamma_any(ctx_.real(a_)) * detail::gamma_any(ctx_.real(b_)));
    }
  }
}

BigFloat Hyp2F1::eval(const BigFloat& x) const { return eval(x, ctx_.real(1) - x); }

BigFloat Hyp2F1::eval(const BigFloat& x, const BigFloat& omx) const {
  if (x.sign() < 0 || !(omx.sign() > 0)) {
    throw std::domain_error("Hyp2F1: argument outside [0, 1)");
  }
  BigFloat core = eval_inner(x, omx);
  if (euler_flip_) core = core * pow(omx, -s_);  // (1-x)^{c-a-b}, original exponent
  return core;
}

BigFloat Hyp2F1::eval_inner(const BigFloat& x, const BigFloat& omx) const {
  const mpfr_prec_t bits = ctx_.working_bits();
  const Rational half(1, 2);
  if (x <= ctx_.real(half)) {
    HypParams p;
    p.upper = {a_, b_};
    p.lower = {c_};
    return series_sum(p, x, false, ctx_, "Hyp2F1").value;
  }
  const BigFloat& w = omx;

  if (!integer_branch_) {
    BigFloat out = BigFloat::zero(bits);
    if (!c1_.is_zero()) {
      HypParams p;
      p.upper = {a_, b_};
      p.lower = {1 - s_};
      out = out + c1_ * series_sum(p, w, false, ctx_, "Hyp2F1").value;
    }
    if (!c2_.is_zero()) {
      HypParams p;
      p.upper = {c_ - a_, c_ - b_};
      p.lower = {1 + s_};
      out = out + c2_ * pow(w, s_) * series_sum(p, w, false, ctx_, "Hyp2F1").value;
    }
    return out;
  }

  // Integer branch: c = a + b + m with m >= 0 (logarithmic connection).
  BigFloat out = BigFloat::zero(bits);
  if (!p1_.is_zero()) {
    BigFloat fin = BigFloat::zero(bits);
    BigFloat wk = ctx_.real(1);
    for (long k = 0; k < m_; ++k) {
      const Rational coef = pochhammer(a_, static_cast<unsigned long>(k)) *
                            pochhammer(b_, static_cast<unsigned long>(k)) /
                            (pochhammer(Rational(1), static_cast<unsigned long>(k)) *
                             pochhammer(Rational(1 - m_), static_cast<unsigned long>(k)));
      fin = fin + ctx_.real(coef) * wk;
      wk = wk * w;
    }
    out = out + p1_ * fin;
  }
  if (!p2_.is_zero()) {
    const BigFloat logw = log(w);
    BigFloat d_k1 = mpfr_digamma_raw(ctx_.real(1));           // psi(k+1)
    BigFloat d_km = mpfr_digamma_raw(ctx_.real(Rational(m_ + 1)));  // psi(k+m+1)
    BigFloat d_a = mpfr_digamma_raw(ctx_.real(a_ + s_));      // psi(a+m+k)
    BigFloat d_b = mpfr_digamma_raw(ctx_.real(b_ + s_));      // psi(b+m+k)
    BigFloat coef = 1 / gamma(Rational(m_ + 1), ctx_);        // 1/(k! (k+m)!) at k=0
    BigFloat acc = BigFloat::zero(bits);
    const long floor_exp = -static_cast<long>(bits) - 32;
    int quiet = 0;
    for (long k = 0; k < kMaxSeriesTerms; ++k) {
      const BigFloat term = coef * (logw - d_k1 - d_km + d_a + d_b);
      acc = acc + term;
      const bool negligible =
          term.is_zero() ||
          term.exponent() <
              (acc.is_zero() ? floor_exp
                             : acc.exponent() - static_cast<long>(bits) - 32);
      quiet = negligible ? quiet + 1 : 0;
      if (quiet >= 3) break;
      coef = coef * ctx_.real((a_ + s_ + k) * (b_ + s_ + k) /
                              (Rational(k + 1) * Rational(k + m_ + 1))) *
             w;
      d_k1 = d_k1 + 1 / ctx_.real(Rational(k + 1));
      d_km = d_km + 1 / ctx_.real(Rational(k + m_ + 1));
      d_a = d_a + 1 / ctx_.real(a_ + s_ + k);
      d_b = d_b + 1 / ctx_.real(b_ + s_ + k);
    }
    out = out - p2_ * pow(w, m_) * acc;
  }
  return out;
}

HypEvalReport euler_integral_eval(const HypParams& p, const BigFloat& z,
                                  const PrecisionContext& ctx) {
  validate_lower(p.lower, "euler_integral_eval");
  if (!(z.sign() > 0) || z > 1) {
    throw std::domain_error("euler_integral_eval: argument must lie in (0, 1]");
  }
  const bool at_one = !(z < 1);
  if (at_one && p.upper.size() == p.lower.size() + 1 && !(excess(p) > 0)) {
    throw std::domain_error("euler_integral_eval: divergent at z = 1 (excess <= 0)");
  }

  // Admissible pair maximizing the lower-minus-upper gap (mildest endpoint
  // singularity in the kernel).
  std::optional<std::pair<std::size_t, std::size_t>> pick;
  Rational best_gap(0);
  for (std::size_t i = 0; i < p.upper.size(); ++i) {
    if (!(p.upper[i] > 0)) continue;
    for (std::size_t j = 0; j < p.lower.size(); ++j) {
      const Rational gap = p.lower[j] - p.upper[i];
      if (!(gap > 0)) continue;
      if (!pick || gap > best_gap) {
        pick = {i, j};
        best_gap = gap;
      }
    }
  }
  if (!pick) {
    throw std::invalid_argument(
        "euler_integral_eval: no parameter pair with lower > upper > 0 "
        "(representation inapplicable)");
  }
  const Rational ea = p.upper[pick->first];
  const Rational eb = p.lower[pick->second];

  HypParams inner;
  inner.upper = p.upper;
  inner.lower = p.lower;
  inner.upper.erase(inner.upper.begin() + static_cast<std::ptrdiff_t>(pick->first));
  inner.lower.erase(inner.lower.begin() + static_cast<std::ptrdiff_t>(pick->second));

  const GammaBracket pre{{eb}, {ea, eb - ea}};
  const BigFloat bracket = gamma_bracket_eval(pre, ctx);

  // Inner kernel at argument z t, receiving 1 - z t exactly when z = 1.
  std::function<BigFloat(const BigFloat&, const BigFloat&)> kernel;
  std::optional<Hyp2F1> h2;
  if (inner.upper.size() == 1 && inner.lower.empty()) {
    const Rational u = inner.upper[0];
    kernel = [u](const BigFloat& zt, const BigFloat& omzt) {
      (void)zt;
      return pow(omzt, -u);  // 1F0[u; zt] = (1 - zt)^{-u}
    };
  } else if (inner.upper.size() == 2 && inner.lower.size() == 1) {
    h2.emplace(inner.upper[0], inner.upper[1], inner.lower[0], ctx);
    kernel = [&h2](const BigFloat& zt, const BigFloat& omzt) {
      return h2->eval(zt, omzt);
    };
  } else {
    kernel = [&inner, &ctx](const BigFloat& zt, const BigFloat& omzt) {
      (void)omzt;
      return series_sum(inner, zt, false, ctx, "euler_integral_eval").value;
    };
  }

  const Rational pa = ea - 1;
  const Rational pb = eb - ea - 1;
  const BigFloat one = ctx.real(1);
  Integrand01 f = [&](const BigFloat& t, const BigFloat& omt) {
    BigFloat zt, omzt;
    if (at_one) {
      zt = t;
      omzt = omt;
    } else {
      zt = z * t;
      omzt = one - zt;
    }
    return pow(t, pa) * pow(omt, pb) * kernel(zt, omzt);
  };

  const QuadResult qr = tanh_sinh_01(f, ctx, ctx.target_digits + ctx.guard_digits - 5, 12);
  HypEvalReport rep;
  rep.value = bracket * qr.value;
  rep.method = HypMethod::EulerIntegral;
  rep.terms_or_nodes = qr.nodes;
  rep.tail_bound = bracket * qr.est_error;
  return rep;
}

HypEvalReport pfq_at_one(const HypParams& p0, const PrecisionContext& ctx,
                         AtOneMethod method) {
  validate_lower(p0.lower, "pfq_at_one");
  const HypParams p = cancel_pairs(p0);
  const mpfr_prec_t bits = ctx.working_bits();

  if (p.upper.size() > p.lower.size() + 1) {
    throw std::domain_error("pfq_at_one: divergent series shape");
  }
  if (p.upper.size() == p.lower.size() + 1 && !(excess(p) > 0)) {
    throw std::domain_error("pfq_at_one: divergent at z = 1 (excess <= 0)");
  }

  HypEvalReport accel = accelerated_at_one(p, 120, ctx);
  if (method == AtOneMethod::Series) return accel;

  HypEvalReport primary;
  if (p.upper.size() <= p.lower.size() && method == AtOneMethod::Auto) {
    // Superlinearly convergent at z = 1; the plain series suffices.
    primary = series_sum(p, ctx.real(1), true, ctx, "pfq_at_one");
  } else if (method == AtOneMethod::Auto && p.upper.size() == 2 && p.lower.size() == 1 &&
             p.upper[0] > 0 && p.upper[1] > 0 &&
             p.lower[0] > p.upper[0] && p.lower[0] > p.upper[1]) {
    primary.value = gamma_bracket_eval(gauss_sum(p.upper[0], p.upper[1], p.lower[0]), ctx);
    primary.method = HypMethod::ClosedForm;
    primary.terms_or_nodes = 0;
    primary.tail_bound = BigFloat::zero(bits);
  } else {
    primary = euler_integral_eval(p, ctx.real(1), ctx);
  }

  // Mandatory independent cross-check of the value of record.
  long nterms = 120;
  while (agreed_digits(primary.value, accel.value, ctx.working_digits) < 10) {
    if (nterms >= 480) {
      throw std::runtime_error("pfq_at_one: accelerated-series cross-check failed for " +
                               to_string(p));
    }
    nterms *= 2;
    accel = accelerated_at_one(p, nterms, ctx);
  }
  return primary;
}

GammaBracket gauss_sum(const Rational& a, const Rational& b, const Rational& c) {
  if (is_nonpositive_integer(c)) {
    throw std::domain_error("gauss_sum: c is a nonpositive integer");
  }
  const Rational s = c - a - b;
  if (!(s > 0)) throw std::domain_error("gauss_sum: divergent (c - a - b <= 0)");
  GammaBracket br{{c, s}, {c - a, c - b}};
  for (const auto& r : br.den) {
    if (!(r > 0)) throw std::domain_error("gauss_sum: bracket argument nonpositive");
  }
  return bracket_simplify(br);
}

GammaBracket watson_sum(const Rational& a, const Rational& b, const Rational& c) {
  const Rational half(1, 2);
  GammaBracket br{{half, c + half, (1 + a + b) / 2, (1 - a - b) / 2 + c},
                  {(1 + a) / 2, (1 + b) / 2, (1 - a) / 2 + c, (1 - b) / 2 + c}};
  for (const auto& r : br.num) {
    if (!(r > 0)) throw std::domain_error("watson_sum: bracket argument nonpositive");
  }
  for (const auto& r : br.den) {
    if (!(r > 0)) throw std::domain_error("watson_sum: bracket argument nonpositive");
  }
  return bracket_simplify(br);
}

GammaBracket watson_match(const HypParams& p) {
  if (p.upper.size() != 3 || p.lower.size() != 2) {
    throw std::invalid_argument("watson_match: not a 3F2 parameter set");
  }
  for (std::size_t ic = 0; ic < 3; ++ic) {
    const Rational c = p.upper[ic];
    const Rational a = p.upper[(ic + 1) % 3];
    const Rational b = p.upper[(ic + 2) % 3];
    const Rational l1 = (1 + a + b) / 2;
    const Rational l2 = 2 * c;
    if ((p.lower[0] == l1 && p.lower[1] == l2) ||
        (p.lower[0] == l2 && p.lower[1] == l1)) {
      return watson_sum(a, b, c);
    }
  }
  throw std::invalid_argument("watson_match: lower parameters do not equal "
                              "{(1+a+b)/2, 2c} for any labeling");
}

BigFloat contiguous_check(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& e, const Rational& f, const BigFloat& z,
                          const PrecisionContext& ctx) {
  const bool at_one = !(z < 1);
  auto member = [&](const Rational& ua, const Rational& ub) {
    HypParams p;
    p.upper = {ua, ub, c};
    p.lower = {e, f};
    return at_one ? pfq_at_one(p, ctx).value
                  : series_sum(p, z, false, ctx, "contiguous_check").value;
  };
  const BigFloat f1 = member(a, b);
  const BigFloat f2 = member(a + 1, b);
  const BigFloat f3 = member(a, b + 1);
  return abs(ctx.real(b - a) * f1 + ctx.real(a) * f2 - ctx.real(b) * f3);
}

BigFloat cubic_transform_check(const Rational& a, const BigFloat& x,
                               const PrecisionContext& ctx) {
  if (x.sign() < 0 || !(x < 1)) {
    throw std::domain_error("cubic_transform_check: x must lie in [0, 1)");
  }
  const BigFloat one = ctx.real(1);
  const BigFloat ratio = (one - x) / (one + 2 * x);
  const BigFloat big_arg = one - ratio * ratio * ratio;

  HypParams left;
  left.upper = {a / 3, (a + 1) / 3};
  left.lower = {(a + 1) / 2};
  const BigFloat lhs = series_sum(left, big_arg, false, ctx, "cubic_transform_check").value;

  HypParams right;
  right.upper = {a / 3, (a + 1) / 3};
  right.lower = {(a + 5) / 6};
  const BigFloat rhs = pow(one + 2 * x, a) *
                       series_sum(right, x * x * x, false, ctx, "cubic_transform_check").value;
  return abs(lhs - rhs);
}

}  // namespace ltheta
