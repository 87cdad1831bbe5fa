#include "ltheta/qseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ltheta {

namespace {

// Largest s with x/s and y/s both integral: gcd(num)/lcm(den).
Rational rational_gcd(const Rational& x, const Rational& y) {
  if (x == 0 && y == 0) return Rational(1);
  if (x == 0) return abs(y);
  if (y == 0) return abs(x);
  const Integer gn = gcd(x.get_num(), y.get_num());
  const Integer ld = lcm(x.get_den(), y.get_den());
  return rational(gn, ld);
}

Integer integral_quotient(const Rational& x, const Rational& s) {
  const Rational q = x / s;
  if (q.get_den() != 1) {
    throw std::logic_error("qseries: non-integral scale quotient");
  }
  return q.get_num();
}

QExpansion rescale_denom(const QExpansion& x, long denom) {
  if (denom == x.denom) return x;
  if (denom % x.denom != 0) {
    throw std::logic_error("qseries: denominator rescale must be integral");
  }
  const long m = denom / x.denom;
  QExpansion out;
  out.denom = denom;
  out.scale = x.scale;
  out.truncation = x.truncation * m;
  out.coeff.assign(static_cast<std::size_t>(out.truncation), Integer(0));
  for (long k = 0; k < x.truncation; ++k) {
    if (x.coeff[static_cast<std::size_t>(k)] != 0) {
      out.coeff[static_cast<std::size_t>(k * m)] = x.coeff[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

std::vector<long> support_of(const QExpansion& x) {
  std::vector<long> s;
  for (long k = 0; k < x.truncation; ++k) {
    if (x.coeff[static_cast<std::size_t>(k)] != 0) s.push_back(k);
  }
  return s;
}

}  // namespace

QExpansion qs_zero(long truncation_q, long denom) {
  if (truncation_q < 0 || denom < 1) {
    throw std::domain_error("qs_zero: invalid truncation or denominator");
  }
  QExpansion out;
  out.denom = denom;
  out.truncation = truncation_q * denom;
  out.coeff.assign(static_cast<std::size_t>(out.truncation), Integer(0));
  return out;
}

QExpansion qs_one(long truncation_q) {
  QExpansion out = qs_zero(truncation_q, 1);
  if (out.truncation > 0) out.coeff[0] = 1;
  return out;
}

QExpansion qs_monomial(const Rational& c, const Rational& e, long truncation_q) {
  if (sgn(e) < 0) {
    throw std::domain_error("qs_monomial: exponent must be nonnegative");
  }
  const long d = to_long(Integer(e.get_den()));
  QExpansion out = qs_zero(truncation_q, d);
  if (c != 0 && e < truncation_q) {
    out.coeff[static_cast<std::size_t>(to_long(Integer(e.get_num())))] = 1;
    out.scale = c;
  }
  return out;
}

void qs_normalize(QExpansion& x) {
  std::vector<long> sup = support_of(x);
  if (sup.empty() || x.scale == 0) {
    const long t = (x.truncation + x.denom - 1) / x.denom;
    x = qs_zero(t, 1);
    return;
  }
  Integer content(0);
  long grid = x.denom;
  for (long k : sup) {
    content = gcd(content, x.coeff[static_cast<std::size_t>(k)]);
    grid = std::gcd(grid, k);
  }
  if (content > 1) {
    for (long k : sup) x.coeff[static_cast<std::size_t>(k)] /= content;
    x.scale *= Rational(content);
  }
  if (grid > 1) {
    QExpansion out;
    out.denom = x.denom / grid;
    out.scale = x.scale;
    out.truncation = (x.truncation + grid - 1) / grid;
    out.coeff.assign(static_cast<std::size_t>(out.truncation), Integer(0));
    for (long k : sup) {
      out.coeff[static_cast<std::size_t>(k / grid)] =
          x.coeff[static_cast<std::size_t>(k)];
    }
    x = std::move(out);
  }
}

QExpansion qs_add(const QExpansion& a, const QExpansion& b) {
  const long denom = std::lcm(a.denom, b.denom);
  const QExpansion ar = rescale_denom(a, denom);
  const QExpansion br = rescale_denom(b, denom);
  QExpansion out;
  out.denom = denom;
  out.truncation = std::min(ar.truncation, br.truncation);
  out.coeff.assign(static_cast<std::size_t>(out.truncation), Integer(0));
  out.scale = rational_gcd(ar.scale, br.scale);
  const Integer ma = integral_quotient(ar.scale, out.scale);
  const Integer mb = integral_quotient(br.scale, out.scale);
  for (long k = 0; k < out.truncation; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out.coeff[i] = ma * ar.coeff[i] + mb * br.coeff[i];
  }
  qs_normalize(out);
  return out;
}

QExpansion qs_sub(const QExpansion& a, const QExpansion& b) {
  return qs_add(a, qs_scalar(b, Rational(-1)));
}

QExpansion qs_scalar(const QExpansion& a, const Rational& c) {
  if (c == 0) {
    return qs_zero((a.truncation + a.denom - 1) / a.denom, 1);
  }
  QExpansion out = a;
  out.scale *= c;
  return out;
}

QExpansion qs_mul(const QExpansion& a, const QExpansion& b) {
  const long denom = std::lcm(a.denom, b.denom);
  const QExpansion ar = rescale_denom(a, denom);
  const QExpansion br = rescale_denom(b, denom);
  const std::vector<long> sa = support_of(ar);
  const std::vector<long> sb = support_of(br);
  const long va = sa.empty() ? ar.truncation : sa.front();
  const long vb = sb.empty() ? br.truncation : sb.front();
  QExpansion out;
  out.denom = denom;
  out.truncation = std::min(ar.truncation + vb, br.truncation + va);
  out.coeff.assign(static_cast<std::size_t>(out.truncation), Integer(0));
  out.scale = ar.scale * br.scale;
  for (long i : sa) {
    if (i + vb >= out.truncation) break;
    const auto& ai = ar.coeff[static_cast<std::size_t>(i)];
    for (long j : sb) {
      if (i + j >= out.truncation) break;
      mpz_addmul(out.coeff[static_cast<std::size_t>(i + j)].get_mpz_t(),
                 ai.get_mpz_t(), br.coeff[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  qs_normalize(out);
  return out;
}

QExpansion qs_pow(const QExpansion& a, unsigned long e) {
  if (e == 0) {
    QExpansion out;
    out.denom = a.denom;
    out.truncation = a.truncation;
    out.coeff.assign(static_cast<std::size_t>(out.truncation), Integer(0));
    if (out.truncation > 0) out.coeff[0] = 1;
    return out;
  }
  QExpansion base = a;
  QExpansion acc;
  bool have_acc = false;
  while (e > 0) {
    if (e & 1UL) {
      acc = have_acc ? qs_mul(acc, base) : base;
      have_acc = true;
    }
    e >>= 1UL;
    if (e > 0) base = qs_mul(base, base);
  }
  return acc;
}

QExpansion qs_scale_arg(const QExpansion& a, long k) {
  if (k < 1) {
    throw std::domain_error("qs_scale_arg: scale must be a positive integer");
  }
  if (k == 1) return a;
  QExpansion out;
  out.denom = a.denom;
  out.scale = a.scale;
  out.truncation = a.truncation * k;
  out.coeff.assign(static_cast<std::size_t>(out.truncation), Integer(0));
  for (long i = 0; i < a.truncation; ++i) {
    if (a.coeff[static_cast<std::size_t>(i)] != 0) {
      out.coeff[static_cast<std::size_t>(i * k)] = a.coeff[static_cast<std::size_t>(i)];
    }
  }
  qs_normalize(out);
  return out;
}

Rational qs_coeff(const QExpansion& a, const Rational& e) {
  if (sgn(e) < 0) return Rational(0);
  if (e * a.denom >= a.truncation) {
    throw std::out_of_range("qs_coeff: exponent at or beyond truncation order");
  }
  const Rational pos = e * a.denom;
  if (pos.get_den() != 1) return Rational(0);
  const long k = to_long(Integer(pos.get_num()));
  return a.scale * Rational(a.coeff[static_cast<std::size_t>(k)]);
}

std::optional<std::pair<Rational, Rational>> qs_leading(const QExpansion& a) {
  for (long k = 0; k < a.truncation; ++k) {
    const auto& c = a.coeff[static_cast<std::size_t>(k)];
    if (c != 0 && a.scale != 0) {
      return std::make_pair(rational(Integer(k), Integer(a.denom)),
                            a.scale * Rational(c));
    }
  }
  return std::nullopt;
}

Rational qs_order(const QExpansion& a) {
  return rational(Integer(a.truncation), Integer(a.denom));
}

bool qs_is_zero(const QExpansion& a) {
  if (a.scale == 0) return true;
  for (const auto& c : a.coeff) {
    if (c != 0) return false;
  }
  return true;
}

bool qs_equal(const QExpansion& a, const QExpansion& b) {
  return qs_is_zero(qs_sub(a, b));
}

BigFloat qs_eval(const QExpansion& a, const BigFloat& q, const PrecisionContext& ctx) {
  if (q.sign() < 0 || !(q < ctx.real(1))) {
    throw std::domain_error("qs_eval: q must lie in [0, 1)");
  }
  const BigFloat root = pow(q, rational(1, a.denom));
  BigFloat acc = make_prec(ctx.working_bits());
  mpfr_set_zero(acc.raw(), 1);
  for (long k = 0; k < a.truncation; ++k) {
    const auto& c = a.coeff[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    acc = acc + ctx.real(Rational(c)) * pow(root, k);
  }
  return ctx.real(a.scale) * acc;
}

std::string to_string(const QExpansion& a, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t printed = 0;
  bool elided = false;
  for (long k = 0; k < a.truncation; ++k) {
    const auto& raw = a.coeff[static_cast<std::size_t>(k)];
    if (raw == 0 || a.scale == 0) continue;
    if (printed == max_terms) {
      elided = true;
      break;
    }
    Rational c = a.scale * Rational(raw);
    if (printed == 0) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const Rational e = rational(Integer(k), Integer(a.denom));
    if (e == 0) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      if (e == 1) {
        os << "q";
      } else if (e.get_den() == 1) {
        os << "q^" << to_string(e);
      } else {
        os << "q^(" << to_string(e) << ")";
      }
    }
    ++printed;
  }
  if (printed == 0) os << "0";
  if (elided) os << " + ...";
  os << " + O(q^" << (qs_order(a).get_den() == 1 ? to_string(qs_order(a))
                                                 : "(" + to_string(qs_order(a)) + ")")
     << ")";
  return os.str();
}

}  // namespace ltheta
