#include "ltheta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ltheta {

Rational rational(long n, long d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw std::invalid_argument("parse_rational: bad character in '" + text + "'");
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: malformed '" + text + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_nonpositive_integer(const Rational& r) { return is_integer(r) && r <= 0; }

long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_long: not an integer: " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw std::domain_error("to_long: overflow");
  return r.get_num().get_si();
}

long floor_long(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::domain_error("floor_long: overflow");
  return q.get_si();
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("pow_int: zero base, negative exponent");
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace ltheta
