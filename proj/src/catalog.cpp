#include "ltheta/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace ltheta {

namespace {

ThetaFactor th2(long s, unsigned e) { return {ThetaKind::Jacobi2, s, e}; }
ThetaFactor th3(long s, unsigned e) { return {ThetaKind::Jacobi3, s, e}; }
ThetaFactor th4(long s, unsigned e) { return {ThetaKind::Jacobi4, s, e}; }
ThetaFactor ba(long s, unsigned e) { return {ThetaKind::BorweinA, s, e}; }
ThetaFactor bb(long s, unsigned e) { return {ThetaKind::BorweinB, s, e}; }
ThetaFactor bc(long s, unsigned e) { return {ThetaKind::BorweinC, s, e}; }

RhsAtom pi_pow(const Rational& e) { return {RhsAtomKind::Pi, Rational(0), e}; }
RhsAtom gam(const Rational& arg, const Rational& e) { return {RhsAtomKind::Gamma, arg, e}; }
RhsAtom base(const Rational& b, const Rational& e) { return {RhsAtomKind::Base, b, e}; }
RhsAtom sqrt2p1(const Rational& e) { return {RhsAtomKind::SqrtTwoPlusOne, Rational(0), e}; }
RhsAtom sqrt2m1(const Rational& e) { return {RhsAtomKind::SqrtTwoMinusOne, Rational(0), e}; }

Rational r(long n, long d = 1) { return rational(n, d); }

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> v;

  v.push_back({"T1.i",
               {r(1, 2), {th2(4, 1), th3(4, 4), th4(8, 1)}},
               {r(1, 8),
                {sqrt2p1(r(1, 2)), gam(r(1, 4), r(2)), pi_pow(r(-1, 2))},
                {r(1, 4), r(1, 2), r(1, 2)},
                {r(3, 8), r(1)}}});
  v.push_back({"T1.ii",
               {r(1, 2), {th2(4, 1), th3(4, 3), th4(4, 2)}},
               {r(1, 8),
                {gam(r(1, 4), r(2)), base(r(2), r(-1, 2)), pi_pow(r(-1, 2))},
                {r(1, 4), r(1, 2), r(1, 2)},
                {r(3, 4), r(1)}}});
  v.push_back({"T1.iii",
               {r(1, 2), {th2(4, 1), th3(4, 2), th4(4, 3)}},
               {r(1, 4),
                {pi_pow(r(1)), base(r(2), r(-1, 2))},
                {r(1, 4), r(1, 2), r(1, 2)},
                {r(1), r(1)}}});
  v.push_back({"T1.iv",
               {r(1, 2), {th2(4, 1), th4(4, 5)}},
               {r(1, 16),
                {gam(r(1, 4), r(2)), pi_pow(r(-1, 2))},
                {r(1, 4), r(1, 2), r(1, 2)},
                {r(3, 2), r(1)}}});
  v.push_back({"T1.v",
               {r(1, 2), {th2(4, 1), th4(8, 5)}},
               {r(1, 16),
                {sqrt2m1(r(1, 2)), gam(r(1, 4), r(4)), pi_pow(r(-2))},
                {},
                {}}});
  v.push_back({"T1.vi",
               {r(1, 4), {th2(2, 2), th3(2, 3), th4(2, 1)}},
               {r(1, 8),
                {gam(r(1, 4), r(2)), base(r(2), r(-1, 2)), pi_pow(r(-1, 2))},
                {r(1, 2), r(1, 2), r(1, 2)},
                {r(3, 4), r(1)}}});
  v.push_back({"T1.vii",
               {r(1, 4), {th2(2, 2), th3(2, 1), th4(2, 3)}},
               {r(1, 2),
                {gam(r(3, 4), r(2)), base(r(2), r(-1, 2)), pi_pow(r(-1, 2))},
                {r(1, 2), r(1, 2), r(1, 2)},
                {r(5, 4), r(1)}}});
  v.push_back({"T1.viii",
               {r(1, 4), {th2(2, 2), th4(2, 4)}},
               {r(1, 4),
                {},
                {r(1, 2), r(1, 2), r(1, 2)},
                {r(3, 2), r(1)}}});
  v.push_back({"T1.ix",
               {r(1, 8), {th2(4, 3), th3(4, 2), th4(4, 1)}},
               {r(1, 16),
                {pi_pow(r(1)), base(r(2), r(-1, 2))},
                {r(3, 4), r(1, 2), r(1, 2)},
                {r(1), r(1)}}});
  v.push_back({"T1.x",
               {r(1, 8), {th2(4, 3), th3(4, 1), th4(4, 2)}},
               {r(1, 8),
                {gam(r(3, 4), r(2)), base(r(2), r(-1, 2)), pi_pow(r(-1, 2))},
                {r(3, 4), r(1, 2), r(1, 2)},
                {r(5, 4), r(1)}}});
  v.push_back({"T1.xi",
               {r(1, 8), {th2(4, 3), th4(4, 3)}},
               {r(1, 32), {pi_pow(r(1)), base(r(2), r(-1, 2))}, {}, {}}});
  v.push_back({"T1.xii",
               {r(1, 8), {th2(4, 3), th4(8, 3)}},
               {r(1, 128),
                {gam(r(1, 8), r(1)), gam(r(1, 4), r(1)), gam(r(3, 8), r(3)),
                 pi_pow(r(-5, 2))},
                {},
                {}}});
  v.push_back({"T1.xiii",
               {r(1, 16), {th2(1, 4), th4(1, 2)}},
               {r(1, 16), {pi_pow(r(1))}, {}, {}}});
  v.push_back({"T1.xiv",
               {r(1, 32), {th2(4, 5), th4(4, 1)}},
               {r(1, 256),
                {gam(r(1, 4), r(2)), pi_pow(r(-1, 2))},
                {r(5, 4), r(1, 2), r(1, 2)},
                {r(3, 2), r(1)}}});
  v.push_back({"T1.xv",
               {r(1, 32), {th2(4, 5), th4(8, 1)}},
               {r(1, 128),
                {sqrt2p1(r(1, 2)), gam(r(1, 4), r(4)), pi_pow(r(-2))},
                {},
                {}}});

  v.push_back({"T2.i",
               {r(1, 3), {ba(3, 1), bc(3, 1), bb(3, 1)}},
               {r(1, 8),
                {gam(r(1, 3), r(6)), base(r(3), r(-1, 2)), pi_pow(r(-3))},
                {},
                {}}});
  v.push_back({"T2.ii",
               {r(1, 3), {bc(3, 1), bb(3, 2)}},
               {r(2, 9),
                {pi_pow(r(1)), base(r(3), r(-1, 2))},
                {r(1, 3), r(1, 3), r(2, 3)},
                {r(1), r(1)}}});
  v.push_back({"T2.iii",
               {r(1, 9), {bc(3, 2), bb(3, 1)}},
               {r(2, 27),
                {pi_pow(r(1)), base(r(3), r(-1, 2))},
                {r(1, 3), r(2, 3), r(2, 3)},
                {r(1), r(1)}}});
  v.push_back({"T2.iv",
               {r(1, 3), {bc(3, 1), bb(9, 2)}},
               {r(2),
                {pi_pow(r(1)), base(r(3), r(-11, 6))},
                {r(1, 9), r(4, 9), r(7, 9)},
                {r(1), r(1)}},
               false});
  v.push_back({"T2.v",
               {r(1, 9), {bc(3, 2), bb(9, 1)}},
               {r(2),
                {pi_pow(r(1)), base(r(3), r(-13, 6))},
                {r(2, 9), r(5, 9), r(8, 9)},
                {r(1), r(1)}},
               false});
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("catalog_entry: unknown id '" + id + "'");
}

std::string to_string(const RhsClosedForm& rhs) {
  std::ostringstream os;
  os << "(" << to_string(rhs.scale) << ")";
  for (const auto& a : rhs.atoms) {
    os << " * ";
    switch (a.kind) {
      case RhsAtomKind::Pi:
        os << "pi";
        break;
      case RhsAtomKind::Gamma:
        os << "Gamma(" << to_string(a.arg) << ")";
        break;
      case RhsAtomKind::Base:
        os << to_string(a.arg);
        break;
      case RhsAtomKind::SqrtTwoPlusOne:
        os << "(sqrt(2)+1)";
        break;
      case RhsAtomKind::SqrtTwoMinusOne:
        os << "(sqrt(2)-1)";
        break;
    }
    if (a.exp != 1) {
      if (a.exp.get_den() == 1 && a.exp > 0) {
        os << "^" << to_string(a.exp);
      } else {
        os << "^(" << to_string(a.exp) << ")";
      }
    }
  }
  if (!rhs.hyp_upper.empty()) {
    os << " * 3F2[";
    for (std::size_t i = 0; i < rhs.hyp_upper.size(); ++i) {
      if (i) os << ", ";
      os << to_string(rhs.hyp_upper[i]);
    }
    os << "; ";
    for (std::size_t i = 0; i < rhs.hyp_lower.size(); ++i) {
      if (i) os << ", ";
      os << to_string(rhs.hyp_lower[i]);
    }
    os << "; 1]";
  }
  return os.str();
}

}  // namespace ltheta
