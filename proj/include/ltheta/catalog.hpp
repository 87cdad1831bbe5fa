#pragma once

#include <string>
#include <vector>

#include "ltheta/rational.hpp"
#include "ltheta/theta.hpp"

namespace ltheta {

// Closed forms are products of powers of a few atoms:
//   Pi             pi
//   Gamma          Gamma(arg)
//   Base           the rational arg itself (e.g. 2, 3)
//   SqrtTwoPlusOne sqrt(2) + 1
//   SqrtTwoMinusOne sqrt(2) - 1
enum class RhsAtomKind { Pi, Gamma, Base, SqrtTwoPlusOne, SqrtTwoMinusOne };

struct RhsAtom {
  RhsAtomKind kind;
  Rational arg = Rational(0);  // Gamma argument or Base value
  Rational exp = Rational(1);
};

// scale * prod atoms ^ exp * [ 3F2(upper; lower; 1) when present ].
struct RhsClosedForm {
  Rational scale = Rational(1);
  std::vector<RhsAtom> atoms;
  std::vector<Rational> hyp_upper;  // empty <=> purely closed constant
  std::vector<Rational> hyp_lower;
};

struct CatalogEntry {
  std::string id;  // "T1.i" .. "T1.xv", "T2.i" .. "T2.v"
  ThetaProductForm form;
  RhsClosedForm rhs;
  // True when the Mellin transform reduces to a single Gamma bracket times a
  // 3F2(1) under the uniform argument-scale pullback (all arg scales equal,
  // up to paired square-root factors at twice the common scale).
  bool pullback_supported = true;
};

// The twenty verified evaluations, in table order.
const std::vector<CatalogEntry>& catalog();

// Lookup by id; throws std::out_of_range for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);

std::string to_string(const RhsClosedForm& rhs);

}  // namespace ltheta
