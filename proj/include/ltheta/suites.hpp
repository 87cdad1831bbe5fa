#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltheta/bigfloat.hpp"

namespace ltheta {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exact q-series identity suites, each checked coefficientwise through
// O(q^order): the Jacobi identity, the double-argument square, the cubic
// identity, the three triple-argument relations, and the remark splitting.
std::vector<SuiteResult> exact_identity_suites(long order);

// Randomized two-sided numeric suites (Gauss, Watson, contiguous relation,
// cubic transformation, gamma reflection and multiplication). Summation
// theorems are held to a 1e-20 relative error and the relation residuals to
// 1e-25 when the context carries the default precision headroom; the
// thresholds relax in step with smaller target+guard budgets.
std::vector<SuiteResult> numeric_identity_suites(std::uint64_t seed,
                                                 const PrecisionContext& ctx);

}  // namespace ltheta
