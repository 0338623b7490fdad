// Copyright 2026 The relprofit Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELPROFIT_CLOSED_FORM_HPP_
#define RELPROFIT_CLOSED_FORM_HPP_

#include <string>
#include <vector>

#include "relprofit/equilibrium.hpp"
#include "relprofit/market.hpp"

namespace relprofit {

// Published closed-form equilibrium outputs for the four-firm market.
// One-alien cases assume c_A = c_B = c_C (firm D is the alien); two-alien
// cases assume c_A = c_B and c_C = c_D.
enum class CaseLabel {
  kOneAlienP1,  // QQQQ
  kOneAlienP2,  // QQQP
  kOneAlienP3,  // PPPQ
  kOneAlienP4,  // PPPP
  kTwoAlienP1,  // QQQQ
  kTwoAlienP2,  // QQPP
};

const char* to_string(CaseLabel label);

// Numerator coefficients over the monomials of (a, b, c_lo, c_hi), where
// c_lo is the cost of firm A and c_hi the cost of firm D.
struct Numerator {
  double a = 0, ab = 0, abb = 0;
  double c_lo = 0, b_c_lo = 0, bb_c_lo = 0;
  double c_hi = 0, b_c_hi = 0, bb_c_hi = 0;

  double operator()(double a_, double b_, double c_lo_, double c_hi_) const;
  friend bool operator==(const Numerator&, const Numerator&) = default;
};

// scale * (3 - b)^e0 * (1 + b)^e1 * (1 - b)^e2 * (7b + 3)^e3
struct Denominator {
  double scale = 1;
  int three_minus_b = 0;
  int one_plus_b = 0;
  int one_minus_b = 0;
  int seven_b_plus_3 = 0;

  double operator()(double b) const;
  friend bool operator==(const Denominator&, const Denominator&) = default;
};

struct ClosedFormula {
  Numerator numerator;
  Denominator denominator;

  double operator()(double a, double b, double c_lo, double c_hi) const {
    return numerator(a, b, c_lo, c_hi) / denominator(b);
  }
  friend bool operator==(const ClosedFormula&, const ClosedFormula&) = default;
};

struct ClosedFormCase {
  CaseLabel label;
  Pattern pattern;
  bool two_alien = false;
  std::vector<ClosedFormula> formulas;  // one per firm A..D
  // Firms whose printed output fails to satisfy their own first-order
  // condition whenever c_D != c_A.
  std::vector<int> erratum_flags;
};

const ClosedFormCase& closed_form_case(CaseLabel label);
const std::vector<ClosedFormCase>& all_closed_form_cases();

// Throws InvalidArgument if n != 4 and CostStructureMismatch if the costs
// do not have the case's symmetry.
std::vector<double> evaluate_case(const ClosedFormCase& c, const MarketParams& params);

enum class AuditStatus { kMatch, kMismatch };

struct AuditEntry {
  int player = 0;
  AuditStatus status = AuditStatus::kMatch;
  double printed = 0.0;
  double solved = 0.0;
  double delta = 0.0;
  bool erratum_flagged = false;
};

struct AuditVerdict {
  std::vector<AuditEntry> entries;
  // Every mismatch is on an erratum-flagged firm, and every flagged firm
  // mismatches when c_D != c_A.
  bool consistent = true;
};

inline constexpr double kAuditTol = 1e-8;

// Compares printed outputs against a solver report for the same market and
// pattern. Throws InvalidArgument on a pattern mismatch.
AuditVerdict audit_case(const ClosedFormCase& c, const MarketParams& params,
                        const EquilibriumReport& solver_report, double tol = kAuditTol);

}  // namespace relprofit

#endif  // RELPROFIT_CLOSED_FORM_HPP_
