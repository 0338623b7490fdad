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

#include "relprofit/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "relprofit/error.hpp"

namespace relprofit {

double Numerator::operator()(double a_, double b_, double lo, double hi) const {
  return a * a_ + ab * a_ * b_ + abb * a_ * b_ * b_ + c_lo * lo + b_c_lo * b_ * lo +
         bb_c_lo * b_ * b_ * lo + c_hi * hi + b_c_hi * b_ * hi + bb_c_hi * b_ * b_ * hi;
}

double Denominator::operator()(double b) const {
  return scale * std::pow(3.0 - b, three_minus_b) * std::pow(1.0 + b, one_plus_b) *
         std::pow(1.0 - b, one_minus_b) * std::pow(7.0 * b + 3.0, seven_b_plus_3);
}

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kOneAlienP1: return "OneAlienP1";
    case CaseLabel::kOneAlienP2: return "OneAlienP2";
    case CaseLabel::kOneAlienP3: return "OneAlienP3";
    case CaseLabel::kOneAlienP4: return "OneAlienP4";
    case CaseLabel::kTwoAlienP1: return "TwoAlienP1";
    case CaseLabel::kTwoAlienP2: return "TwoAlienP2";
  }
  return "?";
}

namespace {

// (bc_D - 3c_A - ab + 3a) / (2(3-b)(b+1))
constexpr Numerator kCournotOneAlien{.a = 3, .ab = -1, .c_lo = -3, .b_c_hi = 1};
constexpr Denominator kCournotDen{.scale = 2, .three_minus_b = 1, .one_plus_b = 1};

// (3b^2c_D + bc_D + 4b^2c_A - 5bc_A - 3c_A - 7ab^2 + 4ab + 3a) / (2(1-b)(b+1)(7b+3))
constexpr Numerator kBertrandOneAlienMajority{.a = 3, .ab = 4, .abb = -7, .c_lo = -3,
                                              .b_c_lo = -5, .bb_c_lo = 4, .b_c_hi = 1,
                                              .bb_c_hi = 3};
// (3a - 2b^2c_D - 7bc_D - 3c_D + 9b^2c_A + 3bc_A - 7ab^2 + 4ab) / (same)
constexpr Numerator kBertrandOneAlienAlien{.a = 3, .ab = 4, .abb = -7, .b_c_lo = 3,
                                           .bb_c_lo = 9, .c_hi = -3, .b_c_hi = -7,
                                           .bb_c_hi = -2};
constexpr Denominator kBertrandDen{.scale = 2, .one_plus_b = 1, .one_minus_b = 1,
                                   .seven_b_plus_3 = 1};

// (2bc_D - bc_A - 3c_A - ab + 3a) / (2(3-b)(b+1))
constexpr Numerator kTwoAlienP1Low{.a = 3, .ab = -1, .c_lo = -3, .b_c_lo = -1, .b_c_hi = 2};
// (3a - bc_D - 3c_D + 2bc_A - ab) / (2(3-b)(b+1))
constexpr Numerator kTwoAlienP1High{.a = 3, .ab = -1, .b_c_lo = 2, .c_hi = -3, .b_c_hi = -1};

// (2bc_D + bc_A - 3c_A - 3ab + 3a) / (6(1-b)(b+1))
constexpr Numerator kTwoAlienP2Low{.a = 3, .ab = -3, .c_lo = -3, .b_c_lo = 1, .b_c_hi = 2};
// (bc_D - 3c_D + 2bc_A - 3ab + 3a) / (6(1-b)(b+1))
constexpr Numerator kTwoAlienP2High{.a = 3, .ab = -3, .b_c_lo = 2, .c_hi = -3, .b_c_hi = 1};
constexpr Denominator kTwoAlienP2Den{.scale = 6, .one_plus_b = 1, .one_minus_b = 1};

std::vector<ClosedFormCase> build_cases() {
  const ClosedFormula cournot{kCournotOneAlien, kCournotDen};
  const ClosedFormula bertrand_major{kBertrandOneAlienMajority, kBertrandDen};
  const ClosedFormula bertrand_alien{kBertrandOneAlienAlien, kBertrandDen};
  const ClosedFormula two_p1_lo{kTwoAlienP1Low, kCournotDen};
  const ClosedFormula two_p1_hi{kTwoAlienP1High, kCournotDen};
  const ClosedFormula two_p2_lo{kTwoAlienP2Low, kTwoAlienP2Den};
  const ClosedFormula two_p2_hi{kTwoAlienP2High, kTwoAlienP2Den};

  // The printed Cournot block repeats the majority expression for firm D.
  return {
      {CaseLabel::kOneAlienP1, Pattern::parse("QQQQ"), false,
       {cournot, cournot, cournot, cournot}, {3}},
      {CaseLabel::kOneAlienP2, Pattern::parse("QQQP"), false,
       {cournot, cournot, cournot, cournot}, {3}},
      {CaseLabel::kOneAlienP3, Pattern::parse("PPPQ"), false,
       {bertrand_major, bertrand_major, bertrand_major, bertrand_alien}, {}},
      {CaseLabel::kOneAlienP4, Pattern::parse("PPPP"), false,
       {bertrand_major, bertrand_major, bertrand_major, bertrand_alien}, {}},
      {CaseLabel::kTwoAlienP1, Pattern::parse("QQQQ"), true,
       {two_p1_lo, two_p1_lo, two_p1_hi, two_p1_hi}, {}},
      {CaseLabel::kTwoAlienP2, Pattern::parse("QQPP"), true,
       {two_p2_lo, two_p2_lo, two_p2_hi, two_p2_hi}, {}},
  };
}

}  // namespace

const std::vector<ClosedFormCase>& all_closed_form_cases() {
  static const std::vector<ClosedFormCase> cases = build_cases();
  return cases;
}

const ClosedFormCase& closed_form_case(CaseLabel label) {
  return all_closed_form_cases()[static_cast<std::size_t>(label)];
}

std::vector<double> evaluate_case(const ClosedFormCase& c, const MarketParams& params) {
  validate(params);
  if (params.n != 4) {
    throw InvalidArgument("closed forms exist only for n = 4 (got " + std::to_string(params.n) +
                          ")");
  }
  const auto& k = params.costs;
  if (c.two_alien) {
    if (k[1] != k[0] || k[3] != k[2]) {
      throw CostStructureMismatch(std::string(to_string(c.label)) +
                                  " needs c_B = c_A and c_D = c_C");
    }
  } else if (k[1] != k[0] || k[2] != k[0]) {
    throw CostStructureMismatch(std::string(to_string(c.label)) + " needs c_A = c_B = c_C");
  }
  std::vector<double> out;
  out.reserve(c.formulas.size());
  for (const ClosedFormula& f : c.formulas) out.push_back(f(params.a, params.b, k[0], k[3]));
  return out;
}

AuditVerdict audit_case(const ClosedFormCase& c, const MarketParams& params,
                        const EquilibriumReport& solver_report, double tol) {
  if (!(solver_report.pattern == c.pattern)) {
    throw InvalidArgument(std::string(to_string(c.label)) + " expects pattern " + c.pattern.str() +
                          " but the report is for " + solver_report.pattern.str());
  }
  if (!(solver_report.params == params)) {
    throw ParamMismatch("solver report was computed from different market parameters");
  }
  const std::vector<double> printed = evaluate_case(c, params);
  const bool asymmetric = params.costs[3] != params.costs[0];

  AuditVerdict verdict;
  for (int i = 0; i < 4; ++i) {
    AuditEntry e;
    e.player = i;
    e.printed = printed[static_cast<std::size_t>(i)];
    e.solved = solver_report.outcome.quantities(i);
    e.delta = e.printed - e.solved;
    e.status = std::abs(e.delta) <= tol ? AuditStatus::kMatch : AuditStatus::kMismatch;
    e.erratum_flagged =
        std::find(c.erratum_flags.begin(), c.erratum_flags.end(), i) != c.erratum_flags.end();
    const bool expect_mismatch = e.erratum_flagged && asymmetric;
    if ((e.status == AuditStatus::kMismatch) != expect_mismatch) verdict.consistent = false;
    verdict.entries.push_back(e);
  }
  return verdict;
}

}  // namespace relprofit
