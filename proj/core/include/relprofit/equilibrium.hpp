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

#ifndef RELPROFIT_EQUILIBRIUM_HPP_
#define RELPROFIT_EQUILIBRIUM_HPP_

#include <vector>

#include "relprofit/linalg.hpp"
#include "relprofit/market.hpp"
#include "relprofit/payoff.hpp"

namespace relprofit {

enum class SolveMethod { kFocSolve, kBestResponse };

const char* to_string(SolveMethod method);

// Interior equilibria are reported with residual < 1e-8. Candidates that
// leave the strategy domain are kept unclipped and flagged in
// boundary_players.
struct EquilibriumReport {
  MarketParams params;
  Pattern pattern;
  Vector strategy;
  OutcomeProfile outcome;
  PayoffVector payoffs;
  SolveMethod method = SolveMethod::kFocSolve;
  int iterations = 0;
  // Sup-norm of the FOC values (FocSolve) or of the last step (BestResponse).
  double residual = 0.0;
  std::vector<int> boundary_players;

  bool boundary() const { return !boundary_players.empty(); }
};

// Solves the linear first-order conditions d phi_i / d v_i = 0 directly.
// Throws SingularSystem when the FOC matrix is singular and Error when the
// FOC residual after the solve exceeds 1e-10.
EquilibriumReport solve_foc(const MarketParams& params, const DemandSystem& system,
                            const Pattern& pattern);

struct BestResponseOptions {
  double damping = 0.5;
  double tol = 1e-10;
  int max_iter = 10000;
};

// Damped simultaneous best-response iteration from the domain midpoints:
// v <- (1 - damping) v + damping BR(v), where BR_i is the concave-quadratic
// vertex clamped to the domain. Throws NoConvergence after max_iter.
EquilibriumReport solve_best_response(const MarketParams& params, const DemandSystem& system,
                                      const Pattern& pattern, const BestResponseOptions& options = {});

struct EquivalenceVerdict {
  bool equivalent = false;
  double max_deviation = 0.0;
  // Where the largest deviation occurs.
  Variable component = Variable::kQuantity;
  int player = 0;
};

inline constexpr double kDefaultEquivalenceTol = 1e-7;

// Compares outcomes (quantities and prices), never strategy coordinates.
// Throws ParamMismatch when the reports come from different markets.
EquivalenceVerdict compare_equilibria(const EquilibriumReport& lhs, const EquilibriumReport& rhs,
                                      double tol = kDefaultEquivalenceTol);

}  // namespace relprofit

#endif  // RELPROFIT_EQUILIBRIUM_HPP_
