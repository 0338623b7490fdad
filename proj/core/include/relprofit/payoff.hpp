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

#ifndef RELPROFIT_PAYOFF_HPP_
#define RELPROFIT_PAYOFF_HPP_

#include <span>

#include "relprofit/linalg.hpp"
#include "relprofit/market.hpp"

namespace relprofit {

// Absolute profits pi_i = (p_i - c_i) x_i and relative profits
// phi_i = pi_i - sum_{j != i} pi_j / (n - 1). The relative profits sum to
// zero, which makes the game zero-sum.
struct PayoffVector {
  Vector absolute;
  Vector relative;
};

PayoffVector payoffs(const Vector& quantities, const Vector& prices, const MarketParams& params);
PayoffVector payoffs(const OutcomeProfile& outcome, const MarketParams& params);

// The relative-profit game under one pattern. Payoffs are quadratic in the
// strategy vector, so the first-order conditions are the linear system
// g(v) = foc_matrix() * v + foc_offset() with g_k = d phi_k / d v_k.
class RelativeProfitGame {
 public:
  RelativeProfitGame(MarketParams params, const DemandSystem& system, const Pattern& pattern);

  const MarketParams& params() const { return params_; }
  const PatternMap& map() const { return map_; }
  const Pattern& pattern() const { return map_.pattern; }
  int size() const { return params_.n; }

  OutcomeProfile outcome(const Vector& strategy) const;
  double relative_profit(const Vector& strategy, int player) const;

  // d phi_player / d v_wrt at `strategy`.
  double gradient(const Vector& strategy, int player, int wrt) const;
  double own_gradient(const Vector& strategy, int player) const {
    return gradient(strategy, player, player);
  }
  // d^2 phi_player / (d v_a d v_b); constant because phi is quadratic.
  double second_derivative(int player, int wrt_a, int wrt_b) const;

  const Matrix& foc_matrix() const { return foc_matrix_; }
  const Vector& foc_offset() const { return foc_offset_; }
  Vector foc_residuals(const Vector& strategy) const;

  // Unconstrained maximizer of phi_player over the player's own variable
  // with the rest of `strategy` held fixed. Throws Error if phi is not
  // strictly concave in that variable.
  double best_response_vertex(const Vector& strategy, int player) const;

 private:
  double weight(int player, int j) const;

  MarketParams params_;
  PatternMap map_;
  Vector cost_;
  Matrix foc_matrix_;
  Vector foc_offset_;
};

// d phi_player / d (player's own chosen variable), in closed form.
double payoff_gradient(const MarketParams& params, const DemandSystem& system,
                       const Pattern& pattern, std::span<const double> strategy, int player);

}  // namespace relprofit

#endif  // RELPROFIT_PAYOFF_HPP_
