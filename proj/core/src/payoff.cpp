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

#include "relprofit/payoff.hpp"

#include <string>
#include <utility>

#include "relprofit/error.hpp"

namespace relprofit {

PayoffVector payoffs(const Vector& quantities, const Vector& prices, const MarketParams& params) {
  const int n = params.n;
  if (quantities.size() != n || prices.size() != n) {
    throw InvalidArgument("outcome size does not match n");
  }
  PayoffVector out{Vector(n), Vector(n)};
  for (int i = 0; i < n; ++i) {
    out.absolute(i) = (prices(i) - params.costs[static_cast<std::size_t>(i)]) * quantities(i);
  }
  const double total = out.absolute.sum();
  const double rivals = static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) {
    out.relative(i) = out.absolute(i) - (total - out.absolute(i)) / rivals;
  }
  return out;
}

PayoffVector payoffs(const OutcomeProfile& outcome, const MarketParams& params) {
  return payoffs(outcome.quantities, outcome.prices, params);
}

RelativeProfitGame::RelativeProfitGame(MarketParams params, const DemandSystem& system,
                                       const Pattern& pattern)
    : params_(std::move(params)), map_(build_pattern_map(system, pattern)) {
  const int n = params_.n;
  cost_ = Eigen::Map<const Vector>(params_.costs.data(), n);

  // g_k(v) = sum_j w_kj [dp_jk x_j(v) + (p_j(v) - c_j) dx_jk]
  foc_matrix_ = Matrix::Zero(n, n);
  foc_offset_ = Vector::Zero(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const double w = weight(k, j);
      const double dpk = map_.dp(j, k);
      const double dxk = map_.dx(j, k);
      foc_offset_(k) += w * (dpk * map_.x0(j) + (map_.p0(j) - cost_(j)) * dxk);
      for (int m = 0; m < n; ++m) {
        foc_matrix_(k, m) += w * (dpk * map_.dx(j, m) + map_.dp(j, m) * dxk);
      }
    }
  }
}

double RelativeProfitGame::weight(int player, int j) const {
  return j == player ? 1.0 : -1.0 / static_cast<double>(params_.n - 1);
}

OutcomeProfile RelativeProfitGame::outcome(const Vector& strategy) const {
  return resolve_outcome(params_, map_, strategy);
}

double RelativeProfitGame::relative_profit(const Vector& strategy, int player) const {
  const Vector x = map_.quantities(strategy);
  const Vector p = map_.prices(strategy);
  double value = 0.0;
  for (int j = 0; j < params_.n; ++j) value += weight(player, j) * (p(j) - cost_(j)) * x(j);
  return value;
}

double RelativeProfitGame::gradient(const Vector& strategy, int player, int wrt) const {
  const Vector x = map_.quantities(strategy);
  const Vector p = map_.prices(strategy);
  double g = 0.0;
  for (int j = 0; j < params_.n; ++j) {
    g += weight(player, j) * (map_.dp(j, wrt) * x(j) + (p(j) - cost_(j)) * map_.dx(j, wrt));
  }
  return g;
}

double RelativeProfitGame::second_derivative(int player, int wrt_a, int wrt_b) const {
  double h = 0.0;
  for (int j = 0; j < params_.n; ++j) {
    h += weight(player, j) *
         (map_.dp(j, wrt_a) * map_.dx(j, wrt_b) + map_.dp(j, wrt_b) * map_.dx(j, wrt_a));
  }
  return h;
}

Vector RelativeProfitGame::foc_residuals(const Vector& strategy) const {
  return foc_matrix_ * strategy + foc_offset_;
}

double RelativeProfitGame::best_response_vertex(const Vector& strategy, int player) const {
  const double curvature = foc_matrix_(player, player);
  if (!(curvature < 0.0)) {
    throw Error("relative profit of firm " + std::to_string(player + 1) +
                " is not strictly concave in its own variable under pattern " +
                map_.pattern.str());
  }
  return strategy(player) - own_gradient(strategy, player) / curvature;
}

double payoff_gradient(const MarketParams& params, const DemandSystem& system,
                       const Pattern& pattern, std::span<const double> strategy, int player) {
  if (player < 0 || player >= params.n) throw InvalidArgument("player index out of range");
  const RelativeProfitGame game(params, system, pattern);
  if (static_cast<int>(strategy.size()) != params.n) {
    throw InvalidArgument("strategy size does not match n");
  }
  const Vector v = Eigen::Map<const Vector>(strategy.data(), params.n);
  return game.own_gradient(v, player);
}

}  // namespace relprofit
