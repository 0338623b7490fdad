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

#include "relprofit/market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

#include "relprofit/error.hpp"
#include "relprofit/payoff.hpp"

namespace relprofit {

bool MarketParams::one_alien() const {
  if (costs.size() < 2) return true;
  return std::all_of(costs.begin(), costs.end() - 1,
                     [&](double c) { return c == costs.front(); });
}

void validate(const MarketParams& params) {
  if (params.n < 3) {
    throw InvalidArgument("n must be at least 3 (got " + std::to_string(params.n) + ")");
  }
  if (params.costs.size() != params.size()) {
    throw InvalidArgument("costs has " + std::to_string(params.costs.size()) +
                          " entries but n = " + std::to_string(params.n));
  }
  if (!(std::isfinite(params.a) && params.a > 0.0)) {
    throw InvalidArgument("a must be positive");
  }
  if (!(params.b > 0.0 && params.b < 1.0)) {
    throw InvalidArgument("b must lie in (0,1)");
  }
  for (std::size_t i = 0; i < params.costs.size(); ++i) {
    const double c = params.costs[i];
    if (!(c >= 0.0 && c < params.a)) {
      throw InvalidArgument("cost of firm " + std::to_string(i + 1) + " must lie in [0, a)");
    }
  }
}

MarketParams make_params(double a, double b, std::vector<double> costs) {
  MarketParams params;
  params.n = static_cast<int>(costs.size());
  params.a = a;
  params.b = b;
  params.costs = std::move(costs);
  validate(params);
  return params;
}

char to_char(Variable v) { return v == Variable::kQuantity ? 'Q' : 'P'; }

const char* to_string(Variable v) { return v == Variable::kQuantity ? "quantity" : "price"; }

Pattern::Pattern(std::vector<Variable> choices) : choices_(std::move(choices)) {}

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw InvalidArgument("pattern must not be empty");
  std::vector<Variable> choices;
  choices.reserve(text.size());
  for (char ch : text) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'Q':
        choices.push_back(Variable::kQuantity);
        break;
      case 'P':
        choices.push_back(Variable::kPrice);
        break;
      default:
        throw InvalidArgument("pattern '" + std::string(text) + "' may only contain Q or P");
    }
  }
  return Pattern(std::move(choices));
}

Pattern Pattern::uniform(int n, Variable v) {
  return Pattern(std::vector<Variable>(static_cast<std::size_t>(n), v));
}

Pattern Pattern::with_alien(int n, Variable majority, Variable alien) {
  std::vector<Variable> choices(static_cast<std::size_t>(n), majority);
  choices.back() = alien;
  return Pattern(std::move(choices));
}

std::vector<Pattern> Pattern::all(int n) {
  std::vector<Pattern> out;
  const unsigned count = 1u << n;
  out.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<Variable> choices(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const bool q = (mask >> (n - 1 - i)) & 1u;
      choices[static_cast<std::size_t>(i)] = q ? Variable::kQuantity : Variable::kPrice;
    }
    out.emplace_back(std::move(choices));
  }
  return out;
}

std::string Pattern::str() const {
  std::string s;
  s.reserve(choices_.size());
  for (Variable v : choices_) s.push_back(to_char(v));
  return s;
}

double StrategyDomain::clamp(double v) const { return std::clamp(v, lower, upper); }

StrategyDomain strategy_domain(const MarketParams& params, Variable) {
  return StrategyDomain{0.0, params.a};
}

Vector DemandSystem::prices(const Vector& quantities) const {
  return intercept - quantity_to_price * quantities;
}

Vector DemandSystem::quantities(const Vector& prices) const {
  return price_to_quantity * (intercept - prices);
}

DemandSystem build_demand_system(const MarketParams& params) {
  const int n = params.n;
  if (n < 1) throw InvalidArgument("n must be positive");
  if (!std::isfinite(params.a) || !std::isfinite(params.b)) {
    throw InvalidArgument("a and b must be finite");
  }
  DemandSystem system;
  system.n = n;
  system.intercept = Vector::Constant(n, params.a);
  system.quantity_to_price = Matrix::Constant(n, n, params.b);
  system.quantity_to_price.diagonal().setOnes();
  system.price_to_quantity = invert_checked(system.quantity_to_price, "demand system");
  return system;
}

// Demand equations p + M x = a 1. With u the induced variables (p_i for Q
// firms, x_i for P firms) and v the chosen ones, they read A u = a 1 - B v.
PatternMap build_pattern_map(const DemandSystem& system, const Pattern& pattern) {
  const int n = system.n;
  if (pattern.size() != n) {
    throw InvalidArgument("pattern " + pattern.str() + " has length " +
                          std::to_string(pattern.size()) + " but n = " + std::to_string(n));
  }
  const Matrix& M = system.quantity_to_price;
  Matrix A = Matrix::Zero(n, n);
  Matrix B = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    if (pattern[static_cast<std::size_t>(j)] == Variable::kQuantity) {
      A(j, j) = 1.0;
      B.col(j) = M.col(j);
    } else {
      A.col(j) = M.col(j);
      B(j, j) = 1.0;
    }
  }
  const Matrix A_inv = invert_checked(A, "pattern elimination");
  const Vector u0 = A_inv * system.intercept;
  const Matrix du = -A_inv * B;

  PatternMap map{pattern, Vector::Zero(n), Vector::Zero(n), Matrix::Zero(n, n),
                 Matrix::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    if (pattern[static_cast<std::size_t>(i)] == Variable::kQuantity) {
      map.dx(i, i) = 1.0;
      map.p0(i) = u0(i);
      map.dp.row(i) = du.row(i);
    } else {
      map.dp(i, i) = 1.0;
      map.x0(i) = u0(i);
      map.dx.row(i) = du.row(i);
    }
  }
  return map;
}

OutcomeProfile resolve_outcome(const MarketParams& params, const PatternMap& map,
                               const Vector& strategy) {
  if (strategy.size() != map.pattern.size()) {
    throw InvalidArgument("strategy has " + std::to_string(strategy.size()) +
                          " entries but pattern " + map.pattern.str() + " needs " +
                          std::to_string(map.pattern.size()));
  }
  OutcomeProfile outcome;
  outcome.quantities = map.quantities(strategy);
  outcome.prices = map.prices(strategy);
  // Chosen coordinates are copied exactly rather than through the affine map.
  for (int i = 0; i < strategy.size(); ++i) {
    if (map.pattern[static_cast<std::size_t>(i)] == Variable::kQuantity) {
      outcome.quantities(i) = strategy(i);
    } else {
      outcome.prices(i) = strategy(i);
    }
  }
  PayoffVector pay = payoffs(outcome.quantities, outcome.prices, params);
  outcome.absolute_profits = std::move(pay.absolute);
  outcome.relative_profits = std::move(pay.relative);
  return outcome;
}

OutcomeProfile resolve_outcome(const MarketParams& params, const DemandSystem& system,
                               const Pattern& pattern, std::span<const double> strategy) {
  const PatternMap map = build_pattern_map(system, pattern);
  Vector v(static_cast<Eigen::Index>(strategy.size()));
  for (std::size_t i = 0; i < strategy.size(); ++i) v(static_cast<Eigen::Index>(i)) = strategy[i];
  return resolve_outcome(params, map, v);
}

Vector encode_strategy(const Pattern& pattern, const OutcomeProfile& outcome) {
  const int n = pattern.size();
  if (outcome.quantities.size() != n) {
    throw InvalidArgument("outcome size does not match pattern " + pattern.str());
  }
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = pattern[static_cast<std::size_t>(i)] == Variable::kQuantity ? outcome.quantities(i)
                                                                      : outcome.prices(i);
  }
  return v;
}

double demand_residual(const DemandSystem& system, const OutcomeProfile& outcome) {
  return (system.prices(outcome.quantities) - outcome.prices).cwiseAbs().maxCoeff();
}

}  // namespace relprofit
