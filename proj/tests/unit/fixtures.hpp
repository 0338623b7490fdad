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

#ifndef RELPROFIT_TESTS_UNIT_FIXTURES_HPP_
#define RELPROFIT_TESTS_UNIT_FIXTURES_HPP_

#include <random>
#include <string>
#include <vector>

#include "relprofit/market.hpp"

namespace relprofit::testing {

// a = 2, b = 0.5, c = (1, 1, 1, 1.2): the four-firm one-alien market.
inline MarketParams standard() { return make_params(2.0, 0.5, {1.0, 1.0, 1.0, 1.2}); }

inline MarketParams symmetric() { return make_params(2.0, 0.5, {1.0, 1.0, 1.0, 1.0}); }

inline MarketParams two_alien() { return make_params(2.0, 0.5, {1.0, 1.0, 1.2, 1.2}); }

inline MarketParams one_alien(int n, double a, double b, double c, double c_alien) {
  std::vector<double> costs(static_cast<std::size_t>(n), c);
  costs.back() = c_alien;
  return make_params(a, b, std::move(costs));
}

inline std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

inline Vector to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline Pattern random_pattern(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Variable> choices;
  for (int i = 0; i < n; ++i) choices.push_back(coin(rng) ? Variable::kQuantity : Variable::kPrice);
  return Pattern(std::move(choices));
}

// Random market with n in [3, 8], b in [0.05, 0.95], costs in [0, 0.6 a).
inline MarketParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nd(3, 8);
  std::uniform_real_distribution<double> ad(0.5, 5.0), bd(0.05, 0.95), cd(0.0, 0.6);
  const int n = nd(rng);
  const double a = ad(rng);
  std::vector<double> costs;
  for (int i = 0; i < n; ++i) costs.push_back(a * cd(rng));
  return make_params(a, bd(rng), std::move(costs));
}

inline Vector random_strategy(const MarketParams& params, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, params.a);
  Vector v(params.n);
  for (int i = 0; i < params.n; ++i) v(i) = u(rng);
  return v;
}

}  // namespace relprofit::testing

#endif  // RELPROFIT_TESTS_UNIT_FIXTURES_HPP_
