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

#ifndef RELPROFIT_MARKET_HPP_
#define RELPROFIT_MARKET_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relprofit/linalg.hpp"

namespace relprofit {

// Economic primitives of the n-firm differentiated oligopoly with linear
// inverse demand p_i = a - x_i - b * sum_{j != i} x_j and constant marginal
// costs. The last firm (index n - 1) is the designated alien.
struct MarketParams {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
  std::vector<double> costs;

  std::size_t size() const { return static_cast<std::size_t>(n); }
  std::size_t alien() const { return size() - 1; }

  // True when firms 0..n-2 share one marginal cost.
  bool one_alien() const;

  friend bool operator==(const MarketParams&, const MarketParams&) = default;
};

// Throws InvalidArgument naming the first violated invariant:
// n >= 3, costs.size() == n, a > 0, 0 < b < 1, 0 <= c_i < a.
void validate(const MarketParams& params);

// Validated params with n taken from costs.size().
MarketParams make_params(double a, double b, std::vector<double> costs);

enum class Variable { kQuantity, kPrice };

char to_char(Variable v);
const char* to_string(Variable v);

// Which strategic variable each firm commits to. Canonical text form is an
// uppercase string over {Q, P}, e.g. "QQQP".
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Variable> choices);

  // Accepts upper or lower case. Throws InvalidArgument on any other
  // character or on an empty string.
  static Pattern parse(std::string_view text);

  static Pattern uniform(int n, Variable v);

  // All firms but the alien choose `majority`; the alien chooses `alien`.
  static Pattern with_alien(int n, Variable majority, Variable alien);

  // Every pattern over n firms, in lexicographic order of the Q/P string
  // with P < Q (so "PP..P" first, "QQ..Q" last).
  static std::vector<Pattern> all(int n);

  int size() const { return static_cast<int>(choices_.size()); }
  Variable operator[](std::size_t i) const { return choices_[i]; }
  std::span<const Variable> choices() const { return choices_; }
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Variable> choices_;
};

// Compact real interval used for both quantity and price strategies.
struct StrategyDomain {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double v) const { return v >= lower && v <= upper; }
  bool interior(double v) const { return v > lower && v < upper; }
  double clamp(double v) const;
  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

// Both quantities and prices live in [0, a].
StrategyDomain strategy_domain(const MarketParams& params, Variable v);

// The linear quantity <-> price maps. quantity_to_price has unit diagonal
// and b off the diagonal: p = intercept - quantity_to_price * x, and
// x = price_to_quantity * (intercept - p).
struct DemandSystem {
  int n = 0;
  Vector intercept;
  Matrix quantity_to_price;
  Matrix price_to_quantity;

  Vector prices(const Vector& quantities) const;
  Vector quantities(const Vector& prices) const;
};

// Only n, a and b are read, and b is not range-checked: b = 0 yields
// independent goods. Throws SingularSystem when b makes the map singular
// (b = 1 or b = -1/(n-1)), which validated params never do.
DemandSystem build_demand_system(const MarketParams& params);

struct OutcomeProfile {
  Vector quantities;
  Vector prices;
  Vector absolute_profits;
  Vector relative_profits;
};

// Outcome of a fixed pattern as an affine function of the strategy vector:
// x = x0 + dx * v and p = p0 + dp * v. Columns of dx and dp are the
// sensitivities to each firm's chosen variable.
struct PatternMap {
  Pattern pattern;
  Vector x0;
  Vector p0;
  Matrix dx;
  Matrix dp;

  Vector quantities(const Vector& strategy) const { return x0 + dx * strategy; }
  Vector prices(const Vector& strategy) const { return p0 + dp * strategy; }
};

// Eliminates the induced variables of `pattern` from the demand equations.
// Throws InvalidArgument on a size mismatch and SingularSystem when the
// mixed subsystem is singular.
PatternMap build_pattern_map(const DemandSystem& system, const Pattern& pattern);

// strategy[i] is a quantity when pattern[i] is Q and a price when P.
// Domain membership is the caller's responsibility: equilibrium candidates
// outside the domain are resolved as-is so they can be diagnosed.
OutcomeProfile resolve_outcome(const MarketParams& params, const DemandSystem& system,
                               const Pattern& pattern, std::span<const double> strategy);
OutcomeProfile resolve_outcome(const MarketParams& params, const PatternMap& map,
                               const Vector& strategy);

// The strategy vector that reproduces `outcome` under `pattern`.
Vector encode_strategy(const Pattern& pattern, const OutcomeProfile& outcome);

// max_i |p_i - (a - x_i - b * sum_{j != i} x_j)|
double demand_residual(const DemandSystem& system, const OutcomeProfile& outcome);

}  // namespace relprofit

#endif  // RELPROFIT_MARKET_HPP_
