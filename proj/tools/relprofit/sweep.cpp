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

#include "relprofit/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "relprofit/equilibrium.hpp"
#include "relprofit/error.hpp"
#include "relprofit/format.hpp"

namespace relprofit::cli {
namespace {

double parse_number(std::string_view text, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw InvalidArgument(std::string("sweep ") + what + " '" + std::string(text) +
                          "' is not a number");
  }
  return v;
}

using GridPoint = std::vector<EquilibriumReport>;

// Solves every pattern at every grid point. Points run concurrently; the
// result is indexed by grid position.
std::vector<GridPoint> solve_grid(const MarketParams& base, const SweepSpec& spec,
                                  const std::vector<Pattern>& patterns) {
  const std::vector<double> values = spec.values();
  std::vector<MarketParams> params;
  params.reserve(values.size());
  for (double v : values) params.push_back(apply_sweep(base, spec, v));

  const auto solve_point = [&patterns](const MarketParams& p) {
    const DemandSystem system = build_demand_system(p);
    GridPoint point;
    for (const Pattern& pattern : patterns) point.push_back(solve_foc(p, system, pattern));
    return point;
  };
  const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
  std::vector<GridPoint> out;
  out.reserve(params.size());
  for (std::size_t first = 0; first < params.size(); first += batch) {
    const std::size_t last = std::min(params.size(), first + batch);
    std::vector<std::future<GridPoint>> jobs;
    for (std::size_t k = first; k < last; ++k) {
      jobs.push_back(std::async(std::launch::async, solve_point, std::cref(params[k])));
    }
    for (auto& job : jobs) out.push_back(job.get());
  }
  return out;
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  const double span = (hi - lo) / step;
  const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  out.reserve(static_cast<std::size_t>(count));
  // Snapped to 12 decimals so 0.1 + 2 * 0.1 prints as 0.3.
  for (long k = 0; k < count; ++k) {
    out.push_back(std::round((lo + static_cast<double>(k) * step) * 1e12) / 1e12);
  }
  return out;
}

SweepSpec parse_sweep(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw InvalidArgument("sweep must have the form name:lo:hi:step (got '" + std::string(text) +
                          "')");
  }
  SweepSpec spec;
  spec.name = std::string(parts[0]);
  if (spec.name == "a") {
    spec.param = SweepParam::kA;
  } else if (spec.name == "b") {
    spec.param = SweepParam::kB;
  } else if (spec.name == "delta") {
    spec.param = SweepParam::kDelta;
  } else if (spec.name == "c_alien") {
    spec.param = SweepParam::kAlienCost;
  } else {
    throw InvalidArgument("unknown sweep parameter '" + spec.name +
                          "' (expected a, b, delta or c_alien)");
  }
  spec.lo = parse_number(parts[1], "lower bound");
  spec.hi = parse_number(parts[2], "upper bound");
  spec.step = parse_number(parts[3], "step");
  if (!(spec.step > 0.0)) throw InvalidArgument("sweep step must be positive");
  if (!(spec.lo < spec.hi)) throw InvalidArgument("sweep lower bound must be below upper bound");
  return spec;
}

MarketParams apply_sweep(const MarketParams& base, const SweepSpec& spec, double value) {
  MarketParams p = base;
  switch (spec.param) {
    case SweepParam::kA:
      p.a = value;
      break;
    case SweepParam::kB:
      p.b = value;
      break;
    case SweepParam::kDelta:
      p.costs.back() = p.costs.front() + value;
      break;
    case SweepParam::kAlienCost:
      p.costs.back() = value;
      break;
  }
  try {
    validate(p);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("sweep point " + spec.name + " = " + fmt9(value) + ": " + e.what());
  }
  return p;
}

std::string sweep_grid_csv(const MarketParams& base, const SweepSpec& spec,
                           const std::vector<Pattern>& patterns) {
  const std::vector<double> values = spec.values();
  const std::vector<GridPoint> grid = solve_grid(base, spec, patterns);

  std::ostringstream out;
  out << spec.name;
  for (const Pattern& pat : patterns) {
    for (int i = 0; i < base.n; ++i) out << ",x_" << pat.str() << '_' << (i + 1);
  }
  for (std::size_t l = 0; l < patterns.size(); ++l) {
    for (std::size_t r = l + 1; r < patterns.size(); ++r) {
      out << ",dev_" << patterns[l].str() << '_' << patterns[r].str();
    }
  }
  out << '\n';

  for (std::size_t k = 0; k < values.size(); ++k) {
    const GridPoint& point = grid[k];
    out << fmt_exact(values[k]);
    for (const EquilibriumReport& rep : point) {
      for (int i = 0; i < base.n; ++i) out << ',' << fmt_exact(rep.outcome.quantities(i));
    }
    for (std::size_t l = 0; l < point.size(); ++l) {
      for (std::size_t r = l + 1; r < point.size(); ++r) {
        out << ',' << fmt_exact(compare_equilibria(point[l], point[r]).max_deviation);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string sweep_per_player_csv(const MarketParams& base, const SweepSpec& spec,
                                 const std::vector<Pattern>& patterns) {
  const std::vector<double> values = spec.values();
  const std::vector<GridPoint> grid = solve_grid(base, spec, patterns);

  std::ostringstream out;
  out << "param,pattern,player,x,p,pi,phi\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (const EquilibriumReport& rep : grid[k]) {
      for (int i = 0; i < base.n; ++i) {
        out << fmt_exact(values[k]) << ',' << rep.pattern.str() << ',' << (i + 1) << ','
            << fmt_exact(rep.outcome.quantities(i)) << ',' << fmt_exact(rep.outcome.prices(i))
            << ',' << fmt_exact(rep.outcome.absolute_profits(i)) << ','
            << fmt_exact(rep.outcome.relative_profits(i)) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace relprofit::cli
