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

#include "relprofit/commands.hpp"

#include <ios>
#include <random>
#include <sstream>

#include "relprofit/closed_form.hpp"
#include "relprofit/equilibrium.hpp"
#include "relprofit/error.hpp"
#include "relprofit/format.hpp"
#include "relprofit/minimax.hpp"
#include "relprofit/params_json.hpp"
#include "relprofit/sweep.hpp"

namespace relprofit::cli {
namespace {

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const CostStructureMismatch& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ParamMismatch& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverError;
  }
}

Pattern checked_pattern(const std::string& text, const MarketParams& params) {
  Pattern p = Pattern::parse(text);
  if (p.size() != params.n) {
    throw InvalidArgument("pattern " + p.str() + " has length " + std::to_string(p.size()) +
                          " but n = " + std::to_string(params.n) + " (length mismatch)");
  }
  return p;
}

std::string variable_label(Variable v, int player) {
  return std::string(v == Variable::kQuantity ? "x" : "p") + "_" + std::to_string(player + 1);
}

std::string outcome_table(const EquilibriumReport& rep) {
  Table table({"player", "variable", "strategy", "x", "p", "pi", "phi"});
  for (int i = 0; i < rep.params.n; ++i) {
    table.add({std::to_string(i + 1), std::string(1, to_char(rep.pattern[static_cast<std::size_t>(i)])),
               fmt9(rep.strategy(i)), fmt9(rep.outcome.quantities(i)), fmt9(rep.outcome.prices(i)),
               fmt9(rep.outcome.absolute_profits(i)), fmt9(rep.outcome.relative_profits(i))});
  }
  return table.str();
}

int report_boundary(const EquilibriumReport& rep, std::ostream& err) {
  if (!rep.boundary()) return kOk;
  err << "solver error: equilibrium candidate for pattern " << rep.pattern.str()
      << " is not interior (firms";
  for (int i : rep.boundary_players) err << ' ' << (i + 1);
  err << ")\n";
  return kSolverError;
}

}  // namespace

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const MarketParams params = load_params(config.params_path);
    if (config.patterns.size() != 1) throw InvalidArgument("solve takes exactly one --pattern");
    const Pattern pattern = checked_pattern(config.patterns.front(), params);
    const DemandSystem system = build_demand_system(params);

    EquilibriumReport rep;
    if (config.method == "foc") {
      rep = solve_foc(params, system, pattern);
    } else if (config.method == "br") {
      BestResponseOptions opts;
      opts.damping = config.damping;
      if (config.tol) opts.tol = *config.tol;
      rep = solve_best_response(params, system, pattern, opts);
    } else {
      throw InvalidArgument("unknown method '" + config.method + "' (expected foc or br)");
    }

    out << "pattern " << rep.pattern.str() << "  method " << to_string(rep.method)
        << "  iterations " << rep.iterations << "  residual " << fmt9(rep.residual) << '\n';
    out << outcome_table(rep);

    if (config.csv_path) {
      std::ostringstream csv;
      csv << "pattern,player,variable,strategy,x,p,pi,phi\n";
      for (int i = 0; i < params.n; ++i) {
        csv << rep.pattern.str() << ',' << (i + 1) << ','
            << to_char(rep.pattern[static_cast<std::size_t>(i)]) << ',' << fmt_exact(rep.strategy(i))
            << ',' << fmt_exact(rep.outcome.quantities(i)) << ','
            << fmt_exact(rep.outcome.prices(i)) << ',' << fmt_exact(rep.outcome.absolute_profits(i))
            << ',' << fmt_exact(rep.outcome.relative_profits(i)) << '\n';
      }
      write_file(*config.csv_path, csv.str());
    }
    return report_boundary(rep, err);
  });
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const MarketParams params = load_params(config.params_path);
    if (config.patterns.size() != 2) throw InvalidArgument("compare takes exactly two patterns");
    const Pattern lhs = checked_pattern(config.patterns[0], params);
    const Pattern rhs = checked_pattern(config.patterns[1], params);
    const double tol = config.tol.value_or(kDefaultEquivalenceTol);
    if (!(tol > 0.0)) throw InvalidArgument("--tol must be positive");
    const DemandSystem system = build_demand_system(params);
    const EquilibriumReport l = solve_foc(params, system, lhs);
    const EquilibriumReport r = solve_foc(params, system, rhs);
    if (const int code = report_boundary(l, err); code != kOk) return code;
    if (const int code = report_boundary(r, err); code != kOk) return code;

    const EquivalenceVerdict verdict = compare_equilibria(l, r, tol);
    out << "pattern " << l.pattern.str() << '\n' << outcome_table(l);
    out << "pattern " << r.pattern.str() << '\n' << outcome_table(r);
    out << l.pattern.str() << " vs " << r.pattern.str() << ": "
        << (verdict.equivalent ? "Equivalent" : "NotEquivalent") << " (max deviation "
        << fmt9(verdict.max_deviation) << " at " << variable_label(verdict.component, verdict.player)
        << ", tol " << fmt9(tol) << ")\n";
    return verdict.equivalent ? kOk : kNotEquivalent;
  });
}

int cmd_verify_minimax(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const MarketParams params = load_params(config.params_path);
    MinimaxTolerances tol;
    if (config.tol) tol.assertion = *config.tol;
    if (!(tol.assertion > 0.0)) throw InvalidArgument("--tol must be positive");
    if (config.samples < 0) throw InvalidArgument("--samples must be non-negative");
    const DemandSystem system = build_demand_system(params);
    const EquilibriumReport eq =
        solve_foc(params, system, Pattern::uniform(params.n, Variable::kQuantity));
    if (const int code = report_boundary(eq, err); code != kOk) return code;

    std::mt19937_64 rng(config.seed);
    Table table({"player", "point", "min_tn_max_ti", "min_sn_max_ti", "max_ti_min_sn",
                 "max_ti_min_tn", "spread", "status"});
    std::vector<std::string> notes;
    bool all_hold = true;
    for (int i = 0; i + 1 < params.n; ++i) {
      const std::vector<double> center = frozen_from(eq, i);
      for (int k = 0; k <= config.samples; ++k) {
        const std::vector<double> frozen = k == 0 ? center : sample_frozen(params, center, rng);
        const std::string point = k == 0 ? "equilibrium" : "random-" + std::to_string(k);
        const MinimaxReport rep = lemma2_check(params, system, i, frozen, tol);
        const bool ok = rep.holds(tol.assertion);
        all_hold = all_hold && ok;
        table.add({std::to_string(i + 1), point, fmt9(rep.v_min_tn_max_ti),
                   fmt9(rep.v_min_sn_max_ti), fmt9(rep.v_max_ti_min_sn),
                   fmt9(rep.v_max_ti_min_tn), fmt9(rep.max_spread),
                   ok ? "ok" : (rep.weak_duality ? "SPREAD" : "DUALITY")});
        const std::string where = "player " + std::to_string(i + 1) + " " + point + ": ";
        for (const auto& s : rep.shape_violations) notes.push_back(where + "ShapeViolation " + s);
        for (const auto& s : rep.boundary_args) notes.push_back(where + "boundary " + s);
      }
    }
    out << "alien firm " << params.n << ", assertion tol " << fmt9(tol.assertion) << ", seed "
        << config.seed << '\n';
    out << table.str();
    for (const auto& note : notes) out << note << '\n';
    return all_hold ? kOk : kNotEquivalent;
  });
}

int cmd_closed_form(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const MarketParams params = load_params(config.params_path);
    if (params.n != 4) throw InvalidArgument("closed-form requires n = 4");
    const double tol = config.tol.value_or(kAuditTol);
    const auto& c = params.costs;
    std::vector<CaseLabel> labels;
    if (params.one_alien()) {
      labels = {CaseLabel::kOneAlienP1, CaseLabel::kOneAlienP2, CaseLabel::kOneAlienP3,
                CaseLabel::kOneAlienP4};
    } else if (c[1] == c[0] && c[3] == c[2]) {
      labels = {CaseLabel::kTwoAlienP1, CaseLabel::kTwoAlienP2};
    } else {
      throw CostStructureMismatch("costs match neither c_A = c_B = c_C nor c_A = c_B, c_C = c_D");
    }
    const DemandSystem system = build_demand_system(params);

    Table table({"case", "pattern", "player", "printed", "solved", "delta", "status", "erratum"});
    std::ostringstream csv;
    csv << "case,pattern,player,printed,solved,delta,status,erratum\n";
    bool consistent = true;
    for (CaseLabel label : labels) {
      const ClosedFormCase& fixture = closed_form_case(label);
      const EquilibriumReport rep = solve_foc(params, system, fixture.pattern);
      const AuditVerdict verdict = audit_case(fixture, params, rep, tol);
      consistent = consistent && verdict.consistent;
      for (const AuditEntry& e : verdict.entries) {
        const char* status = e.status == AuditStatus::kMatch ? "Match" : "Mismatch";
        const char* flag = e.erratum_flagged ? "flagged" : "-";
        table.add({to_string(label), fixture.pattern.str(), std::to_string(e.player + 1),
                   fmt9(e.printed), fmt9(e.solved), fmt9(e.delta), status, flag});
        csv << to_string(label) << ',' << fixture.pattern.str() << ',' << (e.player + 1) << ','
            << fmt_exact(e.printed) << ',' << fmt_exact(e.solved) << ',' << fmt_exact(e.delta)
            << ',' << status << ',' << (e.erratum_flagged ? 1 : 0) << '\n';
      }
    }
    out << table.str();
    out << (consistent ? "audit consistent: every mismatch is a flagged erratum\n"
                       : "audit INCONSISTENT: unflagged mismatch or flagged match\n");
    if (config.csv_path) write_file(*config.csv_path, csv.str());
    return consistent ? kOk : kNotEquivalent;
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const MarketParams params = load_params(config.params_path);
    if (config.sweep.empty()) throw InvalidArgument("sweep requires --sweep name:lo:hi:step");
    const SweepSpec spec = parse_sweep(config.sweep);

    std::vector<Pattern> patterns;
    if (config.patterns.empty()) {
      const int n = params.n;
      patterns = {Pattern::uniform(n, Variable::kQuantity),
                  Pattern::with_alien(n, Variable::kQuantity, Variable::kPrice),
                  Pattern::uniform(n, Variable::kPrice),
                  Pattern::with_alien(n, Variable::kPrice, Variable::kQuantity)};
    } else {
      for (const auto& text : config.patterns) patterns.push_back(checked_pattern(text, params));
    }

    const std::string csv = config.per_player ? sweep_per_player_csv(params, spec, patterns)
                                              : sweep_grid_csv(params, spec, patterns);
    if (config.csv_path) {
      write_file(*config.csv_path, csv);
      out << "wrote " << spec.values().size() << " grid points to " << config.csv_path->string()
          << '\n';
    } else {
      out << csv;
    }
    return kOk;
  });
}

}  // namespace relprofit::cli
