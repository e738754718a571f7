#include "hcube_cli/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hcube_cli/render.hpp"

namespace hcube::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::OutOfRange:
    case ErrorCode::AnchorOnBoundary:
    case ErrorCode::BadIndices:
    case ErrorCode::IOError:
    case ErrorCode::EmptySampleSet:
    case ErrorCode::DegeneratePair:
      return kExitInputError;
    case ErrorCode::HorizonExceeded:
      return kExitBudgetFailure;
    case ErrorCode::Unclassifiable:
    case ErrorCode::RangeViolation:
    case ErrorCode::NoPreimage:
    case ErrorCode::MultiplePreimages:
      return kExitInternalDefect;
  }
  return kExitInternalDefect;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PointRep load_point(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_point_spec(arg);
  return parse_point_spec(read_text_file(arg));
}

namespace {

HomeoPlan load_plan(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const std::string text = (first != std::string::npos && arg[first] == '{') ? arg : read_text_file(arg);
  return plan_from_json(parse_json(text, "plan"));
}

int stages_used(const HomeoPlan& plan) {
  int total = 0;
  if (plan.fwd_schedule) total += plan.fwd_schedule->size();
  if (plan.bwd_schedule) total += plan.bwd_schedule->size();
  return total;
}

}  // namespace

json run_solve(const PointRep& p, const PointRep& q, const Rational& tau, int horizon) {
  const HomeoPlan plan = solve(p, q, tau, horizon);
  const Rational distance = certified_distance(plan, p, q, tau);
  json summary = json::object();
  summary["case"] = std::string(to_string(plan.kind));
  summary["anchor_limit"] = plan.anchor_limit;
  summary["forward_stages"] = plan.fwd_schedule ? plan.fwd_schedule->size() : 0;
  summary["reverse_stages"] = plan.bwd_schedule ? plan.bwd_schedule->size() : 0;
  summary["stages_used"] = stages_used(plan);
  summary["tau"] = to_string(tau);
  summary["certified_distance"] = to_string(distance);
  summary["verified"] = distance < tau;
  json out = json::object();
  out["plan"] = plan_to_json(plan);
  out["summary"] = summary;
  return out;
}

json run_eval(const HomeoPlan& plan, const PointRep& x, const Rational& tau) {
  return certified_to_json(plan_eval(plan, x, tau));
}

json run_inverse_eval(const HomeoPlan& plan, const PointRep& y, const Rational& tau) {
  return certified_to_json(plan_inverse_eval(plan, y, tau));
}

json run_verify(const HomeoPlan& plan, const PointRep& p, const PointRep& q, const Rational& tau) {
  const Rational distance = certified_distance(plan, p, q, tau);
  json out = json::object();
  out["case"] = std::string(to_string(plan.kind));
  out["tau"] = to_string(tau);
  out["certified_distance"] = to_string(distance);
  out["verified"] = distance < tau;
  return out;
}

json run_demo_first_attempt(const Rational& t, int n) {
  if (t < -1 || t > 1) throw Error(ErrorCode::OutOfRange, "t must lie in [-1, 1]");
  if (n < 0) throw Error(ErrorCode::OutOfRange, "n must be non-negative");
  const PointRep one = PointRep::constant(1);
  const PointRep other = PointRep::constant(t);
  json rows = json::array();
  for (int k = 0; k <= n; ++k) {
    const PointRep a = first_attempt_partial(one, k);
    const PointRep b = first_attempt_partial(other, k);
    json row = json::object();
    row["stage"] = k;
    row["image_of_one"] = point_to_json(a);
    row["image_of_t"] = point_to_json(b);
    row["distance"] = to_string(metric_d(a, b));
    rows.push_back(row);
  }
  json out = json::object();
  out["t"] = to_string(t);
  out["n"] = n;
  out["rows"] = rows;
  return out;
}

json run_diagnose(FormulaVariant variant, int n, int m, const Rational& grid_step) {
  return report_to_json(twist_diagnostics(variant, n, m, grid_step));
}

json run_metrics(const PointRep& p, const PointRep& q) {
  json out = json::object();
  out["d"] = to_string(metric_d(p, q));
  out["p_profile"] = profile_to_json(classify_point(p));
  out["q_profile"] = profile_to_json(classify_point(q));
  out["case"] = std::string(to_string(select_case(p, q)));
  return out;
}

json run_schedule(const PointRep& p, int count) {
  if (count < 0) throw Error(ErrorCode::OutOfRange, "count must be non-negative");
  const Schedule s = build_schedule(p, count);
  json out = json::object();
  out["schedule"] = schedule_to_json(s);
  out["budget_ok"] = schedule_budget_ok(s);
  out["forward_tail_bound"] = to_string(forward_tail_bound(s, s.size()));
  out["reverse_tail_bound"] = to_string(reverse_tail_bound(s, s.size()));
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hilbert cube homeomorphisms", "hcube"};
  app.require_subcommand(1);

  std::string p_arg, q_arg, x_arg, plan_arg, tau_arg, t_arg, grid_arg, out_arg, trace_arg;
  std::string variant_arg = "corrected";
  std::string kind_arg;
  int horizon = 64, n = 0, m = 0, count = 0, stages = 0, grid = 16;

  const std::map<std::string, FormulaVariant> variants{{"verbatim", FormulaVariant::Verbatim},
                                                       {"corrected", FormulaVariant::Corrected}};
  const std::map<std::string, TwistKind> kinds{{"first-attempt", TwistKind::FirstAttempt},
                                               {"phi", TwistKind::PhiSingle},
                                               {"psi", TwistKind::PsiSingle},
                                               {"phi3", TwistKind::PhiCubed},
                                               {"psi3", TwistKind::PsiCubed}};
  auto variant_check = CLI::IsMember({"verbatim", "corrected"});
  auto kind_check = CLI::IsMember({"first-attempt", "phi", "psi", "phi3", "psi3"});

  auto* solve_cmd = app.add_subcommand("solve", "Build and verify a homeomorphism plan carrying p to q");
  solve_cmd->add_option("--p", p_arg, "Source point spec (file or inline JSON)")->required();
  solve_cmd->add_option("--q", q_arg, "Target point spec (file or inline JSON)")->required();
  solve_cmd->add_option("--tau", tau_arg, "Tolerance as an exact rational")->required();
  solve_cmd->add_option("--horizon", horizon, "Maximum stages per schedule")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", out_arg, "Write the result here instead of stdout");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate H(x) with a certified radius");
  eval_cmd->add_option("--plan", plan_arg)->required();
  eval_cmd->add_option("--x", x_arg)->required();
  eval_cmd->add_option("--tau", tau_arg)->required();

  auto* inv_cmd = app.add_subcommand("inverse-eval", "Evaluate H^-1(y) with a certified radius");
  inv_cmd->add_option("--plan", plan_arg)->required();
  inv_cmd->add_option("--y,--x", x_arg)->required();
  inv_cmd->add_option("--tau", tau_arg)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a plan's certified distance d(H(p), q) < tau");
  verify_cmd->add_option("--plan", plan_arg)->required();
  verify_cmd->add_option("--p", p_arg)->required();
  verify_cmd->add_option("--q", q_arg)->required();
  verify_cmd->add_option("--tau", tau_arg)->required();

  auto* demo_cmd = app.add_subcommand("demo-first-attempt", "Show the first-attempt twist collapsing two points");
  demo_cmd->add_option("--t", t_arg)->required();
  demo_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

  auto* diag_cmd = app.add_subcommand("diagnose", "Grid check of the phi/psi formulas");
  diag_cmd->add_option("--variant", variant_arg)->check(variant_check);
  diag_cmd->add_option("--n", n)->required();
  diag_cmd->add_option("--m", m)->required();
  diag_cmd->add_option("--grid", grid_arg, "Grid step 1/2^k")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "Distance and boundary profiles of two points");
  metrics_cmd->add_option("--p", p_arg)->required();
  metrics_cmd->add_option("--q", q_arg)->required();

  auto* render_cmd = app.add_subcommand("render", "Render a two-cell map as SVG");
  render_cmd->add_option("--map", kind_arg)->required()->check(kind_check);
  render_cmd->add_option("--variant", variant_arg)->check(variant_check);
  render_cmd->add_option("--n", n)->required();
  render_cmd->add_option("--m", m)->required();
  render_cmd->add_option("--grid", grid, "Grid density (power of two >= 8)");
  auto* trace_opt = render_cmd->add_option("--trace", trace_arg, "Point spec whose trajectory is overlaid");
  render_cmd->add_option("--stages", stages, "Trajectory length")->needs(trace_opt)->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--out", out_arg)->required();

  auto* schedule_cmd = app.add_subcommand("schedule", "Stage schedule pushing p into the pseudo-interior");
  schedule_cmd->add_option("--p", p_arg)->required();
  schedule_cmd->add_option("--count", count)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int rc = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return rc == 0 ? kExitOk : kExitInputError;
  }

  auto emit = [&](const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (out_arg.empty()) {
      out << text;
      return;
    }
    std::ofstream file(out_arg, std::ios::binary);
    if (!file || !(file << text)) throw Error(ErrorCode::IOError, "cannot write " + out_arg);
  };

  try {
    if (*solve_cmd) {
      const json result = run_solve(load_point(p_arg), load_point(q_arg), parse_rational(tau_arg), horizon);
      emit(result);
      return result["summary"]["verified"].get<bool>() ? kExitOk : kExitBudgetFailure;
    }
    if (*eval_cmd) {
      emit(run_eval(load_plan(plan_arg), load_point(x_arg), parse_rational(tau_arg)));
    } else if (*inv_cmd) {
      emit(run_inverse_eval(load_plan(plan_arg), load_point(x_arg), parse_rational(tau_arg)));
    } else if (*verify_cmd) {
      const json result =
          run_verify(load_plan(plan_arg), load_point(p_arg), load_point(q_arg), parse_rational(tau_arg));
      emit(result);
      return result["verified"].get<bool>() ? kExitOk : kExitBudgetFailure;
    } else if (*demo_cmd) {
      emit(run_demo_first_attempt(parse_rational(t_arg), n));
    } else if (*diag_cmd) {
      emit(run_diagnose(variants.at(variant_arg), n, m, parse_rational(grid_arg)));
    } else if (*metrics_cmd) {
      emit(run_metrics(load_point(p_arg), load_point(q_arg)));
    } else if (*render_cmd) {
      RenderSpec spec;
      spec.map = CellMap::make(kinds.at(kind_arg), variants.at(variant_arg), n, m);
      spec.grid = grid;
      if (!trace_arg.empty()) {
        spec.trace = load_point(trace_arg);
        spec.trace_stages = stages;
      }
      const std::string svg = render_svg(spec);
      std::ofstream file(out_arg, std::ios::binary);
      if (!file || !(file << svg)) throw Error(ErrorCode::IOError, "cannot write " + out_arg);
    } else if (*schedule_cmd) {
      emit(run_schedule(load_point(p_arg), count));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInternalDefect;
  }
  return kExitOk;
}

}  // namespace hcube::cli
