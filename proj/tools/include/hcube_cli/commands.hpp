#pragma once

#include <iosfwd>
#include <string>

#include "hcube/error.hpp"
#include "hcube_cli/serialize.hpp"

namespace hcube::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitBudgetFailure = 3,
  kExitInternalDefect = 4,
};

int exit_code_for(ErrorCode code);

/// Reads a point spec from a file path, or parses it inline when the argument
/// starts with '{'.
PointRep load_point(const std::string& arg);
std::string read_text_file(const std::string& path);

json run_solve(const PointRep& p, const PointRep& q, const Rational& tau, int horizon);
json run_eval(const HomeoPlan& plan, const PointRep& x, const Rational& tau);
json run_inverse_eval(const HomeoPlan& plan, const PointRep& y, const Rational& tau);
json run_verify(const HomeoPlan& plan, const PointRep& p, const PointRep& q, const Rational& tau);
json run_demo_first_attempt(const Rational& t, int n);
json run_diagnose(FormulaVariant variant, int n, int m, const Rational& grid_step);
json run_metrics(const PointRep& p, const PointRep& q);
json run_schedule(const PointRep& p, int count);

/// Full command-line entry point; writes results to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcube::cli
