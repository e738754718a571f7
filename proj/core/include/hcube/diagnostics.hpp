#pragma once

#include <string>
#include <vector>

#include "hcube/twist.hpp"

namespace hcube {

/// One failed property check at an exact grid witness.
struct Finding {
  std::string check;  // range-containment, piece-agreement, inverse-roundtrip, ...
  std::string map;    // CellMap::describe() of the map under test
  CellPoint witness;
  std::string expected;
  std::string observed;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ErrataReport {
  FormulaVariant variant = FormulaVariant::Corrected;
  int n = 1;
  int m = 2;
  Rational grid_step;
  std::vector<Finding> findings;  // sorted by witness, then check, then map

  bool clean() const { return findings.empty(); }
};

std::string format_cell_point(const CellPoint& p);

/// Runs every property the phi/psi pair is claimed to have over the grid
/// {k * grid_step : |k * grid_step| <= 1}^2:
///   range-containment, piece-agreement (all matching pieces give the same
///   value), inverse-roundtrip (psi(phi(p)) = p), oracle-bijectivity,
///   center-fixity (y = 0, |x| <= 1 - eps_m/eps_n), displacement-bound for
///   single and cubed maps, and odd-symmetry.
/// grid_step must be 2^-k with k >= 4 (OutOfRange otherwise).
ErrataReport twist_diagnostics(FormulaVariant variant, int n, int m, const Rational& grid_step);

/// Exact grid {k * step} of [-1, 1].
std::vector<Rational> unit_grid(const Rational& step);

}  // namespace hcube
