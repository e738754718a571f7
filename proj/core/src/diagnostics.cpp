#include "hcube/diagnostics.hpp"

#include <algorithm>
#include <tuple>

#include "hcube/error.hpp"

namespace hcube {

std::string format_cell_point(const CellPoint& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::vector<Rational> unit_grid(const Rational& step) {
  std::vector<Rational> out;
  for (Rational v(-1); v <= 1; v += step) out.push_back(v);
  return out;
}

namespace {

bool in_square(const CellPoint& p) { return abs(p.x) <= 1 && abs(p.y) <= 1; }

class Collector {
 public:
  explicit Collector(std::vector<Finding>& out) : out_(out) {}

  void add(std::string check, const CellMap& map, const CellPoint& witness, std::string expected,
           std::string observed) {
    out_.push_back(Finding{std::move(check), map.describe(), witness, std::move(expected), std::move(observed)});
  }

 private:
  std::vector<Finding>& out_;
};

void check_map(const CellMap& single, const CellMap& inverse, const CellPoint& w, Collector& log) {
  const Rational& x = w.x;
  const Rational& y = w.y;

  CellPoint image;
  try {
    image = twist_eval_unchecked(single, x, y);
  } catch (const Error& e) {
    log.add("evaluation", single, w, "defined value", e.what());
    return;
  }

  if (!in_square(image)) {
    log.add("range-containment", single, w, "image in [-1,1]^2", format_cell_point(image));
  }

  // piece-agreement: every matching piece must give the same value.
  for (Region r : matching_regions(single.kind, single.n, single.m, x, y)) {
    try {
      const CellPoint alt = region_formula(single, r, x, y);
      if (!(alt == image)) {
        log.add("piece-agreement", single, w, format_cell_point(image),
                std::string(to_string(r)) + " gives " + format_cell_point(alt));
      }
    } catch (const Error& e) {
      log.add("piece-agreement", single, w, format_cell_point(image), e.what());
    }
  }

  const CellPoint neg = twist_eval_unchecked(single, -x, -y);
  if (!(neg == CellPoint{-image.x, -image.y})) {
    log.add("odd-symmetry", single, w, format_cell_point({-image.x, -image.y}), format_cell_point(neg));
  }

  const Rational eps_m = pow2(-single.m);
  const Rational moved = cell_metric(single.n, single.m, w, image);
  if (moved > displacement_bound(single)) {
    log.add("displacement-bound", single, w, "<= " + to_string(displacement_bound(single)), to_string(moved));
  }

  const Rational inner_edge = 1 - pow2(single.n - single.m);
  if (y == 0 && abs(x) <= inner_edge && !(image == w)) {
    log.add("center-fixity", single, w, format_cell_point(w), format_cell_point(image));
  }

  if (!in_square(image)) return;

  try {
    const CellPoint back = twist_eval_unchecked(inverse, image.x, image.y);
    if (!(back == w)) log.add("inverse-roundtrip", inverse, w, format_cell_point(w), format_cell_point(back));
  } catch (const Error& e) {
    log.add("inverse-roundtrip", inverse, w, format_cell_point(w), e.what());
  }

  try {
    const CellPoint pre = piece_inverse_oracle(single, image.x, image.y);
    if (!(pre == w)) log.add("oracle-bijectivity", single, w, format_cell_point(w), format_cell_point(pre));
  } catch (const Error& e) {
    log.add("oracle-bijectivity", single, w, format_cell_point(w), e.what());
  }

  const CellMap cubed = CellMap::make(
      single.kind == TwistKind::PhiSingle ? TwistKind::PhiCubed : TwistKind::PsiCubed, single.variant, single.n,
      single.m);
  try {
    const CellPoint image3 = twist_eval_unchecked(cubed, x, y);
    const Rational moved3 = cell_metric(single.n, single.m, w, image3);
    if (moved3 > 3 * eps_m) {
      log.add("displacement-bound", cubed, w, "<= " + to_string(3 * eps_m), to_string(moved3));
    }
  } catch (const Error& e) {
    log.add("evaluation", cubed, w, "defined value", e.what());
  }
}

}  // namespace

ErrataReport twist_diagnostics(FormulaVariant variant, int n, int m, const Rational& grid_step) {
  long k = 0;
  if (!exact_log2(grid_step, k) || k > -4) {
    throw Error(ErrorCode::OutOfRange, "grid step must be 2^-k with k >= 4, got " + to_string(grid_step));
  }

  ErrataReport report;
  report.variant = variant;
  report.n = n;
  report.m = m;
  report.grid_step = grid_step;

  const CellMap phi = CellMap::phi(n, m, variant);
  const CellMap psi = CellMap::psi(n, m, variant);
  const std::vector<Rational> grid = unit_grid(grid_step);

  Collector log(report.findings);
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      const CellPoint w{x, y};
      check_map(phi, psi, w, log);
      check_map(psi, phi, w, log);
    }
  }

  std::sort(report.findings.begin(), report.findings.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.witness.x, a.witness.y, a.check, a.map, a.observed) <
           std::tie(b.witness.x, b.witness.y, b.check, b.map, b.observed);
  });
  return report;
}

}  // namespace hcube
