#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcube/point.hpp"

namespace hcube {

enum class TwistKind { FirstAttempt, PhiSingle, PsiSingle, PhiCubed, PsiCubed };

/// Verbatim evaluates the piecewise formulas with their original signs;
/// Corrected fixes the two sign errors (phi Type III and psi Type I') so that
/// the pieces glue, stay in the square, and invert each other.
enum class FormulaVariant { Verbatim, Corrected };

std::string_view to_string(TwistKind kind);
std::string_view to_string(FormulaVariant variant);

/// A twist of the two-cell I_n x I_m, crossed with the identity on every other
/// coordinate of Q.
struct CellMap {
  TwistKind kind = TwistKind::PhiSingle;
  FormulaVariant variant = FormulaVariant::Corrected;
  int n = 1;
  int m = 2;

  /// Validates m > n >= 1 (BadIndices). FirstAttempt ignores the variant and
  /// is stored as Corrected.
  static CellMap make(TwistKind kind, FormulaVariant variant, int n, int m);
  static CellMap first_attempt(int n, int m) {
    return make(TwistKind::FirstAttempt, FormulaVariant::Corrected, n, m);
  }
  static CellMap phi(int n, int m, FormulaVariant v = FormulaVariant::Corrected) {
    return make(TwistKind::PhiSingle, v, n, m);
  }
  static CellMap psi(int n, int m, FormulaVariant v = FormulaVariant::Corrected) {
    return make(TwistKind::PsiSingle, v, n, m);
  }
  static CellMap phi_cubed(int n, int m, FormulaVariant v = FormulaVariant::Corrected) {
    return make(TwistKind::PhiCubed, v, n, m);
  }
  static CellMap psi_cubed(int n, int m, FormulaVariant v = FormulaVariant::Corrected) {
    return make(TwistKind::PsiCubed, v, n, m);
  }

  bool cubed() const { return kind == TwistKind::PhiCubed || kind == TwistKind::PsiCubed; }
  /// The single twist a cubed map iterates (identity on single kinds).
  CellMap single() const;

  std::string describe() const;

  friend bool operator==(const CellMap&, const CellMap&) = default;
};

/// Piece labels. I..IV for phi, primed for psi, A1..A4 for the first-attempt
/// twist in the order its clauses are printed.
enum class Region { I, II, III, IV, IPrime, IIPrime, IIIPrime, IVPrime, A1, A2, A3, A4 };

std::string_view to_string(Region region);

/// +1 for x >= 0, -1 for x < 0.
int sigma(const Rational& x);

/// First matching piece in printed order. Cubed kinds classify by their
/// single factor. Throws Unclassifiable if nothing matches.
Region classify_region(TwistKind kind, int n, int m, const Rational& x, const Rational& y);

/// Every piece whose conditions hold at (x, y), in printed order.
std::vector<Region> matching_regions(TwistKind kind, int n, int m, const Rational& x, const Rational& y);

bool region_contains(TwistKind kind, int n, int m, Region region, const Rational& x, const Rational& y);

/// Evaluates one piece's formula at (x, y) with sigma = sigma(x), regardless
/// of whether (x, y) is classified into that piece.
CellPoint region_formula(const CellMap& map, Region region, const Rational& x, const Rational& y);

/// The piecewise map on the square, iterated three times for cubed kinds.
/// Throws RangeViolation if an output leaves [-1, 1]^2.
CellPoint twist_eval(const CellMap& map, const Rational& x, const Rational& y);

/// As twist_eval without the range check (used to witness Verbatim defects).
CellPoint twist_eval_unchecked(const CellMap& map, const Rational& x, const Rational& y);

/// Applies the cell map to coordinates n and m of p.
PointRep twist_cell_apply(const CellMap& map, const PointRep& p);

/// The unique (x, y) in the square with twist_eval(map, x, y) == (u, v),
/// found by solving each piece's affine system exactly. Independent of the
/// psi formulas. Throws NoPreimage or MultiplePreimages.
CellPoint piece_inverse_oracle(const CellMap& map, const Rational& u, const Rational& v);

/// Claimed sup displacement rho(map, id): eps_m for single twists, 3 eps_m for
/// cubed ones, 2^(1-n) + 2^(1-m) for the first-attempt twist.
Rational displacement_bound(const CellMap& map);

/// Claimed Lipschitz constant in d: 2 for single phi/psi, 8 for cubed.
/// None for the first-attempt twist, which carries no such claim.
std::optional<Rational> lipschitz_contract(const CellMap& map);

/// max d(map p, map q) / d(p, q) over the pairs.
Rational lipschitz_sample_check(const CellMap& map,
                                std::span<const std::pair<PointRep, PointRep>> pairs);

}  // namespace hcube
