#include "hcube/twist.hpp"

#include <array>
#include <string>

#include "hcube/error.hpp"

namespace hcube {

std::string_view to_string(TwistKind kind) {
  switch (kind) {
    case TwistKind::FirstAttempt: return "FirstAttempt";
    case TwistKind::PhiSingle: return "PhiSingle";
    case TwistKind::PsiSingle: return "PsiSingle";
    case TwistKind::PhiCubed: return "PhiCubed";
    case TwistKind::PsiCubed: return "PsiCubed";
  }
  return "?";
}

std::string_view to_string(FormulaVariant variant) {
  return variant == FormulaVariant::Verbatim ? "Verbatim" : "Corrected";
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::IPrime: return "I'";
    case Region::IIPrime: return "II'";
    case Region::IIIPrime: return "III'";
    case Region::IVPrime: return "IV'";
    case Region::A1: return "A1";
    case Region::A2: return "A2";
    case Region::A3: return "A3";
    case Region::A4: return "A4";
  }
  return "?";
}

CellMap CellMap::make(TwistKind kind, FormulaVariant variant, int n, int m) {
  if (n < 1 || m <= n) {
    throw Error(ErrorCode::BadIndices,
                "cell map needs m > n >= 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  if (kind == TwistKind::FirstAttempt) variant = FormulaVariant::Corrected;
  return CellMap{kind, variant, n, m};
}

CellMap CellMap::single() const {
  CellMap out = *this;
  if (kind == TwistKind::PhiCubed) out.kind = TwistKind::PhiSingle;
  if (kind == TwistKind::PsiCubed) out.kind = TwistKind::PsiSingle;
  return out;
}

std::string CellMap::describe() const {
  std::string s(to_string(kind));
  if (kind != TwistKind::FirstAttempt) s += "[" + std::string(to_string(variant)) + "]";
  return s + "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
}

int sigma(const Rational& x) { return x >= 0 ? 1 : -1; }

namespace {

enum class Family { First, Phi, Psi };

Family family_of(TwistKind kind) {
  switch (kind) {
    case TwistKind::FirstAttempt: return Family::First;
    case TwistKind::PhiSingle:
    case TwistKind::PhiCubed: return Family::Phi;
    case TwistKind::PsiSingle:
    case TwistKind::PsiCubed: return Family::Psi;
  }
  return Family::Phi;
}

constexpr std::array<Region, 4> kPhiRegions{Region::I, Region::II, Region::III, Region::IV};
constexpr std::array<Region, 4> kPsiRegions{Region::IPrime, Region::IIPrime, Region::IIIPrime,
                                            Region::IVPrime};
constexpr std::array<Region, 4> kFirstRegions{Region::A1, Region::A2, Region::A3, Region::A4};

const std::array<Region, 4>& regions_of(Family f) {
  switch (f) {
    case Family::First: return kFirstRegions;
    case Family::Phi: return kPhiRegions;
    case Family::Psi: return kPsiRegions;
  }
  return kPhiRegions;
}

// a = eps_n / eps_m = 2^(m-n) and its reciprocal b.
struct CellScale {
  Rational a;
  Rational b;

  CellScale(int n, int m) : a(pow2(m - n)), b(pow2(n - m)) {}

  // a(|x| - 1) + 1: the |y| threshold splitting the outer strip.
  Rational threshold(const Rational& x) const { return a * (abs(x) - 1) + 1; }
};

struct Conditions {
  bool xy_le0;
  bool xy_ge0;
  bool in_strip;     // 1 - b <= |x| <= 1
  bool inner;        // |x| <= 1 - b
  bool y_above;      // s <= |y| <= 1
  bool y_below;      // 0 <= |y| <= s
};

Conditions conditions(const CellScale& c, const Rational& x, const Rational& y) {
  const Rational ax = abs(x);
  const Rational ay = abs(y);
  const Rational xy = x * y;
  const Rational edge = 1 - c.b;
  const Rational s = c.threshold(x);
  return Conditions{xy <= 0, xy >= 0, edge <= ax && ax <= 1, ax <= edge, s <= ay && ay <= 1, ay <= s};
}

bool contains(Family family, const CellScale& c, Region region, const Rational& x, const Rational& y) {
  if (family == Family::First) {
    const Rational ax = abs(x);
    const Rational ay = abs(y);
    const Rational xy = x * y;
    switch (region) {
      case Region::A1: return ax <= ay && xy < 0;
      case Region::A2: return ax >= ay && xy < 0;
      case Region::A3: return ax >= ay && xy >= 0;
      case Region::A4: return ax <= ay && xy >= 0;
      default: return false;
    }
  }
  const Conditions k = conditions(c, x, y);
  switch (region) {
    case Region::I: return k.xy_le0 && k.in_strip && k.y_above;
    case Region::II: return k.xy_le0 && k.in_strip && k.y_below;
    case Region::III: return k.xy_ge0 && k.in_strip && k.y_below;
    case Region::IV: return (k.xy_ge0 && k.in_strip && k.y_above) || k.inner;
    case Region::IPrime: return k.xy_le0 && k.in_strip && k.y_below;
    case Region::IIPrime: return k.xy_ge0 && k.in_strip && k.y_below;
    case Region::IIIPrime: return k.xy_ge0 && k.in_strip && k.y_above;
    case Region::IVPrime: return (k.xy_le0 && k.in_strip && k.y_above) || k.inner;
    default: return false;
  }
}

bool family_has(Family family, Region region) {
  for (Region r : regions_of(family)) {
    if (r == region) return true;
  }
  return false;
}

// y * (sigma(1 - b) - x) / (a(x - sigma) + sigma). The quotient is 0/0 where
// |x| = 1 - b; those points only reach this piece with y = 0.
Rational twisted_shift(const CellScale& c, int sg, const Rational& x, const Rational& y) {
  if (y == 0) return Rational(0);
  const Rational den = c.a * (x - sg) + sg;
  if (den == 0) {
    throw Error(ErrorCode::Unclassifiable,
                "shear quotient undefined at (" + to_string(x) + ", " + to_string(y) + ")");
  }
  return y * ((sg * (1 - c.b) - x) / den);
}

CellPoint single_eval(const CellMap& map, const CellScale& c, Region region, const Rational& x,
                      const Rational& y) {
  const int sg = sigma(x);
  const bool verbatim = map.variant == FormulaVariant::Verbatim;
  switch (region) {
    case Region::A1: return {-y, x + y};
    case Region::A2: return {x, x + y};
    case Region::A3: return {x - y, x};
    case Region::A4: return {x - y, y};

    case Region::I: return {sg - c.b * (y + sg), y + sg + c.a * (x - sg)};
    case Region::II: return {x, y + sg + c.a * (x - sg)};
    case Region::III: {
      const Rational shift = twisted_shift(c, sg, x, y);
      return {verbatim ? Rational(x - shift) : Rational(x + shift), sg + c.a * (x - sg)};
    }
    case Region::IV: return {x - c.b * y, y};

    case Region::IPrime: {
      const Rational shift = twisted_shift(c, sg, x, y);
      return {verbatim ? Rational(x + shift) : Rational(x - shift), -sg - c.a * (x - sg)};
    }
    case Region::IIPrime: return {x, y - sg - c.a * (x - sg)};
    case Region::IIIPrime: return {sg - c.b * (-y + sg), y - sg - c.a * (x - sg)};
    case Region::IVPrime: return {x + c.b * y, y};
  }
  throw Error(ErrorCode::Unclassifiable, "unknown region");
}

Region first_match(Family family, const CellScale& c, const Rational& x, const Rational& y) {
  for (Region r : regions_of(family)) {
    if (contains(family, c, r, x, y)) return r;
  }
  throw Error(ErrorCode::Unclassifiable, "no piece matches (" + to_string(x) + ", " + to_string(y) + ")");
}

bool in_square(const CellPoint& p) { return abs(p.x) <= 1 && abs(p.y) <= 1; }

}  // namespace

Region classify_region(TwistKind kind, int n, int m, const Rational& x, const Rational& y) {
  if (n < 1 || m <= n) throw Error(ErrorCode::BadIndices, "cell map needs m > n >= 1");
  return first_match(family_of(kind), CellScale(n, m), x, y);
}

std::vector<Region> matching_regions(TwistKind kind, int n, int m, const Rational& x, const Rational& y) {
  if (n < 1 || m <= n) throw Error(ErrorCode::BadIndices, "cell map needs m > n >= 1");
  const Family family = family_of(kind);
  const CellScale c(n, m);
  std::vector<Region> out;
  for (Region r : regions_of(family)) {
    if (contains(family, c, r, x, y)) out.push_back(r);
  }
  return out;
}

bool region_contains(TwistKind kind, int n, int m, Region region, const Rational& x, const Rational& y) {
  return contains(family_of(kind), CellScale(n, m), region, x, y);
}

CellPoint region_formula(const CellMap& map, Region region, const Rational& x, const Rational& y) {
  if (!family_has(family_of(map.kind), region)) {
    throw Error(ErrorCode::Unclassifiable,
                std::string("region ") + std::string(to_string(region)) + " is not a piece of " + map.describe());
  }
  return single_eval(map, CellScale(map.n, map.m), region, x, y);
}

CellPoint twist_eval_unchecked(const CellMap& map, const Rational& x, const Rational& y) {
  const Family family = family_of(map.kind);
  const CellScale c(map.n, map.m);
  CellPoint p{x, y};
  const int reps = map.cubed() ? 3 : 1;
  for (int r = 0; r < reps; ++r) p = single_eval(map, c, first_match(family, c, p.x, p.y), p.x, p.y);
  return p;
}

CellPoint twist_eval(const CellMap& map, const Rational& x, const Rational& y) {
  if (!in_square({x, y})) {
    throw Error(ErrorCode::OutOfRange, "input (" + to_string(x) + ", " + to_string(y) + ") outside the square");
  }
  const Family family = family_of(map.kind);
  const CellScale c(map.n, map.m);
  CellPoint p{x, y};
  const int reps = map.cubed() ? 3 : 1;
  for (int r = 0; r < reps; ++r) {
    const CellPoint in = p;
    p = single_eval(map, c, first_match(family, c, in.x, in.y), in.x, in.y);
    if (!in_square(p)) {
      throw Error(ErrorCode::RangeViolation, map.describe() + " sends (" + to_string(in.x) + ", " +
                                                 to_string(in.y) + ") to (" + to_string(p.x) + ", " +
                                                 to_string(p.y) + ")");
    }
  }
  return p;
}

PointRep twist_cell_apply(const CellMap& map, const PointRep& p) {
  const CellPoint out = twist_eval(map, p.coord(map.n), p.coord(map.m));
  return p.with_coords(map.n, out.x, map.m, out.y);
}

namespace {

struct AffinePiece {
  Region region;
  int sg;
  // (u, v) = M (x, y) + c
  Rational m11, m12, m21, m22, c1, c2;
};

AffinePiece fit_piece(const CellMap& map, const CellScale& c, Region region, int sg) {
  // Sample points share the sign sigma and keep the strip threshold nonzero,
  // so every piece formula is defined there.
  const Rational x0 = sg * (1 - c.b / 2);
  const Rational x1(sg);
  const Rational y0(0);
  const Rational y1(1, 2);

  const CellPoint f00 = single_eval(map, c, region, x0, y0);
  const CellPoint f10 = single_eval(map, c, region, x1, y0);
  const CellPoint f01 = single_eval(map, c, region, x0, y1);
  const CellPoint f11 = single_eval(map, c, region, x1, y1);

  AffinePiece piece{region, sg, 0, 0, 0, 0, 0, 0};
  piece.m11 = (f10.x - f00.x) / (x1 - x0);
  piece.m21 = (f10.y - f00.y) / (x1 - x0);
  piece.m12 = (f01.x - f00.x) / (y1 - y0);
  piece.m22 = (f01.y - f00.y) / (y1 - y0);
  piece.c1 = f00.x - piece.m11 * x0 - piece.m12 * y0;
  piece.c2 = f00.y - piece.m21 * x0 - piece.m22 * y0;

  const CellPoint predicted{piece.m11 * x1 + piece.m12 * y1 + piece.c1,
                            piece.m21 * x1 + piece.m22 * y1 + piece.c2};
  if (!(predicted == f11)) {
    throw Error(ErrorCode::Unclassifiable,
                "piece " + std::string(to_string(region)) + " of " + map.describe() + " is not affine");
  }
  return piece;
}

CellPoint single_oracle(const CellMap& map, const Rational& u, const Rational& v) {
  const Family family = family_of(map.kind);
  const CellScale c(map.n, map.m);
  std::vector<CellPoint> found;

  for (Region region : regions_of(family)) {
    for (int sg : {1, -1}) {
      const AffinePiece p = fit_piece(map, c, region, sg);
      const Rational det = p.m11 * p.m22 - p.m12 * p.m21;
      if (det == 0) continue;
      const Rational du = u - p.c1;
      const Rational dv = v - p.c2;
      CellPoint cand{(p.m22 * du - p.m12 * dv) / det, (p.m11 * dv - p.m21 * du) / det};

      if (!in_square(cand) || sigma(cand.x) != sg) continue;
      if (!contains(family, c, region, cand.x, cand.y)) continue;
      // The classified piece at cand may differ from this one on overlaps;
      // only accept candidates the actual map sends to (u, v).
      if (!(twist_eval_unchecked(map.single(), cand.x, cand.y) == CellPoint{u, v})) continue;

      bool seen = false;
      for (const auto& f : found) seen = seen || f == cand;
      if (!seen) found.push_back(std::move(cand));
    }
  }

  if (found.empty()) {
    throw Error(ErrorCode::NoPreimage,
                map.describe() + " has no preimage of (" + to_string(u) + ", " + to_string(v) + ")");
  }
  if (found.size() > 1) {
    throw Error(ErrorCode::MultiplePreimages, map.describe() + " has " + std::to_string(found.size()) +
                                                  " preimages of (" + to_string(u) + ", " + to_string(v) +
                                                  ")");
  }
  return found.front();
}

}  // namespace

CellPoint piece_inverse_oracle(const CellMap& map, const Rational& u, const Rational& v) {
  if (!in_square({u, v})) {
    throw Error(ErrorCode::OutOfRange, "target (" + to_string(u) + ", " + to_string(v) + ") outside the square");
  }
  const CellMap single = map.single();
  CellPoint p{u, v};
  const int reps = map.cubed() ? 3 : 1;
  for (int r = 0; r < reps; ++r) p = single_oracle(single, p.x, p.y);
  return p;
}

Rational displacement_bound(const CellMap& map) {
  switch (map.kind) {
    case TwistKind::FirstAttempt: return 2 * pow2(-map.n) + 2 * pow2(-map.m);
    case TwistKind::PhiSingle:
    case TwistKind::PsiSingle: return pow2(-map.m);
    case TwistKind::PhiCubed:
    case TwistKind::PsiCubed: return 3 * pow2(-map.m);
  }
  return Rational(0);
}

std::optional<Rational> lipschitz_contract(const CellMap& map) {
  if (map.kind == TwistKind::FirstAttempt) return std::nullopt;
  return map.cubed() ? Rational(8) : Rational(2);
}

Rational lipschitz_sample_check(const CellMap& map,
                                std::span<const std::pair<PointRep, PointRep>> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::EmptySampleSet, "lipschitz_sample_check needs pairs");
  Rational best(0);
  for (const auto& [p, q] : pairs) {
    const Rational before = metric_d(p, q);
    if (before == 0) throw Error(ErrorCode::DegeneratePair, "pair of identical points");
    Rational ratio = metric_d(twist_cell_apply(map, p), twist_cell_apply(map, q)) / before;
    if (ratio > best) best = std::move(ratio);
  }
  return best;
}

}  // namespace hcube
