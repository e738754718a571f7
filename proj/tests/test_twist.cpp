#include <gtest/gtest.h>

#include <set>

#include "hcube/diagnostics.hpp"
#include "hcube/error.hpp"
#include "hcube/twist.hpp"
#include "support.hpp"

using namespace hcube;
using namespace hcube::testing;

namespace {

// Reference single twists written with the shear quotient reduced to its
// constant value -eps_m/eps_n. Region tests are transcribed separately.
struct Reference {
  Rational a;  // eps_n / eps_m
  Rational b;  // eps_m / eps_n

  Reference(int n, int m) : a(pow2(m - n)), b(pow2(n - m)) {}

  Rational s(const Rational& x) const { return a * (abs(x) - 1) + 1; }
  bool strip(const Rational& x) const { return 1 - b <= abs(x) && abs(x) <= 1; }

  CellPoint phi(const Rational& x, const Rational& y) const {
    const Rational sg = x >= 0 ? 1 : -1;
    const Rational ay = abs(y);
    const Rational lift = sg + a * (x - sg);
    if (x * y <= 0 && strip(x) && ay >= s(x)) return {sg - b * (y + sg), y + lift};
    if (x * y <= 0 && strip(x) && ay <= s(x)) return {x, y + lift};
    if (x * y >= 0 && strip(x) && ay <= s(x)) return {x - b * y, lift};
    return {x - b * y, y};
  }

  CellPoint psi(const Rational& x, const Rational& y) const {
    const Rational sg = x >= 0 ? 1 : -1;
    const Rational ay = abs(y);
    const Rational lift = sg + a * (x - sg);
    if (x * y <= 0 && strip(x) && ay <= s(x)) return {x + b * y, -lift};
    if (x * y >= 0 && strip(x) && ay <= s(x)) return {x, y - lift};
    if (x * y >= 0 && strip(x) && ay >= s(x)) return {sg - b * (-y + sg), y - lift};
    return {x + b * y, y};
  }
};

const std::vector<std::pair<int, int>> kIndexPairs{{1, 2}, {1, 4}, {2, 3}, {3, 12}};

}  // namespace

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(0), 1);
  EXPECT_EQ(sigma(q("-1/3")), -1);
  EXPECT_EQ(sigma(1), 1);
}

TEST(CellMap, ValidatesIndices) {
  EXPECT_THROW(CellMap::phi(2, 2), Error);
  EXPECT_THROW(CellMap::phi(0, 2), Error);
  EXPECT_EQ(CellMap::make(TwistKind::FirstAttempt, FormulaVariant::Verbatim, 1, 2).variant,
            FormulaVariant::Corrected);
  EXPECT_EQ(CellMap::phi_cubed(1, 4).single(), CellMap::phi(1, 4));
  EXPECT_EQ(CellMap::phi(1, 2).describe(), "PhiSingle[Corrected](n=1,m=2)");
}

TEST(ClassifyRegion, Examples) {
  EXPECT_EQ(classify_region(TwistKind::PhiSingle, 1, 2, q("3/4"), q("-1/4")), Region::II);
  EXPECT_EQ(classify_region(TwistKind::PhiSingle, 1, 2, 1, -1), Region::I);
  EXPECT_EQ(classify_region(TwistKind::PhiSingle, 1, 2, 0, 0), Region::IV);
  // (1, 1) lies on the II'/III' interface; both pieces send it to (1, 0).
  EXPECT_EQ(classify_region(TwistKind::PsiSingle, 1, 2, 1, 1), Region::IIPrime);
  EXPECT_TRUE(region_contains(TwistKind::PsiSingle, 1, 2, Region::IIIPrime, 1, 1));
  EXPECT_EQ(region_formula(CellMap::psi(1, 2), Region::IIIPrime, 1, 1), (CellPoint{1, 0}));
}

TEST(ClassifyRegion, PiecesCoverTheSquare) {
  for (auto kind : {TwistKind::FirstAttempt, TwistKind::PhiSingle, TwistKind::PsiSingle}) {
    for (auto [n, m] : kIndexPairs) {
      for (const auto& x : unit_grid(q("1/32"))) {
        for (const auto& y : unit_grid(q("1/32"))) {
          const Region r = classify_region(kind, n, m, x, y);
          EXPECT_TRUE(region_contains(kind, n, m, r, x, y));
          EXPECT_EQ(matching_regions(kind, n, m, x, y).front(), r);
        }
      }
    }
  }
}

TEST(TwistEval, Examples) {
  EXPECT_EQ(twist_eval(CellMap::first_attempt(1, 2), 1, 1), (CellPoint{0, 1}));
  EXPECT_EQ(twist_eval(CellMap::first_attempt(1, 2), q("1/3"), q("1/3")), (CellPoint{0, q("1/3")}));
  EXPECT_EQ(twist_eval(CellMap::phi(1, 2), 1, 0), (CellPoint{1, 1}));
  EXPECT_EQ(twist_eval(CellMap::phi(1, 2), 1, -1), (CellPoint{1, 0}));
  EXPECT_EQ(twist_eval(CellMap::psi(1, 2), 1, 1), (CellPoint{1, 0}));
}

TEST(TwistEval, RejectsPointsOutsideSquare) {
  try {
    twist_eval(CellMap::phi(1, 2), q("3/2"), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(TwistEval, InnerSegmentIsFixed) {
  for (auto kind : {TwistKind::PhiSingle, TwistKind::PsiSingle, TwistKind::PhiCubed, TwistKind::PsiCubed}) {
    for (auto [n, m] : kIndexPairs) {
      const CellMap map = CellMap::make(kind, FormulaVariant::Corrected, n, m);
      const Rational limit = 1 - pow2(n - m);
      for (const auto& x : unit_grid(q("1/64"))) {
        if (abs(x) > limit) continue;
        EXPECT_EQ(twist_eval(map, x, 0), (CellPoint{x, 0})) << map.describe();
      }
    }
  }
}

TEST(TwistEval, CorrectedMatchesReducedReference) {
  for (auto [n, m] : kIndexPairs) {
    Reference ref(n, m);
    for (const auto& x : unit_grid(q("1/64"))) {
      for (const auto& y : unit_grid(q("1/64"))) {
        EXPECT_EQ(twist_eval(CellMap::phi(n, m), x, y), ref.phi(x, y));
        EXPECT_EQ(twist_eval(CellMap::psi(n, m), x, y), ref.psi(x, y));
      }
    }
  }
}

TEST(TwistEval, VerbatimTypeThreeLeavesTheSquare) {
  // On x = 1, y > 0 the printed shear pushes the first coordinate to 1 + y/2.
  const CellMap map = CellMap::phi(1, 2, FormulaVariant::Verbatim);
  EXPECT_EQ(classify_region(TwistKind::PhiSingle, 1, 2, 1, q("1/4")), Region::III);
  EXPECT_EQ(twist_eval_unchecked(map, 1, q("1/4")).x, q("9/8"));
  try {
    twist_eval(map, 1, q("1/4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RangeViolation);
  }
}

TEST(TwistCellApply, CubedOnConstantOne) {
  // Hand iteration of phi_1^4 on (1, 1): (7/8, 1), (3/4, 1), (5/8, 1).
  Reference ref(1, 4);
  CellPoint c{1, 1};
  c = ref.phi(c.x, c.y);
  EXPECT_EQ(c, (CellPoint{q("7/8"), 1}));
  c = ref.phi(c.x, c.y);
  EXPECT_EQ(c, (CellPoint{q("3/4"), 1}));
  c = ref.phi(c.x, c.y);
  EXPECT_EQ(c, (CellPoint{q("5/8"), 1}));
  EXPECT_EQ(twist_cell_apply(CellMap::phi_cubed(1, 4), PointRep::constant(1)), pt({"5/8"}, "1"));
}

TEST(TwistCellApply, OriginIsFixed) {
  for (auto kind : {TwistKind::FirstAttempt, TwistKind::PhiSingle, TwistKind::PsiSingle, TwistKind::PhiCubed,
                    TwistKind::PsiCubed}) {
    for (auto [n, m] : kIndexPairs) {
      EXPECT_EQ(twist_cell_apply(CellMap::make(kind, FormulaVariant::Corrected, n, m), PointRep()), PointRep());
    }
  }
}

TEST(TwistCellApply, FirstAttemptOnConstantPoint) {
  const Rational t = q("1/3");
  EXPECT_EQ(twist_cell_apply(CellMap::first_attempt(1, 2), PointRep::constant(t)), pt({"0"}, "1/3"));
}

TEST(TwistCellApply, OnlyCoordinatesNAndMMove) {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 4;
    const int m = n + 1 + trial % 5;
    PointRep p = random_point(rng, 10);
    PointRep out = twist_cell_apply(CellMap::phi_cubed(n, m), p);
    for (int i = 1; i <= 12; ++i) {
      if (i != n && i != m) EXPECT_EQ(out.coord(i), p.coord(i));
    }
    EXPECT_EQ(out.tail(), p.tail());
  }
}

TEST(PieceInverseOracle, Examples) {
  EXPECT_EQ(piece_inverse_oracle(CellMap::phi(1, 2), 1, 1), (CellPoint{1, 0}));
  EXPECT_EQ(piece_inverse_oracle(CellMap::phi(1, 2), 0, 0), (CellPoint{0, 0}));
  EXPECT_EQ(piece_inverse_oracle(CellMap::first_attempt(1, 2), 0, 1), (CellPoint{1, 1}));
}

TEST(PieceInverseOracle, InvertsOnGrid) {
  for (auto [n, m] : kIndexPairs) {
    for (const auto& x : unit_grid(q("1/32"))) {
      for (const auto& y : unit_grid(q("1/32"))) {
        const CellPoint image = twist_eval(CellMap::phi(n, m), x, y);
        EXPECT_EQ(piece_inverse_oracle(CellMap::phi(n, m), image.x, image.y), (CellPoint{x, y}));
      }
    }
  }
  const CellPoint image = twist_eval(CellMap::phi_cubed(1, 4), q("3/4"), q("-1/2"));
  EXPECT_EQ(piece_inverse_oracle(CellMap::phi_cubed(1, 4), image.x, image.y), (CellPoint{q("3/4"), q("-1/2")}));
}

TEST(PsiInvertsPhi, FullGrid65) {
  for (auto [n, m] : kIndexPairs) {
    for (const auto& x : unit_grid(q("1/32"))) {
      for (const auto& y : unit_grid(q("1/32"))) {
        const CellPoint image = twist_eval(CellMap::phi(n, m), x, y);
        EXPECT_EQ(twist_eval(CellMap::psi(n, m), image.x, image.y), (CellPoint{x, y}));
        const CellPoint back = twist_eval(CellMap::psi(n, m), x, y);
        EXPECT_EQ(twist_eval(CellMap::phi(n, m), back.x, back.y), (CellPoint{x, y}));
      }
    }
  }
}

TEST(PsiInvertsPhi, RandomPoints) {
  Rng rng(32);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 3;
    const int m = n + 1 + trial % 4;
    const Rational x = random_unit(rng, 97);
    const Rational y = random_unit(rng, 97);
    const CellPoint image = twist_eval(CellMap::phi_cubed(n, m), x, y);
    EXPECT_EQ(twist_eval(CellMap::psi_cubed(n, m), image.x, image.y), (CellPoint{x, y}));
  }
}

TEST(TwistEval, OddSymmetry) {
  Rng rng(33);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [n, m] = kIndexPairs[trial % kIndexPairs.size()];
    const Rational x = random_unit(rng);
    const Rational y = random_unit(rng);
    for (auto kind : {TwistKind::PhiSingle, TwistKind::PsiSingle, TwistKind::PhiCubed}) {
      const CellMap map = CellMap::make(kind, FormulaVariant::Corrected, n, m);
      const CellPoint a = twist_eval(map, x, y);
      const CellPoint b = twist_eval(map, -x, -y);
      EXPECT_EQ(b, (CellPoint{-a.x, -a.y}));
    }
  }
}

TEST(DisplacementBound, Examples) {
  EXPECT_EQ(displacement_bound(CellMap::phi(1, 2)), q("1/4"));
  EXPECT_EQ(displacement_bound(CellMap::phi_cubed(1, 4)), q("3/16"));
  EXPECT_EQ(displacement_bound(CellMap::first_attempt(1, 2)), q("3/2"));
}

TEST(DisplacementBound, HoldsOnRandomPoints) {
  Rng rng(34);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto [n, m] = kIndexPairs[trial % kIndexPairs.size()];
    PointRep p = random_point(rng, 13);
    for (auto kind : {TwistKind::FirstAttempt, TwistKind::PhiSingle, TwistKind::PsiSingle, TwistKind::PhiCubed,
                      TwistKind::PsiCubed}) {
      const CellMap map = CellMap::make(kind, FormulaVariant::Corrected, n, m);
      EXPECT_LE(metric_d(twist_cell_apply(map, p), p), displacement_bound(map)) << map.describe();
    }
  }
}

TEST(LipschitzSampleCheck, ContractsHold) {
  EXPECT_EQ(lipschitz_contract(CellMap::psi(1, 2)), Rational(2));
  EXPECT_EQ(lipschitz_contract(CellMap::psi_cubed(1, 2)), Rational(8));
  EXPECT_FALSE(lipschitz_contract(CellMap::first_attempt(1, 2)));

  Rng rng(35);
  for (auto [n, m] : kIndexPairs) {
    std::vector<std::pair<PointRep, PointRep>> pairs;
    for (int i = 0; i < 300; ++i) {
      PointRep a = random_point(rng, 13);
      PointRep b = i % 2 ? random_point(rng, 13) : a.with_coords(n, random_unit(rng), m, random_unit(rng));
      if (a == b) continue;
      pairs.emplace_back(a, b);
    }
    for (auto kind : {TwistKind::PhiSingle, TwistKind::PsiSingle, TwistKind::PhiCubed, TwistKind::PsiCubed}) {
      const CellMap map = CellMap::make(kind, FormulaVariant::Corrected, n, m);
      EXPECT_LE(lipschitz_sample_check(map, pairs), *lipschitz_contract(map)) << map.describe();
    }
  }
}

TEST(LipschitzSampleCheck, FixedPairsGiveOne) {
  const std::vector<std::pair<PointRep, PointRep>> pairs{{PointRep(), pt({"1/4"}, "0")}};
  EXPECT_EQ(lipschitz_sample_check(CellMap::psi(1, 2), pairs), 1);
}

TEST(LipschitzSampleCheck, Errors) {
  const std::vector<std::pair<PointRep, PointRep>> same{{PointRep(), PointRep()}};
  try {
    lipschitz_sample_check(CellMap::psi(1, 2), same);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePair);
  }
  try {
    lipschitz_sample_check(CellMap::psi(1, 2), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySampleSet);
  }
}
