#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hcube/rational.hpp"

namespace hcube {

/// A point of the Hilbert cube Q = prod_{i>=1} [-1, 1] in finite-prefix plus
/// constant-tail form: coordinates 1..N come from `prefix`, every coordinate
/// beyond N equals `tail`.
///
/// Trailing prefix entries equal to the tail are dropped, so two PointReps
/// compare equal exactly when they agree in every coordinate.
class PointRep {
 public:
  /// The origin.
  PointRep() = default;

  /// Throws ErrorCode::OutOfRange if any coordinate leaves [-1, 1].
  PointRep(std::vector<Rational> prefix, Rational tail);

  static PointRep constant(const Rational& value) { return PointRep({}, value); }

  /// Coordinate i (1-based). i == 0 is a programming error and throws BadIndices.
  const Rational& coord(int i) const;

  std::span<const Rational> prefix() const { return prefix_; }
  const Rational& tail() const { return tail_; }
  int prefix_size() const { return static_cast<int>(prefix_.size()); }

  /// Copy with coordinate i replaced; the prefix grows as needed.
  PointRep with_coord(int i, const Rational& value) const;
  PointRep with_coords(int i, const Rational& vi, int j, const Rational& vj) const;

  friend bool operator==(const PointRep& a, const PointRep& b) {
    return a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
  }

 private:
  void normalize();

  std::vector<Rational> prefix_;
  Rational tail_{0};
};

/// A point of the two-cell I_n x I_m.
struct CellPoint {
  Rational x;
  Rational y;

  friend bool operator==(const CellPoint&, const CellPoint&) = default;
};

/// epsilon_j = 2^-j; coordinate j has d-length 2 epsilon_j.
struct CoordinateWeight {
  int j;
  Rational epsilon;
};

CoordinateWeight coordinate_weight(int j);

/// d(p, q) = sum_{i>=1} |p_i - q_i| 2^-i, exact. The tail contributes the
/// closed form |tail_p - tail_q| 2^-N.
Rational metric_d(const PointRep& p, const PointRep& q);

/// eps_n |a.x - b.x| + eps_m |a.y - b.y|; requires m > n >= 1.
Rational cell_metric(int n, int m, const CellPoint& a, const CellPoint& b);

/// The set {j : |p_j| = 1} in canonical form, so equal sets compare equal
/// regardless of how the point is stored.
struct BoundaryProfile {
  std::vector<int> explicit_indices;  // ascending, all below tail_start
  bool tail_is_boundary = false;
  // With a boundary tail: least index from which every coordinate is +-1.
  // Otherwise one past the last explicit index.
  int tail_start = 1;

  bool pseudo_interior() const { return explicit_indices.empty() && !tail_is_boundary; }

  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

BoundaryProfile classify_point(const PointRep& p);

using PointMap = std::function<PointRep(const PointRep&)>;

/// Max over samples of d(A(x), B(x)): a lower bound on rho(A, B).
Rational rho_sampled(const PointMap& a, const PointMap& b, std::span<const PointRep> samples);

/// rho_sampled(A, B) + rho_sampled(A^-1, B^-1).
Rational zeta_sampled(const PointMap& a, const PointMap& a_inv, const PointMap& b,
                      const PointMap& b_inv, std::span<const PointRep> samples);

}  // namespace hcube
