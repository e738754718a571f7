#pragma once

#include "hcube/point.hpp"

namespace hcube {

/// Coordinatewise two-piece linear map of [-1, 1] onto itself fixing +-1 and
/// sending anchor p to anchor q. Requires |p|, |q| < 1 (AnchorOnBoundary).
Rational interior_coord_map(const Rational& p, const Rational& q, const Rational& t);

/// Anchors of the product map x -> (f_i(x_i)). Both anchors must be
/// pseudo-interior, tails included.
class InteriorMapParams {
 public:
  InteriorMapParams(PointRep source, PointRep target);

  const PointRep& source() const { return source_; }
  const PointRep& target() const { return target_; }

  friend bool operator==(const InteriorMapParams&, const InteriorMapParams&) = default;

 private:
  PointRep source_;
  PointRep target_;
};

PointRep interior_map_eval(const InteriorMapParams& params, const PointRep& x);

/// Same family with anchors exchanged.
InteriorMapParams interior_map_inverse(const InteriorMapParams& params);

/// Largest slope over all coordinate maps; a Lipschitz constant for the
/// product map in the metric d.
Rational interior_map_lipschitz(const InteriorMapParams& params);

}  // namespace hcube
