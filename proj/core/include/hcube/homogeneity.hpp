#pragma once

#include <optional>
#include <string_view>

#include "hcube/interior_map.hpp"
#include "hcube/schedule.hpp"

namespace hcube {

enum class PlanCase { InteriorInterior, BoundaryInterior, InteriorBoundary, BoundaryBoundary };

std::string_view to_string(PlanCase c);
PlanCase plan_case_from_string(std::string_view s);

/// A self-homeomorphism H of Q carrying p to q (up to a certified radius):
///
///   InteriorInterior   H = f
///   BoundaryInterior   H = f o h'
///   InteriorBoundary   H = h^-1 o f
///   BoundaryBoundary   H = h^-1 o f o h'
///
/// h' pushes p into the pseudo-interior (fwd_schedule, built from p), h does
/// the same for q (bwd_schedule, built from q), and f is the coordinatewise
/// map between the two interior images. f acts on coordinates 1..anchor_limit
/// and is the identity beyond. Stored schedules list at least the stages
/// that finalize those coordinates.
struct HomeoPlan {
  PlanCase kind = PlanCase::InteriorInterior;
  std::optional<InteriorMapParams> f;
  std::optional<Schedule> fwd_schedule;
  std::optional<Schedule> bwd_schedule;
  int anchor_limit = 0;
};

PlanCase select_case(const PointRep& p, const PointRep& q);

/// Builds and verifies a plan with certified d(H(p), q) < tau. Raises the
/// anchor limit until verification passes; throws HorizonExceeded once the
/// stages needed to finalize the anchors exceed `horizon`.
HomeoPlan solve(const PointRep& p, const PointRep& q, const Rational& tau, int horizon = 64);

/// H(x) with radius < tau. The inner error is inflated through the outer maps
/// by the slope bound of f and K = 8 per reverse stage; when both an inner and
/// an outer truncation are present each gets tau/2.
CertifiedPoint plan_eval(const HomeoPlan& plan, const PointRep& x, const Rational& tau);

/// H^-1(y) with radius < tau.
CertifiedPoint plan_inverse_eval(const HomeoPlan& plan, const PointRep& y, const Rational& tau);

/// d(plan_eval(p, tau/2).value, q) + radius, an upper bound on d(H(p), q).
Rational certified_distance(const HomeoPlan& plan, const PointRep& p, const PointRep& q, const Rational& tau);

/// certified_distance(...) < tau.
bool verify_plan(const HomeoPlan& plan, const PointRep& p, const PointRep& q, const Rational& tau);

/// Bound on d(H^-1-approx(H-approx(x)), x) given the two certificates:
/// inverse.radius + inverse.lipschitz * forward.radius.
Rational roundtrip_radius(const CertifiedPoint& forward, const CertifiedPoint& inverse);

}  // namespace hcube
