#include "hcube/homogeneity.hpp"

#include <string>

#include "hcube/error.hpp"

namespace hcube {

std::string_view to_string(PlanCase c) {
  switch (c) {
    case PlanCase::InteriorInterior: return "InteriorInterior";
    case PlanCase::BoundaryInterior: return "BoundaryInterior";
    case PlanCase::InteriorBoundary: return "InteriorBoundary";
    case PlanCase::BoundaryBoundary: return "BoundaryBoundary";
  }
  return "?";
}

PlanCase plan_case_from_string(std::string_view s) {
  for (PlanCase c : {PlanCase::InteriorInterior, PlanCase::BoundaryInterior, PlanCase::InteriorBoundary,
                     PlanCase::BoundaryBoundary}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::ParseError, "unknown plan case \"" + std::string(s) + "\"");
}

PlanCase select_case(const PointRep& p, const PointRep& q) {
  const bool p_in = classify_point(p).pseudo_interior();
  const bool q_in = classify_point(q).pseudo_interior();
  if (p_in && q_in) return PlanCase::InteriorInterior;
  if (!p_in && q_in) return PlanCase::BoundaryInterior;
  if (p_in) return PlanCase::InteriorBoundary;
  return PlanCase::BoundaryBoundary;
}

namespace {

Rational pow8(int k) { return pow2(3L * k); }

// Coordinates 1..limit of x; f is the identity from limit + 1 on.
PointRep truncated_anchor(const PointRep& x, int limit) {
  std::vector<Rational> prefix;
  prefix.reserve(static_cast<std::size_t>(limit));
  for (int i = 1; i <= limit; ++i) prefix.push_back(x.coord(i));
  return PointRep(std::move(prefix), Rational(0));
}

// Interior image of `point` under the limit map of `s`, exact on 1..limit.
PointRep interior_image(Schedule& s, const PointRep& point, int limit, int horizon) {
  const int stages = finalizing_stage_count(s, limit, horizon);
  s.stages.resize(static_cast<std::size_t>(stages));
  s.budget.resize(static_cast<std::size_t>(stages));
  return truncated_anchor(forward_partial_eval(s, point, stages), limit);
}

HomeoPlan build_plan(const PointRep& p, const PointRep& q, int limit, int horizon) {
  HomeoPlan plan;
  plan.kind = select_case(p, q);
  plan.anchor_limit = limit;

  if (plan.kind == PlanCase::InteriorInterior) {
    plan.f.emplace(p, q);
    plan.anchor_limit = 0;
    return plan;
  }

  PointRep source = p;
  PointRep target = q;
  const bool p_boundary = plan.kind == PlanCase::BoundaryInterior || plan.kind == PlanCase::BoundaryBoundary;
  const bool q_boundary = plan.kind == PlanCase::InteriorBoundary || plan.kind == PlanCase::BoundaryBoundary;

  if (p_boundary) {
    Schedule s = build_schedule(p, 1);
    source = interior_image(s, p, limit, horizon);
    plan.fwd_schedule = std::move(s);
  } else {
    source = truncated_anchor(p, limit);
  }
  if (q_boundary) {
    Schedule s = build_schedule(q, 1);
    target = interior_image(s, q, limit, horizon);
    plan.bwd_schedule = std::move(s);
  } else {
    target = truncated_anchor(q, limit);
  }
  plan.f.emplace(std::move(source), std::move(target));
  return plan;
}

struct Pieces {
  const Schedule* fwd = nullptr;  // inner schedule, applied forward
  const Schedule* rev = nullptr;  // outer schedule, applied in reverse
  InteriorMapParams f;
};

// Evaluates R_J o f o F_I (x) where either schedule may be absent.
CertifiedPoint eval_composite(const Pieces& pc, const PointRep& x, const Rational& tau) {
  const Rational slope = interior_map_lipschitz(pc.f);

  if (!pc.fwd && !pc.rev) return CertifiedPoint{interior_map_eval(pc.f, x), Rational(0), 0, slope};

  Rational outer_budget = tau;
  Rational inner_budget = tau;
  if (pc.fwd && pc.rev) {
    outer_budget = tau / 2;
    inner_budget = tau / 2;
  }

  int outer_stages = 0;
  Rational outer_radius(0);
  Rational outer_lip(1);
  Schedule rev;
  if (pc.rev) {
    rev = *pc.rev;
    outer_stages = least_stage_below(rev, true, outer_budget, pc.rev->size());
    outer_radius = reverse_tail_bound(rev, outer_stages);
    outer_lip = pow8(outer_stages);
  }

  PointRep value = x;
  int inner_stages = 0;
  Rational inner_radius(0);
  Rational inner_lip(1);
  if (pc.fwd) {
    // inflate the forward truncation through f and the outer reverse stages
    const Rational gain = outer_lip * slope;
    Schedule fwd = *pc.fwd;
    inner_stages = least_stage_below(fwd, false, inner_budget / gain, pc.fwd->size());
    inner_radius = gain * forward_tail_bound(fwd, inner_stages);
    inner_lip = pow8(inner_stages);
    value = forward_partial_eval(fwd, value, inner_stages);
  }

  value = interior_map_eval(pc.f, value);
  if (pc.rev) value = reverse_partial_eval(rev, value, outer_stages);

  return CertifiedPoint{std::move(value), outer_radius + inner_radius, inner_stages + outer_stages,
                        outer_lip * slope * inner_lip};
}

}  // namespace

HomeoPlan solve(const PointRep& p, const PointRep& q, const Rational& tau, int horizon) {
  if (tau <= 0) throw Error(ErrorCode::OutOfRange, "tau must be positive");
  if (select_case(p, q) == PlanCase::InteriorInterior) return build_plan(p, q, 0, horizon);

  // Start with the first limit whose untouched tail alone is within tau/4.
  int limit = 1;
  while (pow2(1 - limit) > tau / 4) ++limit;

  for (;; ++limit) {
    HomeoPlan plan = build_plan(p, q, limit, horizon);  // throws HorizonExceeded eventually
    if (verify_plan(plan, p, q, tau)) return plan;
  }
}

CertifiedPoint plan_eval(const HomeoPlan& plan, const PointRep& x, const Rational& tau) {
  if (tau <= 0) throw Error(ErrorCode::OutOfRange, "tau must be positive");
  if (!plan.f) throw Error(ErrorCode::ParseError, "plan has no interior map");
  Pieces pc{plan.fwd_schedule ? &*plan.fwd_schedule : nullptr, plan.bwd_schedule ? &*plan.bwd_schedule : nullptr,
            *plan.f};
  return eval_composite(pc, x, tau);
}

CertifiedPoint plan_inverse_eval(const HomeoPlan& plan, const PointRep& y, const Rational& tau) {
  if (tau <= 0) throw Error(ErrorCode::OutOfRange, "tau must be positive");
  if (!plan.f) throw Error(ErrorCode::ParseError, "plan has no interior map");
  // H^-1 = h' ^-1 o f^-1 o h: the roles of the schedules swap.
  Pieces pc{plan.bwd_schedule ? &*plan.bwd_schedule : nullptr, plan.fwd_schedule ? &*plan.fwd_schedule : nullptr,
            interior_map_inverse(*plan.f)};
  return eval_composite(pc, y, tau);
}

Rational certified_distance(const HomeoPlan& plan, const PointRep& p, const PointRep& q, const Rational& tau) {
  const CertifiedPoint image = plan_eval(plan, p, tau / 2);
  return metric_d(image.value, q) + image.radius;
}

bool verify_plan(const HomeoPlan& plan, const PointRep& p, const PointRep& q, const Rational& tau) {
  return certified_distance(plan, p, q, tau) < tau;
}

Rational roundtrip_radius(const CertifiedPoint& forward, const CertifiedPoint& inverse) {
  return inverse.radius + inverse.lipschitz * forward.radius;
}

}  // namespace hcube
