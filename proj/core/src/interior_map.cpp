#include "hcube/interior_map.hpp"

#include <algorithm>

#include "hcube/error.hpp"

namespace hcube {

namespace {

void require_interior_anchor(const Rational& a) {
  if (abs(a) >= 1) {
    throw Error(ErrorCode::AnchorOnBoundary, "anchor coordinate " + to_string(a) + " is not in (-1, 1)");
  }
}

Rational max_slope(const Rational& p, const Rational& q) {
  Rational lower = (q + 1) / (p + 1);
  Rational upper = (1 - q) / (1 - p);
  return std::max(lower, upper);
}

}  // namespace

Rational interior_coord_map(const Rational& p, const Rational& q, const Rational& t) {
  require_interior_anchor(p);
  require_interior_anchor(q);
  if (t < -1 || t > 1) throw Error(ErrorCode::OutOfRange, "argument " + to_string(t) + " outside [-1, 1]");
  if (p == q) return t;
  if (t <= p) return (t + 1) * ((q + 1) / (p + 1)) - 1;
  return (t - p) * ((1 - q) / (1 - p)) + q;
}

InteriorMapParams::InteriorMapParams(PointRep source, PointRep target)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& c : source_.prefix()) require_interior_anchor(c);
  for (const auto& c : target_.prefix()) require_interior_anchor(c);
  require_interior_anchor(source_.tail());
  require_interior_anchor(target_.tail());
}

PointRep interior_map_eval(const InteriorMapParams& params, const PointRep& x) {
  const PointRep& p = params.source();
  const PointRep& q = params.target();
  const int n = std::max({p.prefix_size(), q.prefix_size(), x.prefix_size()});

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(interior_coord_map(p.coord(i), q.coord(i), x.coord(i)));
  return PointRep(std::move(out), interior_coord_map(p.tail(), q.tail(), x.tail()));
}

InteriorMapParams interior_map_inverse(const InteriorMapParams& params) {
  return InteriorMapParams(params.target(), params.source());
}

Rational interior_map_lipschitz(const InteriorMapParams& params) {
  const PointRep& p = params.source();
  const PointRep& q = params.target();
  const int n = std::max(p.prefix_size(), q.prefix_size());
  Rational best = max_slope(p.tail(), q.tail());
  for (int i = 1; i <= n; ++i) best = std::max(best, max_slope(p.coord(i), q.coord(i)));
  return best;
}

}  // namespace hcube
