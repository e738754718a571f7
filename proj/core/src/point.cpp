#include "hcube/point.hpp"

#include <algorithm>
#include <string>

#include "hcube/error.hpp"

namespace hcube {

namespace {

void require_unit(const Rational& c, const char* what) {
  if (c < -1 || c > 1) {
    throw Error(ErrorCode::OutOfRange, std::string(what) + " " + to_string(c) + " outside [-1, 1]");
  }
}

}  // namespace

PointRep::PointRep(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (const auto& c : prefix_) require_unit(c, "coordinate");
  require_unit(tail_, "tail");
  normalize();
}

void PointRep::normalize() {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

const Rational& PointRep::coord(int i) const {
  if (i < 1) throw Error(ErrorCode::BadIndices, "coordinate index must be >= 1");
  return i <= prefix_size() ? prefix_[static_cast<std::size_t>(i - 1)] : tail_;
}

PointRep PointRep::with_coord(int i, const Rational& value) const {
  if (i < 1) throw Error(ErrorCode::BadIndices, "coordinate index must be >= 1");
  require_unit(value, "coordinate");
  PointRep out = *this;
  if (i > out.prefix_size()) out.prefix_.resize(static_cast<std::size_t>(i), tail_);
  out.prefix_[static_cast<std::size_t>(i - 1)] = value;
  out.normalize();
  return out;
}

PointRep PointRep::with_coords(int i, const Rational& vi, int j, const Rational& vj) const {
  if (i < 1 || j < 1) throw Error(ErrorCode::BadIndices, "coordinate index must be >= 1");
  require_unit(vi, "coordinate");
  require_unit(vj, "coordinate");
  PointRep out = *this;
  const int need = std::max(i, j);
  if (need > out.prefix_size()) out.prefix_.resize(static_cast<std::size_t>(need), tail_);
  out.prefix_[static_cast<std::size_t>(i - 1)] = vi;
  out.prefix_[static_cast<std::size_t>(j - 1)] = vj;
  out.normalize();
  return out;
}

CoordinateWeight coordinate_weight(int j) {
  if (j < 1) throw Error(ErrorCode::BadIndices, "coordinate index must be >= 1");
  return {j, pow2(-j)};
}

Rational metric_d(const PointRep& p, const PointRep& q) {
  const int n = std::max(p.prefix_size(), q.prefix_size());
  Rational sum(0);
  Rational term;
  for (int i = 1; i <= n; ++i) {
    term = abs(p.coord(i) - q.coord(i));
    if (term == 0) continue;
    mpq_div_2exp(term.get_mpq_t(), term.get_mpq_t(), static_cast<mp_bitcnt_t>(i));
    sum += term;
  }
  term = abs(p.tail() - q.tail());
  mpq_div_2exp(term.get_mpq_t(), term.get_mpq_t(), static_cast<mp_bitcnt_t>(n));
  sum += term;
  return sum;
}

Rational cell_metric(int n, int m, const CellPoint& a, const CellPoint& b) {
  if (n < 1 || m <= n) {
    throw Error(ErrorCode::BadIndices,
                "cell indices need m > n >= 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  return pow2(-n) * abs(a.x - b.x) + pow2(-m) * abs(a.y - b.y);
}

BoundaryProfile classify_point(const PointRep& p) {
  BoundaryProfile profile;
  for (int i = 1; i <= p.prefix_size(); ++i) {
    if (abs(p.coord(i)) == 1) profile.explicit_indices.push_back(i);
  }
  profile.tail_is_boundary = abs(p.tail()) == 1;
  auto& idx = profile.explicit_indices;
  if (profile.tail_is_boundary) {
    profile.tail_start = p.prefix_size() + 1;
    while (!idx.empty() && idx.back() == profile.tail_start - 1) {
      idx.pop_back();
      --profile.tail_start;
    }
  } else {
    profile.tail_start = idx.empty() ? 1 : idx.back() + 1;
  }
  return profile;
}

Rational rho_sampled(const PointMap& a, const PointMap& b, std::span<const PointRep> samples) {
  if (samples.empty()) throw Error(ErrorCode::EmptySampleSet, "rho_sampled needs samples");
  Rational best(0);
  for (const auto& x : samples) {
    Rational d = metric_d(a(x), b(x));
    if (d > best) best = std::move(d);
  }
  return best;
}

Rational zeta_sampled(const PointMap& a, const PointMap& a_inv, const PointMap& b,
                      const PointMap& b_inv, std::span<const PointRep> samples) {
  return rho_sampled(a, b, samples) + rho_sampled(a_inv, b_inv, samples);
}

}  // namespace hcube
