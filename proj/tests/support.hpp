#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcube/point.hpp"

namespace hcube::testing {

using Rng = std::mt19937_64;

/// Uniform-ish rational in [lo, hi] with denominator up to max_den.
inline Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den = 64) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den);
  Rational t(num_dist(rng), den);
  t.canonicalize();
  return lo + (hi - lo) * t;
}

inline Rational random_unit(Rng& rng, long max_den = 64) { return random_rational(rng, -1, 1, max_den); }

/// Strictly inside (-1, 1).
inline Rational random_open_unit(Rng& rng, long max_den = 64) {
  for (;;) {
    Rational r = random_unit(rng, max_den);
    if (abs(r) < 1) return r;
  }
}

inline PointRep random_point(Rng& rng, int prefix_len, long max_den = 64) {
  std::vector<Rational> prefix;
  for (int i = 0; i < prefix_len; ++i) prefix.push_back(random_unit(rng, max_den));
  return PointRep(std::move(prefix), random_unit(rng, max_den));
}

inline PointRep random_interior_point(Rng& rng, int prefix_len, long max_den = 64) {
  std::vector<Rational> prefix;
  for (int i = 0; i < prefix_len; ++i) prefix.push_back(random_open_unit(rng, max_den));
  return PointRep(std::move(prefix), random_open_unit(rng, max_den));
}

inline Rational q(const char* text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

inline PointRep pt(std::vector<std::string> prefix, const std::string& tail) {
  std::vector<Rational> coords;
  for (const auto& s : prefix) coords.emplace_back(s);
  for (auto& c : coords) c.canonicalize();
  Rational t(tail);
  t.canonicalize();
  return PointRep(std::move(coords), t);
}

/// Independent oracle for d: direct summation of the first `terms` coordinates
/// plus the exact remainder sum_{i>terms} |tail_p - tail_q| 2^-i.
inline Rational metric_oracle(const PointRep& p, const PointRep& qq, int terms = 64) {
  Rational sum(0);
  Rational weight(1, 2);
  for (int i = 1; i <= terms; ++i) {
    sum += abs(p.coord(i) - qq.coord(i)) * weight;
    weight /= 2;
  }
  Rational rest(1);
  for (int i = 0; i < terms; ++i) rest /= 2;
  return sum + abs(p.tail() - qq.tail()) * rest;
}

}  // namespace hcube::testing
