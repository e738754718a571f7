#pragma once

#include <optional>
#include <vector>

#include "hcube/point.hpp"

namespace hcube {

/// Lipschitz constant of every stage map Phi / Psi in the metric d: K = 2^3.
struct LipschitzConstant {
  static Rational value() { return Rational(8); }
};

/// The j-sequence of indices with |p_j| = 1: a finite list, optionally
/// followed by every index >= arithmetic_from.
struct IndexStream {
  std::vector<int> explicit_indices;
  std::optional<int> arithmetic_from;

  bool empty() const { return explicit_indices.empty() && !arithmetic_from; }
  /// First `count` indices of the stream.
  std::vector<int> take(int count) const;

  friend bool operator==(const IndexStream&, const IndexStream&) = default;
};

IndexStream boundary_index_sequence(const PointRep& p);
IndexStream boundary_index_sequence(const BoundaryProfile& profile);

struct Stage {
  int n;
  int m;

  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Stage sequence {(n_k, m_k)} of the limit homeomorphism
/// h = lim Phi_{n_k}^{m_k} o ... o Phi_{n_1}^{m_1}.
///
/// A schedule produced by build_schedule remembers the boundary profile that
/// generated it and can be extended on demand. Hand-built schedules cannot be
/// extended; their tail bounds assume the standard continuation
/// m_{k+1} >= m_k + 4.
struct Schedule {
  std::vector<Stage> stages;
  std::vector<Rational> budget;  // budget[k] = eps_k = 3 * 2^-(k+3), governs stage k+1
  std::optional<BoundaryProfile> source_profile;
  bool open_ended = true;  // false only for the finite (empty) schedule of an interior point

  int size() const { return static_cast<int>(stages.size()); }
  bool extendable() const { return source_profile.has_value() && open_ended; }
};

/// eps_k = 3 * 2^-(k+3).
Rational stage_budget(int k);

Schedule build_schedule(const PointRep& p, int count);
Schedule build_schedule(const BoundaryProfile& profile, int count);

/// Hand-built schedule with the standard budgets; validate with schedule_budget_ok.
Schedule custom_schedule(std::vector<Stage> stages);

/// The same schedule continued to at least `count` stages. Throws
/// HorizonExceeded for schedules that cannot be extended.
Schedule extend_schedule(const Schedule& s, int count);

/// Checks n_k and m_k strictly increasing, m_k > n_k, m_k a multiple of 4 and
/// m_k >= log2(3 / eps_{k-1}) + 3(k-1) + 1, all exactly.
bool schedule_budget_ok(const Schedule& s);

/// Certified sup distance between the stage-I partial composition and the
/// limit: sum_{k>I} 3 * 2^-m_k, exact over listed stages plus a closed-form
/// geometric tail for the continuation.
Rational forward_tail_bound(const Schedule& s, int stage_count);

/// Same for the inverse compositions Psi_1 o ... o Psi_I:
/// sum_{k>I} 8^(k-1) * 3 * 2^-m_k.
Rational reverse_tail_bound(const Schedule& s, int stage_count);

/// Phi_{n_I}^{m_I} o ... o Phi_{n_1}^{m_1} (p), Corrected formulas.
PointRep forward_partial_eval(const Schedule& s, const PointRep& p, int stage_count);

/// Psi_{n_1}^{m_1} o ... o Psi_{n_I}^{m_I} (y), the exact inverse of the forward partial.
PointRep reverse_partial_eval(const Schedule& s, const PointRep& y, int stage_count);

/// A point value with an exact d-radius around the true image.
/// `lipschitz` bounds the Lipschitz constant of the finite composition that
/// produced `value`, so perturbations of the input propagate by at most that
/// factor.
struct CertifiedPoint {
  PointRep value;
  Rational radius;
  int stages_used = 0;
  Rational lipschitz{1};
};

/// h(x) to within tau: the least I with forward_tail_bound(I) < tau.
CertifiedPoint h_eval(const Schedule& s, const PointRep& x, const Rational& tau);

/// h^-1(y) to within tau: the least I with reverse_tail_bound(I) < tau.
CertifiedPoint h_inverse_eval(const Schedule& s, const PointRep& y, const Rational& tau);

/// Least I >= min_stages with bound(I) < tau, extending the schedule as needed.
/// Shared by h_eval and the homogeneity composer.
int least_stage_below(Schedule& s, bool reverse, const Rational& tau, int min_stages = 0);

struct FinalCoordinate {
  int stage;  // 0 when the coordinate is never touched
  Rational value;

  friend bool operator==(const FinalCoordinate&, const FinalCoordinate&) = default;
};

/// Coordinate j of h(p), exactly. Coordinate n_k is never touched after stage
/// k. Throws HorizonExceeded if j is not settled within the listed stages.
FinalCoordinate final_coordinate(const Schedule& s, const PointRep& p, int j);

/// Least K such that coordinates 1..limit of the stage-K partial are final.
/// Extends `s` as needed; throws HorizonExceeded past `horizon` stages.
int finalizing_stage_count(Schedule& s, int limit, int horizon);

/// f_n^{n+1} o ... o f_1^2 (p) with the first-attempt twist.
PointRep first_attempt_partial(const PointRep& p, int n);

}  // namespace hcube
