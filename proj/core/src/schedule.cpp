#include "hcube/schedule.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hcube/error.hpp"
#include "hcube/twist.hpp"

namespace hcube {

namespace {

// Hard stop for on-demand extension; any tau reachable at desk scale needs
// far fewer stages.
constexpr int kMaxStages = 4096;

Rational pow8(int k) { return pow2(3L * k); }

}  // namespace

std::vector<int> IndexStream::take(int count) const {
  std::vector<int> out;
  for (int j : explicit_indices) {
    if (static_cast<int>(out.size()) >= count) return out;
    out.push_back(j);
  }
  if (arithmetic_from) {
    for (int j = *arithmetic_from; static_cast<int>(out.size()) < count; ++j) out.push_back(j);
  }
  return out;
}

IndexStream boundary_index_sequence(const BoundaryProfile& profile) {
  IndexStream s;
  s.explicit_indices = profile.explicit_indices;
  if (profile.tail_is_boundary) s.arithmetic_from = profile.tail_start;
  return s;
}

IndexStream boundary_index_sequence(const PointRep& p) { return boundary_index_sequence(classify_point(p)); }

Rational stage_budget(int k) { return 3 * pow2(-(k + 3)); }

Schedule build_schedule(const BoundaryProfile& profile, int count) {
  Schedule s;
  s.source_profile = profile;
  const IndexStream stream = boundary_index_sequence(profile);
  if (stream.empty()) {
    s.open_ended = false;
    return s;
  }

  std::size_t next_explicit = 0;
  int next_arith = stream.arithmetic_from.value_or(0);
  auto head = [&]() -> std::optional<int> {
    if (next_explicit < stream.explicit_indices.size()) return stream.explicit_indices[next_explicit];
    if (stream.arithmetic_from) return next_arith;
    return std::nullopt;
  };
  auto advance = [&]() {
    if (next_explicit < stream.explicit_indices.size()) {
      ++next_explicit;
    } else {
      ++next_arith;
    }
  };

  std::set<int> pending_m;
  int last_m = 0;
  for (int k = 1; k <= count; ++k) {
    // n_k = min({m_1..m_{k-1}} u J  minus  {n_1..n_{k-1}})
    const std::optional<int> j = head();
    int n = 0;
    if (j && (pending_m.empty() || *j <= *pending_m.begin())) {
      n = *j;
    } else {
      n = *pending_m.begin();
    }
    if (j && *j == n) advance();
    pending_m.erase(n);

    int m = std::max({last_m + 1, n + 1, 4 * k});
    m = (m + 3) / 4 * 4;

    s.stages.push_back({n, m});
    s.budget.push_back(stage_budget(k - 1));
    pending_m.insert(m);
    last_m = m;
  }
  return s;
}

Schedule build_schedule(const PointRep& p, int count) { return build_schedule(classify_point(p), count); }

Schedule custom_schedule(std::vector<Stage> stages) {
  Schedule s;
  s.stages = std::move(stages);
  for (int k = 0; k < s.size(); ++k) s.budget.push_back(stage_budget(k));
  return s;
}

Schedule extend_schedule(const Schedule& s, int count) {
  if (count <= s.size() || !s.open_ended) return s;
  if (!s.extendable()) {
    throw Error(ErrorCode::HorizonExceeded,
                "schedule has " + std::to_string(s.size()) + " stages and cannot be extended to " +
                    std::to_string(count));
  }
  if (count > kMaxStages) {
    throw Error(ErrorCode::HorizonExceeded, "more than " + std::to_string(kMaxStages) + " stages requested");
  }
  return build_schedule(*s.source_profile, count);
}

bool schedule_budget_ok(const Schedule& s) {
  for (int k = 1; k <= s.size(); ++k) {
    const Stage& st = s.stages[static_cast<std::size_t>(k - 1)];
    if (st.n < 1 || st.m <= st.n || st.m % 4 != 0) return false;
    if (k > 1) {
      const Stage& prev = s.stages[static_cast<std::size_t>(k - 2)];
      if (st.n <= prev.n || st.m <= prev.m) return false;
    }
    const Rational eps =
        k <= static_cast<int>(s.budget.size()) ? s.budget[static_cast<std::size_t>(k - 1)] : stage_budget(k - 1);
    long log_ratio = 0;
    if (eps <= 0 || !exact_log2(Rational(3 / eps), log_ratio)) return false;
    if (st.m < log_ratio + 3L * (k - 1) + 1) return false;
  }
  return true;
}

namespace {

// m-value the continuation is measured from: the last listed m, but never
// below 4 * (listed stage count).
int continuation_base(const Schedule& s) {
  const int last_m = s.stages.empty() ? 0 : s.stages.back().m;
  return std::max(last_m, 4 * s.size());
}

}  // namespace

Rational forward_tail_bound(const Schedule& s, int stage_count) {
  if (stage_count < 0) throw Error(ErrorCode::BadIndices, "negative stage count");
  Rational sum(0);
  for (int k = stage_count + 1; k <= s.size(); ++k) sum += 3 * pow2(-s.stages[static_cast<std::size_t>(k - 1)].m);
  if (!s.open_ended) return sum;

  // Unlisted stages k = size + j have m_k >= base + 4j:
  // sum_{j > skip} 3 * 2^-(base + 4j) = (1/5) 2^-(base + 4 skip).
  const int skip = std::max(stage_count - s.size(), 0);
  sum += Rational(1, 5) * pow2(-(continuation_base(s) + 4L * skip));
  return sum;
}

Rational reverse_tail_bound(const Schedule& s, int stage_count) {
  if (stage_count < 0) throw Error(ErrorCode::BadIndices, "negative stage count");
  Rational sum(0);
  for (int k = stage_count + 1; k <= s.size(); ++k) {
    sum += pow8(k - 1) * 3 * pow2(-s.stages[static_cast<std::size_t>(k - 1)].m);
  }
  if (!s.open_ended) return sum;

  // 8^(size + j - 1) * 3 * 2^-(base + 4j) = 3 * 2^(3(size-1) - base) * 2^-j
  const int skip = std::max(stage_count - s.size(), 0);
  sum += 3 * pow2(3L * (s.size() - 1) - continuation_base(s) - skip);
  return sum;
}

PointRep forward_partial_eval(const Schedule& s, const PointRep& p, int stage_count) {
  if (stage_count < 0 || stage_count > s.size()) {
    throw Error(ErrorCode::HorizonExceeded,
                "stage " + std::to_string(stage_count) + " requested, " + std::to_string(s.size()) + " listed");
  }
  PointRep x = p;
  for (int k = 0; k < stage_count; ++k) {
    const Stage& st = s.stages[static_cast<std::size_t>(k)];
    x = twist_cell_apply(CellMap::phi_cubed(st.n, st.m), x);
  }
  return x;
}

PointRep reverse_partial_eval(const Schedule& s, const PointRep& y, int stage_count) {
  if (stage_count < 0 || stage_count > s.size()) {
    throw Error(ErrorCode::HorizonExceeded,
                "stage " + std::to_string(stage_count) + " requested, " + std::to_string(s.size()) + " listed");
  }
  PointRep x = y;
  for (int k = stage_count; k >= 1; --k) {
    const Stage& st = s.stages[static_cast<std::size_t>(k - 1)];
    x = twist_cell_apply(CellMap::psi_cubed(st.n, st.m), x);
  }
  return x;
}

int least_stage_below(Schedule& s, bool reverse, const Rational& tau, int min_stages) {
  if (tau <= 0) throw Error(ErrorCode::OutOfRange, "tau must be positive");
  for (int stage = std::max(min_stages, 0); stage <= kMaxStages; ++stage) {
    if (stage > s.size()) s = extend_schedule(s, std::max(stage, 2 * s.size()));
    const Rational bound = reverse ? reverse_tail_bound(s, stage) : forward_tail_bound(s, stage);
    if (bound < tau) return stage;
  }
  throw Error(ErrorCode::HorizonExceeded, "no stage count meets tau " + to_string(tau));
}

CertifiedPoint h_eval(const Schedule& s, const PointRep& x, const Rational& tau) {
  Schedule work = s;
  const int stage = least_stage_below(work, false, tau);
  return CertifiedPoint{forward_partial_eval(work, x, stage), forward_tail_bound(work, stage), stage, pow8(stage)};
}

CertifiedPoint h_inverse_eval(const Schedule& s, const PointRep& y, const Rational& tau) {
  Schedule work = s;
  const int stage = least_stage_below(work, true, tau);
  return CertifiedPoint{reverse_partial_eval(work, y, stage), reverse_tail_bound(work, stage), stage, pow8(stage)};
}

FinalCoordinate final_coordinate(const Schedule& s, const PointRep& p, int j) {
  if (j < 1) throw Error(ErrorCode::BadIndices, "coordinate index must be >= 1");
  for (int k = 1; k <= s.size(); ++k) {
    if (s.stages[static_cast<std::size_t>(k - 1)].n == j) return {k, forward_partial_eval(s, p, k).coord(j)};
  }

  auto pending = [&](const char* why) {
    return Error(ErrorCode::HorizonExceeded,
                 "coordinate " + std::to_string(j) + " " + why + " within " + std::to_string(s.size()) + " stages");
  };
  if (!s.open_ended) return {0, p.coord(j)};
  if (!s.source_profile) throw pending("cannot be certified for a hand-built schedule");
  for (const Stage& st : s.stages) {
    if (st.m == j) throw pending("is twisted but not yet finalized");
  }
  const IndexStream stream = boundary_index_sequence(*s.source_profile);
  const bool in_stream = std::find(stream.explicit_indices.begin(), stream.explicit_indices.end(), j) !=
                             stream.explicit_indices.end() ||
                         (stream.arithmetic_from && j >= *stream.arithmetic_from);
  if (in_stream) throw pending("is a boundary index not yet scheduled");
  const int last_m = s.stages.empty() ? 0 : s.stages.back().m;
  if (j % 4 == 0 && j > last_m) throw pending("may still be chosen as a twist partner");
  return {0, p.coord(j)};
}

int finalizing_stage_count(Schedule& s, int limit, int horizon) {
  if (!s.open_ended) return 0;
  for (int k = 0;; ++k) {
    if (k > horizon) {
      throw Error(ErrorCode::HorizonExceeded, "coordinates 1.." + std::to_string(limit) + " need more than " +
                                                  std::to_string(horizon) + " stages");
    }
    if (k + 1 > s.size()) s = extend_schedule(s, std::max(k + 1, 2 * s.size()));
    if (s.stages[static_cast<std::size_t>(k)].n > limit) return k;
  }
}

PointRep first_attempt_partial(const PointRep& p, int n) {
  PointRep x = p;
  for (int k = 1; k <= n; ++k) x = twist_cell_apply(CellMap::first_attempt(k, k + 1), x);
  return x;
}

}  // namespace hcube
