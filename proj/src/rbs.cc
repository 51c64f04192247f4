// Copyright 2026 The bikeshare Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bikeshare/rbs.h"

#include <numeric>
#include <string>
#include <vector>

#include "bikeshare/errors.h"

namespace bikeshare {
namespace {

bool FastEnough(const ProblemInstance& instance) {
  return instance.bikes() == 0 || instance.Slowest() <= BoundT(instance);
}

void RequireAllButOneRegion(const ProblemInstance& instance) {
  const int b = instance.bikes();
  if (b < 2 || FastEnough(instance)) {
    throw PreconditionError("AllButOne needs u_b > T(m, U) on " +
                            instance.ToString());
  }
  if (instance.inverse_speeds()[b - 2] > BoundT1(instance).value) {
    throw PreconditionError("AllButOne needs u_{b-1} <= T_1(m, U) on " +
                            instance.ToString());
  }
}

// (m - 1, {u_2, ..., u_{b-1}}): the instance whose table supplies the groups
// after the first interval.
ProblemInstance InnerInstance(const ProblemInstance& instance) {
  const auto& u = instance.inverse_speeds();
  return ProblemInstance(instance.agents() - 1,
                         std::vector<Rational>(u.begin() + 1, u.end() - 1));
}

// Agent layout shared by the unexpanded and expanded AllButOne schedules.
// Interval 0: agents [0, m_q) form the group; agent i >= m_q rides bike
// i + 1 - (m - b). Interval j >= 1: agents [0, m_{q+j-1}) form the group on
// bikes 2..q+j-1; agents [m_{q+j}, m - 1) keep their bikes; agent m - 1
// rides bike 1.
struct Layout {
  int m, b, q;
  int Group(int j) const { return m - b + q + (j == 0 ? 0 : j - 1); }
  int Intervals() const { return b - q + 1; }
  std::vector<int> Tail(int j) const {
    std::vector<int> tail;
    for (int i = Group(j); i < m; ++i) {
      tail.push_back(j > 0 && i == m - 1 ? 1 : i + 1 - (m - b));
    }
    return tail;
  }
};

Layout MakeLayout(const ProblemInstance& instance) {
  return {instance.agents(), instance.bikes(), FindQ(instance)};
}

std::vector<AbandonedBike> AbandonedBikes(const AbandonmentVector& y) {
  std::vector<AbandonedBike> out;
  for (std::size_t k = 0; k < y.y.size(); ++k) {
    if (y.y[k] < Rational(1)) {
      out.push_back({static_cast<int>(k) + 1, y.y[k]});
    }
  }
  return out;
}

Solution Finish(Schedule schedule, const ProblemInstance& instance,
                TightBound tight) {
  Solution solution;
  solution.certificate = MakeCertificate(instance, tight);
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  solution.makespan = profile.makespan;
  if (profile.makespan != solution.certificate.Value()) {
    throw InternalError("makespan " + profile.makespan.ToString() +
                        " misses the bound " +
                        solution.certificate.Value().ToString() + " on " +
                        instance.ToString());
  }
  if ((tight == TightBound::kAverage || tight == TightBound::kAbandonOne) &&
      !profile.AllFinalTimesEqual()) {
    throw InternalError("agents do not arrive together on " +
                        instance.ToString());
  }
  const FeasibilityReport report = CheckFeasible(schedule, instance);
  if (!report.ok()) throw InternalError("infeasible: " + report.ToString());
  solution.abandonment = ComputeAbandonmentVector(schedule, instance);
  solution.abandoned = AbandonedBikes(solution.abandonment);
  if (static_cast<int>(solution.abandoned.size()) >
      instance.abandonment_limit()) {
    throw InternalError("too many bikes abandoned on " + instance.ToString());
  }
  solution.schedule = std::move(schedule);
  return solution;
}

}  // namespace

int FindQ(const ProblemInstance& instance) {
  const int b = instance.bikes();
  if (b == 0) throw PreconditionError("no bikes");
  for (int q = b; q >= 1; --q) {
    if (instance.inverse_speeds()[q - 1] <= BoundT(instance.Prefix(q))) {
      return q;
    }
  }
  throw PreconditionError("no q with u_q <= T(m_q, U_q) on " +
                          instance.ToString());
}

UnexpandedSchedule AllButOneUnexpanded(const ProblemInstance& instance) {
  RequireAllButOneRegion(instance);
  const Layout layout = MakeLayout(instance);
  const int m = layout.m;
  const int n = layout.Intervals();
  const auto& u = instance.inverse_speeds();

  UnexpandedSchedule out{Grid<Rational>(m, n), {{-1, -1}}, {}};
  for (int j = 0; j < n; ++j) {
    const int group = layout.Group(j);
    Rational pace;
    if (j == 0) {
      pace = BoundT(instance.Prefix(layout.q));
    } else {
      // Bikes 2..q+j-1 shared by the group.
      pace = BoundT(group, std::span<const Rational>(u).subspan(
                               1, layout.q + j - 2));
    }
    for (int i = 0; i < group; ++i) out.pace(i, j) = pace;
    const std::vector<int> tail = layout.Tail(j);
    for (int i = group; i < m; ++i) {
      out.pace(i, j) = instance.InverseSpeed(tail[i - group]);
    }
    // The first agent outside the next group catches up with this group.
    if (j > 0) out.sync.push_back({group - 1, layout.Group(j + 1) - 1});
  }
  out.z = CatchUpLengths(out.pace, out.sync);
  return out;
}

RbsSolution AllButOne(const ProblemInstance& instance) {
  RequireAllButOneRegion(instance);
  const Layout layout = MakeLayout(instance);
  const int m = layout.m;
  const int n = layout.Intervals();
  const ProblemInstance one = instance.WithAbandonmentLimit(1);

  const UnexpandedSchedule unexpanded = AllButOneUnexpanded(instance);
  const CrossingBound t1 = BoundT1(instance);
  std::vector<Rational> z;
  const Rational total = std::accumulate(
      unexpanded.z.begin(), unexpanded.z.end(), Rational());
  for (const Rational& zj : unexpanded.z) z.push_back(zj / total);
  if (z.front() != t1.y_star) {
    throw InternalError("first interval " + z.front().ToString() +
                        " differs from y* = " + t1.y_star.ToString());
  }

  std::vector<NestedColumn> columns;
  columns.push_back({AllMakeItStar(instance.Prefix(layout.q)),
                     layout.Tail(0)});
  if (n > 1) {
    // Entry k of the inner table has m - b + 1 + k agents on bikes 2..k+1.
    const AllMakeItTable inner = AllMakeItStarTable(InnerInstance(instance));
    std::vector<int> shift(layout.b);
    std::iota(shift.begin(), shift.end(), 1);
    shift[0] = kWalk;
    for (int j = 1; j < n; ++j) {
      const Schedule& entry = inner.entries[layout.q + j - 2];
      Schedule block(entry.partition(), Relabel(entry.matrix(), shift));
      columns.push_back({std::move(block), layout.Tail(j)});
    }
  }
  Schedule schedule(ExpandPartition(z, columns), Expand(m, columns));
  return Finish(std::move(schedule), one, TightBound::kAbandonOne);
}

int FindKRbs(const ProblemInstance& instance) {
  const int m = instance.agents();
  const int b = instance.bikes();
  if (b < 2 || FastEnough(instance) ||
      instance.inverse_speeds()[b - 2] <= BoundT1(instance).value) {
    throw PreconditionError("FindKRbs needs u_b > T and u_{b-1} > T_1 on " +
                            instance.ToString());
  }
  const auto& u = instance.inverse_speeds();
  for (int k = 1; k <= b - 2; ++k) {
    std::vector<Rational> sub(u.begin(), u.begin() + (b - k - 1));
    sub.push_back(u.back());
    const Rational t1 = BoundT1(ProblemInstance(m - k, sub)).value;
    if (u[b - k - 2] <= t1 && t1 <= u[b - 2]) return k;
  }
  throw InternalError("no split found for " + instance.ToString());
}

RbsSolution SolveRbs(const ProblemInstance& instance) {
  const int limit = instance.abandonment_limit();
  if (limit >= 2) {
    throw UnsupportedError("unsupported abandonment limit " +
                           std::to_string(limit) + " (only 0 and 1 are solved)");
  }
  if (limit == 0) return SolveBs(instance);

  const int m = instance.agents();
  const int b = instance.bikes();
  if (FastEnough(instance)) {
    return Finish(AllMakeItStar(instance), instance, TightBound::kAverage);
  }
  const auto& u = instance.inverse_speeds();
  if (u[b - 2] <= BoundT1(instance).value) {
    RbsSolution solution = AllButOne(instance);
    return solution;
  }

  const int k = FindKRbs(instance);
  std::vector<Rational> sub_speeds(u.begin(), u.begin() + (b - k - 1));
  sub_speeds.push_back(u.back());
  const ProblemInstance sub(m - k, sub_speeds, 1);
  const RbsSolution top = AllButOne(sub);
  // Sub-bike b - k is the slowest bike b; the others keep their numbers.
  std::vector<int> rename(b - k + 1);
  std::iota(rename.begin(), rename.end(), 0);
  rename[b - k] = b;
  Schedule renamed(top.schedule.partition(),
                   Relabel(top.schedule.matrix(), rename));
  std::vector<int> solo;
  for (int label = b - k; label <= b - 1; ++label) solo.push_back(label);
  return Finish(StackSoloRiders(renamed, solo), instance,
                TightBound::kSecondSlowestBike);
}

}  // namespace bikeshare
