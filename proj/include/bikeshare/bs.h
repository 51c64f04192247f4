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

// Optimal schedules when every bike has to reach the end.
//
// The construction gets the m - b walkers ahead as one synchronized group
// (phase 1), then lets the bikers catch up one at a time, fastest bike first.
// Each caught-up biker joins the group together with its bike, and the group
// then travels by recursively sharing its bikes (phase 2).

#ifndef BIKESHARE_BS_H_
#define BIKESHARE_BS_H_

#include <utility>
#include <vector>

#include "bikeshare/model.h"
#include "bikeshare/rational.h"

namespace bikeshare {

// One column of a two-level matrix: a synchronized group occupying the top
// rows runs `block` (scaled to the column's length) while the rows below keep
// the fixed labels in `tail`. A plain column has an empty 0-row block with a
// single unit-length column.
struct NestedColumn {
  Schedule block;
  std::vector<int> tail;

  static NestedColumn Plain(std::vector<int> labels);
};

// Replaces every nested column by its block's columns, each extended with the
// column's tail. Throws InvalidArgumentError on inconsistent shapes.
ScheduleMatrix Expand(int rows, const std::vector<NestedColumn>& columns);

// Partition of the expanded matrix: z_j times the j-th block's partition,
// concatenated.
PartitionVector ExpandPartition(const std::vector<Rational>& z,
                                const std::vector<NestedColumn>& columns);

// Renames labels through `map` (map[old] = new, map[0] must be 0).
ScheduleMatrix Relabel(const ScheduleMatrix& matrix,
                       const std::vector<int>& map);

// Interval lengths of a schedule where each synchronized group is replaced by
// its average pace. `sync[j]` for j >= 1 is the (leader, catcher) pair of
// agents that reach the end of interval j together.
struct UnexpandedSchedule {
  Grid<Rational> pace;  // m x n inverse speeds
  std::vector<std::pair<int, int>> sync;
  std::vector<Rational> z;  // not normalized
};

// z_0 = 1 and, for j >= 1, the z_j making catcher and leader arrive at the
// end of interval j together. A zero denominator with a zero numerator gives
// z_j = 0. With a nonzero numerator the gap can never close, so every
// earlier length becomes 0 and z_j = 1. A negative z_j throws
// PreconditionError.
std::vector<Rational> CatchUpLengths(
    const Grid<Rational>& pace, const std::vector<std::pair<int, int>>& sync);

// t'(i, j) = sum_{p <= j} pace(i, p) z_p.
Grid<Rational> UnexpandedTimes(const UnexpandedSchedule& schedule);

// Every sync pair arrives together at the end of its interval.
bool IsValidUnexpanded(const UnexpandedSchedule& schedule);

// The unexpanded m x m schedule of the reference construction. Requires
// b >= 1 and u_b <= T(m, U).
UnexpandedSchedule UnexpandedPartition(const ProblemInstance& instance);

// Reference construction with explicit recursion. The partition comes from
// the catch-up lengths, and one LP solve on the expanded matrix must
// reproduce the same makespan. Exponential size; meant for small b.
// Requires b == 0 or u_b <= T(m, U).
Schedule AllMakeItReference(const ProblemInstance& instance);

// Column count of AllMakeItReference without building it.
long ReferenceSize(int agents, int bikes);

// Polynomial construction: the same recursion, computed bottom-up over the
// b + 1 distinct subproblems (m - b + k agents, bikes 1..k), with each entry
// reduced to at most m - b + k columns.
struct AllMakeItTable {
  std::vector<Schedule> entries;  // entries[k] solves (m_k, U_k)
  int max_intermediate_size = 0;  // largest matrix before a reduction
};

AllMakeItTable AllMakeItStarTable(const ProblemInstance& instance);
Schedule AllMakeItStar(const ProblemInstance& instance);

// Smallest k in [1, b-1] with u_{b-k} <= T(m-k, U_{b-k}). Requires
// u_b > T(m, U).
int FindKSlow(const ProblemInstance& instance);

// k agents riding k bikes alone below `top`: columns of `top` are kept and
// each extra row repeats its label.
Schedule StackSoloRiders(const Schedule& top,
                         const std::vector<int>& solo_labels);

struct AbandonedBike {
  int bike;
  Rational position;

  friend bool operator==(const AbandonedBike&, const AbandonedBike&) = default;
};

struct Solution {
  Schedule schedule;
  Rational makespan;
  BoundCertificate certificate;
  AbandonmentVector abandonment;
  std::vector<AbandonedBike> abandoned;
};

// The certificate fields for `instance`, tagged with `tight`.
BoundCertificate MakeCertificate(const ProblemInstance& instance,
                                 TightBound tight);

// Optimal BS schedule with makespan max(u_b, T(m, U)). The result is checked
// for feasibility, bike delivery and the certified makespan; a failure
// throws InternalError.
Solution SolveBs(const ProblemInstance& instance);

}  // namespace bikeshare

#endif  // BIKESHARE_BS_H_
