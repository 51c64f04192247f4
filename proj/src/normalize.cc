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

#include "bikeshare/normalize.h"

#include <string>
#include <utility>
#include <vector>

#include "bikeshare/errors.h"
#include "bikeshare/lp.h"

namespace bikeshare {
namespace {

bool ColumnHasWait(const std::optional<WaitMatrix>& waits, int j) {
  if (!waits) return false;
  for (int i = 0; i < waits->rows(); ++i) {
    if ((*waits)(i, j).Sign() > 0) return true;
  }
  return false;
}

bool IsRemovableZeroColumn(const Schedule& schedule, int j) {
  return schedule.partition()[j].IsZero() &&
         !ColumnHasWait(schedule.waits(), j);
}

}  // namespace

StandardizeResult Standardize(const Schedule& schedule,
                              const ProblemInstance& instance) {
  const int m = schedule.agents();
  const int n = schedule.size();
  if (m != instance.agents()) {
    throw InvalidArgumentError("schedule rows differ from agent count");
  }
  if (!CheckFeasible(schedule, instance).ok()) {
    throw InvalidArgumentError("cannot standardize an infeasible schedule");
  }
  const bool has_waits = schedule.waits().has_value();

  // Working copies; swaps rewrite the not-yet-visited suffix in place.
  std::vector<std::vector<int>> labels = schedule.matrix().ToRows();
  std::optional<WaitMatrix> waits = schedule.waits();

  StandardFormReport report;
  std::vector<std::vector<int>> kept_cols;
  std::vector<Rational> kept_x;
  std::vector<std::vector<Rational>> kept_waits;
  std::vector<Rational> t(m);  // arrival times at the end of the last kept

  auto advance = [&](int j) {
    for (int i = 0; i < m; ++i) {
      t[i] += instance.InverseSpeed(labels[i][j]) * schedule.partition()[j];
      if (has_waits) t[i] += (*waits)(i, j);
    }
  };

  for (int j = 0; j < n; ++j) {
    const Rational& xj = schedule.partition()[j];
    if (xj.IsZero() && !ColumnHasWait(waits, j)) {
      ++report.zero_columns_removed;
      continue;
    }
    if (!kept_cols.empty()) {
      const std::vector<int>& last = kept_cols.back();
      int i = 0;
      while (i < m) {
        const int label = labels[i][j];
        if (label == kWalk || label == last[i]) {
          ++i;
          continue;
        }
        int dropper = -1;
        for (int k = 0; k < m; ++k) {
          if (last[k] == label) {
            dropper = k;
            break;
          }
        }
        if (dropper < 0) {
          throw InvalidArgumentError("bike " + std::to_string(label) +
                                     " appears without a previous rider");
        }
        if (t[i] == t[dropper]) {
          std::swap(labels[i], labels[dropper]);
          // Columns before j are already copied out, so swapping whole rows
          // only affects the suffix.
          if (has_waits) {
            for (int c = j; c < n; ++c) {
              std::swap((*waits)(i, c), (*waits)(dropper, c));
            }
          }
          ++report.swap_switches_resolved;
        } else {
          ++i;
        }
      }
    }

    std::vector<int> col(m);
    for (int i = 0; i < m; ++i) col[i] = labels[i][j];
    std::vector<Rational> wcol(m);
    if (has_waits) {
      for (int i = 0; i < m; ++i) wcol[i] = (*waits)(i, j);
    }
    if (!kept_cols.empty() && kept_cols.back() == col) {
      kept_x.back() += xj;
      for (int i = 0; i < m; ++i) kept_waits.back()[i] += wcol[i];
      ++report.redundant_columns_merged;
    } else {
      kept_cols.push_back(std::move(col));
      kept_x.push_back(xj);
      kept_waits.push_back(std::move(wcol));
    }
    advance(j);
  }

  const int kept = static_cast<int>(kept_cols.size());
  ScheduleMatrix matrix = ScheduleMatrix::FromColumns(m, kept_cols);
  std::optional<WaitMatrix> out_waits;
  if (has_waits) {
    out_waits = WaitMatrix(m, kept);
    for (int j = 0; j < kept; ++j) {
      for (int i = 0; i < m; ++i) (*out_waits)(i, j) = kept_waits[j][i];
    }
  }
  return {Schedule(PartitionVector(std::move(kept_x)), std::move(matrix),
                   std::move(out_waits)),
          report};
}

int CountSwapSwitches(const Schedule& schedule,
                      const ProblemInstance& instance) {
  const ScheduleMatrix& matrix = schedule.matrix();
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  int count = 0;
  for (int j = 1; j < matrix.cols(); ++j) {
    for (int i = 0; i < matrix.rows(); ++i) {
      const int label = matrix(i, j);
      if (label == kWalk || label == matrix(i, j - 1)) continue;
      const int dropper = matrix.RiderOf(label, j - 1);
      if (dropper >= 0 &&
          profile.partial(i, j - 1) == profile.partial(dropper, j - 1)) {
        ++count;
      }
    }
  }
  return count;
}

bool IsStandardForm(const Schedule& schedule,
                    const ProblemInstance& instance) {
  const ScheduleMatrix& matrix = schedule.matrix();
  for (int j = 0; j < matrix.cols(); ++j) {
    if (IsRemovableZeroColumn(schedule, j)) return false;
    if (j > 0 && matrix.Column(j) == matrix.Column(j - 1)) return false;
  }
  return CountSwapSwitches(schedule, instance) == 0;
}

int CountPickupSwitches(const ScheduleMatrix& matrix) {
  int count = 0;
  for (int j = 1; j < matrix.cols(); ++j) {
    for (int i = 0; i < matrix.rows(); ++i) {
      const int label = matrix(i, j);
      if (label != kWalk && matrix(i, j - 1) != label) ++count;
    }
  }
  return count;
}

ReduceResult Reduce(const ScheduleMatrix& matrix,
                    const ProblemInstance& instance) {
  PartitionSolution lp = SolvePartition(matrix, instance);
  Schedule current(lp.partition, matrix);
  ReduceResult result{current, lp.makespan, 0};
  for (;;) {
    StandardizeResult standard = Standardize(current, instance);
    if (!standard.report.changed()) break;
    const ScheduleMatrix& next = standard.schedule.matrix();
    const std::pair<int, int> before(current.size(),
                                     CountPickupSwitches(current.matrix()));
    const std::pair<int, int> after(next.cols(), CountPickupSwitches(next));
    if (!(after < before)) {
      throw InternalError("reduce made no progress at size " +
                          std::to_string(before.first));
    }
    lp = SolvePartition(next, instance);
    if (lp.makespan > result.makespan) {
      throw InternalError("reduce increased the makespan");
    }
    current = Schedule(lp.partition, next);
    result.makespan = lp.makespan;
    ++result.iterations;
  }
  if (current.size() > instance.agents()) {
    throw InternalError("reduced schedule has " +
                        std::to_string(current.size()) + " columns for " +
                        std::to_string(instance.agents()) + " agents");
  }
  result.schedule = std::move(current);
  return result;
}

}  // namespace bikeshare
