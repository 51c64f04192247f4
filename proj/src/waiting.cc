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

#include "bikeshare/waiting.h"

#include <string>

#include "bikeshare/errors.h"
#include "bikeshare/normalize.h"

namespace bikeshare {

SwitchMatrix ComputeSwitchMatrix(const ScheduleMatrix& matrix) {
  const FeasibilityReport structure = CheckStructure(matrix);
  if (!structure.ok()) {
    throw InvalidArgumentError("malformed schedule matrix: " +
                               structure.violations.front().ToString());
  }
  SwitchMatrix s(matrix.rows(), matrix.cols(), kNoSwitch);
  for (int j = 1; j < matrix.cols(); ++j) {
    for (int i = 0; i < matrix.rows(); ++i) {
      const int label = matrix(i, j);
      if (label == kWalk) continue;
      const int previous = matrix.RiderOf(label, j - 1);
      if (previous != i) s(i, j) = previous;
    }
  }
  return s;
}

Rational RemovableWait(const Schedule& schedule,
                       const ProblemInstance& instance, int agent,
                       int column) {
  if (!schedule.waits()) throw PreconditionError("schedule has no waits");
  Rational d = (*schedule.waits())(agent, column);
  const SwitchMatrix s = ComputeSwitchMatrix(schedule.matrix());
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  for (int j = std::max(column, 1); j < schedule.size(); ++j) {
    const int dropper = s(agent, j);
    if (dropper == kNoSwitch) continue;
    const Rational slack =
        profile.partial(agent, j - 1) - profile.partial(dropper, j - 1);
    if (slack < d) d = slack;
  }
  return d;
}

Schedule RemoveOneWait(const Schedule& schedule,
                       const ProblemInstance& instance, int agent,
                       int column) {
  if (!schedule.waits() || agent < 0 || agent >= schedule.agents() ||
      column < 0 || column >= schedule.size() ||
      (*schedule.waits())(agent, column).Sign() <= 0) {
    throw PreconditionError("no positive wait at the requested entry");
  }
  if (!CheckFeasible(schedule, instance).ok()) {
    throw PreconditionError("schedule is infeasible");
  }
  if (!IsStandardForm(schedule, instance)) {
    throw PreconditionError("schedule is not in standard form");
  }
  const Rational d = RemovableWait(schedule, instance, agent, column);
  if (d.Sign() <= 0) {
    throw InternalError("no removable wait in a standard-form schedule");
  }
  WaitMatrix waits = *schedule.waits();
  waits(agent, column) -= d;
  return Schedule(schedule.partition(), schedule.matrix(), std::move(waits));
}

WaitRemovalResult RemoveAllWaits(const Schedule& schedule,
                                 const ProblemInstance& instance) {
  if (!CheckFeasible(schedule, instance).ok()) {
    throw InvalidArgumentError("cannot remove waits from an infeasible "
                               "schedule");
  }
  WaitRemovalResult result{schedule, 0};
  if (!schedule.HasPositiveWait()) return result;

  // Every step either clears a wait entry or turns a pickup into a
  // swap-switch that the next standardization removes, so the number of
  // steps is at most (wait entries) * (pickups + 1) for the input.
  const long budget =
      static_cast<long>(schedule.agents()) * schedule.size() *
          (static_cast<long>(schedule.agents()) * schedule.size() + 1) +
      1;
  Schedule current = schedule;
  while (current.HasPositiveWait()) {
    if (result.steps >= budget) {
      throw InternalError("wait removal did not terminate within " +
                          std::to_string(budget) + " steps");
    }
    current = Standardize(current, instance).schedule;
    const WaitMatrix& waits = *current.waits();
    int agent = -1;
    int column = -1;
    for (int i = 0; i < waits.rows() && agent < 0; ++i) {
      for (int j = 0; j < waits.cols(); ++j) {
        if (waits(i, j).Sign() > 0) {
          agent = i;
          column = j;
          break;
        }
      }
    }
    current = RemoveOneWait(current, instance, agent, column);
    ++result.steps;
  }
  result.schedule = Schedule(current.partition(), current.matrix());
  return result;
}

}  // namespace bikeshare
