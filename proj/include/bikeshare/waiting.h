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

// Removing idle time from schedules with a waiting matrix D.

#ifndef BIKESHARE_WAITING_H_
#define BIKESHARE_WAITING_H_

#include "bikeshare/model.h"

namespace bikeshare {

inline constexpr int kNoSwitch = -1;

// S(i, j) = the agent who rode bike M(i, j) in column j - 1 when agent i
// picks it up from someone else at column j, otherwise kNoSwitch.
using SwitchMatrix = Grid<int>;

// Throws InvalidArgumentError when the matrix breaks bike continuity or the
// single-rider rule.
SwitchMatrix ComputeSwitchMatrix(const ScheduleMatrix& matrix);

// The amount d by which D(i0, j0) can shrink: the wait itself, capped by the
// slack of every pickup agent i0 makes at columns j >= j0.
Rational RemovableWait(const Schedule& schedule,
                       const ProblemInstance& instance, int agent, int column);

// Lowers D(agent, column) by RemovableWait. Requires a feasible schedule in
// standard form with a positive entry at (agent, column); throws
// PreconditionError otherwise.
Schedule RemoveOneWait(const Schedule& schedule,
                       const ProblemInstance& instance, int agent, int column);

struct WaitRemovalResult {
  Schedule schedule;
  int steps = 0;
};

// Repeats Standardize and RemoveOneWait on the first positive entry (row
// major) until no wait is left. The result has no waiting matrix. Throws
// InternalError if the step budget runs out.
WaitRemovalResult RemoveAllWaits(const Schedule& schedule,
                                 const ProblemInstance& instance);

}  // namespace bikeshare

#endif  // BIKESHARE_WAITING_H_
