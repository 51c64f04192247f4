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

// Standard form and size reduction of schedules.
//
// A schedule is in standard form when it has no zero-length columns, no two
// consecutive identical columns, and no swap-switch (a pickup where dropper
// and picker reach the column boundary at the same time).

#ifndef BIKESHARE_NORMALIZE_H_
#define BIKESHARE_NORMALIZE_H_

#include "bikeshare/model.h"
#include "bikeshare/rational.h"

namespace bikeshare {

struct StandardFormReport {
  int zero_columns_removed = 0;
  int redundant_columns_merged = 0;
  int swap_switches_resolved = 0;

  bool changed() const {
    return zero_columns_removed + redundant_columns_merged +
               swap_switches_resolved >
           0;
  }
};

struct StandardizeResult {
  Schedule schedule;
  StandardFormReport report;
};

// Single left-to-right pass: drops zero columns, merges a column into the
// previous kept one when they are identical, and resolves swap-switches by
// exchanging the two agents' remaining rows. Waits travel with their columns
// (summed on merge, exchanged on swap). A zero-length column that carries a
// positive wait is kept, since dropping it can move a wait across a bike
// handover. Completion times and feasibility are preserved.
StandardizeResult Standardize(const Schedule& schedule,
                              const ProblemInstance& instance);

// Pickup-switches with equal dropper and picker arrival times.
int CountSwapSwitches(const Schedule& schedule,
                      const ProblemInstance& instance);

bool IsStandardForm(const Schedule& schedule, const ProblemInstance& instance);

// Number of pickup-switches in a matrix (the switch rows of its LP).
int CountPickupSwitches(const ScheduleMatrix& matrix);

struct ReduceResult {
  Schedule schedule;
  Rational makespan;
  int iterations = 0;
};

// Alternates LP solves and Standardize until the LP vertex is already in
// standard form. The result has at most m columns and a makespan no larger
// than the LP optimum of the input matrix. Throws InternalError if an
// iteration fails to shrink (size, pickup count) lexicographically or the
// final size exceeds m.
ReduceResult Reduce(const ScheduleMatrix& matrix,
                    const ProblemInstance& instance);

}  // namespace bikeshare

#endif  // BIKESHARE_NORMALIZE_H_
