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

// The partition LP of a fixed schedule matrix M over variables (x_1..x_n, tau):
//
//   minimize   tau
//   subject to tau >= t_i(x)                     for every agent i
//              t_{i,j-1}(x) >= t_{i',j-1}(x)     for every pickup of i from i'
//              x >= 0, sum_j x_j = 1
//
// Solved exactly over the rationals by primal simplex on the dual program,
// with Bland's rule. The returned point is a vertex of the feasible region.

#ifndef BIKESHARE_LP_H_
#define BIKESHARE_LP_H_

#include <functional>
#include <vector>

#include "bikeshare/model.h"
#include "bikeshare/rational.h"

namespace bikeshare {

// A constraint  sum_j coeffs[j] x_j + tau_coeff * tau >= 0.
struct LPRow {
  enum class Kind { kMakespan, kSwitch };

  Kind kind;
  std::vector<Rational> coeffs;
  int tau_coeff;  // 1 for makespan rows, 0 for switch rows
  int agent;      // makespan row: the agent; switch row: the picker
  int dropper = -1;
  int column = -1;  // switch row: column where the pickup happens
};

class PartitionLP {
 public:
  // Throws InvalidArgumentError when `matrix` breaks bike continuity or the
  // single-rider rule, has the wrong number of rows, or uses unknown labels.
  PartitionLP(const ScheduleMatrix& matrix, const ProblemInstance& instance);

  int num_columns() const { return num_columns_; }
  const std::vector<LPRow>& rows() const { return rows_; }
  int num_makespan_rows() const { return num_makespan_rows_; }
  int num_switch_rows() const {
    return static_cast<int>(rows_.size()) - num_makespan_rows_;
  }

  Rational Evaluate(const LPRow& row, const std::vector<Rational>& x,
                    const Rational& tau) const;

  // Every constraint holds exactly, including x >= 0 and sum x = 1.
  bool IsFeasible(const std::vector<Rational>& x, const Rational& tau) const;

  // Rank of the tight constraints at (x, tau). The sum constraint is always
  // counted; x_j >= 0 and tau >= 0 count when they hold with equality.
  int TightRank(const std::vector<Rational>& x, const Rational& tau) const;

  // Feasible with n + 1 linearly independent tight constraints.
  bool IsVertex(const std::vector<Rational>& x, const Rational& tau) const;

 private:
  int num_columns_;
  int num_makespan_rows_;
  std::vector<LPRow> rows_;
};

struct PartitionSolution {
  PartitionVector partition;
  Rational makespan;
};

PartitionSolution SolvePartitionLP(const PartitionLP& lp);
PartitionSolution SolvePartition(const ScheduleMatrix& matrix,
                                 const ProblemInstance& instance);

// While alive, every SolvePartitionLP call on this thread reports its LP and
// result to `callback`. Observers nest; the innermost one receives calls.
class ScopedSolveObserver {
 public:
  using Callback =
      std::function<void(const PartitionLP&, const PartitionSolution&)>;

  explicit ScopedSolveObserver(Callback callback);
  ~ScopedSolveObserver();
  ScopedSolveObserver(const ScopedSolveObserver&) = delete;
  ScopedSolveObserver& operator=(const ScopedSolveObserver&) = delete;

 private:
  Callback callback_;
  ScopedSolveObserver* previous_;

  friend PartitionSolution SolvePartitionLP(const PartitionLP& lp);
};

}  // namespace bikeshare

#endif  // BIKESHARE_LP_H_
