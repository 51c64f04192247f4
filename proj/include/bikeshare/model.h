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

// Core types for bike sharing schedules.
//
// m agents and b bikes start at 0 and travel to 1. Agents walk at speed one;
// bike k has inverse speed u_k < 1. A schedule is a partition of [0,1] into n
// consecutive intervals (the partition vector) together with an m x n matrix
// of bike labels, where label 0 means the agent walks that interval. Agent and
// column indices are zero based throughout the API.

#ifndef BIKESHARE_MODEL_H_
#define BIKESHARE_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bikeshare/rational.h"

namespace bikeshare {

inline constexpr int kWalk = 0;

// Dense row-major m x n grid.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols),
        cells_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const T& operator()(int i, int j) const { return cells_[Index(i, j)]; }
  T& operator()(int i, int j) { return cells_[Index(i, j)]; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> cells_;
};

// The pair (m, U): agent count plus the sorted multiset of inverse bike
// speeds. Bike labels 1..b index the sorted list, so bike 1 is the fastest.
class ProblemInstance {
 public:
  // Sorts `inverse_speeds`. Throws InvalidArgumentError unless m >= 1,
  // 0 <= b <= m, every 0 < u_k < 1 and the abandonment limit is >= 0.
  ProblemInstance(int agents, std::vector<Rational> inverse_speeds,
                  int abandonment_limit = 0);

  // Same, from bike speeds v_k > 1 (u_k = 1 / v_k).
  static ProblemInstance FromSpeeds(int agents, std::vector<Rational> speeds,
                                    int abandonment_limit = 0);

  int agents() const { return agents_; }
  int bikes() const { return static_cast<int>(inverse_speeds_.size()); }
  int abandonment_limit() const { return abandonment_limit_; }
  const std::vector<Rational>& inverse_speeds() const {
    return inverse_speeds_;
  }

  // Inverse speed of a label; walking (label 0) has inverse speed one.
  const Rational& InverseSpeed(int label) const;
  const Rational& Slowest() const { return inverse_speeds_.back(); }

  // m_k = m - b + k, the agent count of the k-bike subproblem.
  int PrefixAgents(int k) const { return agents_ - bikes() + k; }
  // (m_k, U_k). Requires m_k >= 1.
  ProblemInstance Prefix(int k) const;

  ProblemInstance WithAbandonmentLimit(int limit) const;

  std::string ToString() const;

 private:
  int agents_;
  std::vector<Rational> inverse_speeds_;
  int abandonment_limit_;
};

// m x n bike labels in {0, ..., b}. Construction checks only shape and
// non-negativity; the structural conditions (bike continuity, one rider per
// bike per column) are reported by CheckStructure / CheckFeasible so that
// malformed matrices can still be diagnosed.
class ScheduleMatrix {
 public:
  ScheduleMatrix() = default;
  ScheduleMatrix(int rows, int cols) : labels_(rows, cols, kWalk) {}
  // Rows of equal length. Throws InvalidArgumentError otherwise.
  static ScheduleMatrix FromRows(const std::vector<std::vector<int>>& rows);
  // Build from columns; every column must have `rows` entries.
  static ScheduleMatrix FromColumns(int rows,
                                    const std::vector<std::vector<int>>& cols);

  int rows() const { return labels_.rows(); }
  int cols() const { return labels_.cols(); }
  int operator()(int i, int j) const { return labels_(i, j); }
  void Set(int i, int j, int label);

  std::vector<int> Column(int j) const;
  std::vector<int> Row(int i) const;
  std::vector<std::vector<int>> ToRows() const;
  int MaxLabel() const;

  // Agent riding `label` in column j, or -1.
  int RiderOf(int label, int j) const;

  friend bool operator==(const ScheduleMatrix&, const ScheduleMatrix&) =
      default;

 private:
  Grid<int> labels_;
};

// Interval lengths x_1..x_n, all non-negative.
class PartitionVector {
 public:
  PartitionVector() = default;
  // Throws InvalidArgumentError on a negative entry.
  explicit PartitionVector(std::vector<Rational> lengths);

  std::size_t size() const { return lengths_.size(); }
  const Rational& operator[](std::size_t j) const { return lengths_[j]; }
  auto begin() const { return lengths_.begin(); }
  auto end() const { return lengths_.end(); }
  const std::vector<Rational>& values() const { return lengths_; }
  Rational Total() const;

  friend bool operator==(const PartitionVector&, const PartitionVector&) =
      default;

 private:
  std::vector<Rational> lengths_;
};

using WaitMatrix = Grid<Rational>;

// (X, M) or the augmented (X, M, D). D(i, j) is idle time agent i spends at
// the end of interval j.
class Schedule {
 public:
  Schedule() = default;
  // Throws InvalidArgumentError when the partition length differs from the
  // column count, or the waits have the wrong shape or a negative entry.
  Schedule(PartitionVector partition, ScheduleMatrix matrix,
           std::optional<WaitMatrix> waits = std::nullopt);

  const PartitionVector& partition() const { return partition_; }
  const ScheduleMatrix& matrix() const { return matrix_; }
  const std::optional<WaitMatrix>& waits() const { return waits_; }
  bool HasPositiveWait() const;

  int agents() const { return matrix_.rows(); }
  int size() const { return matrix_.cols(); }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  PartitionVector partition_;
  ScheduleMatrix matrix_;
  std::optional<WaitMatrix> waits_;
};

// t_{i,j}, t_i and the makespan tau of a schedule.
struct CompletionProfile {
  Grid<Rational> partial;      // partial(i, j): agent i reaches end of x_j
  std::vector<Rational> final;  // final[i] == partial(i, n - 1)
  Rational makespan;

  bool AllFinalTimesEqual() const;
};

struct AbandonmentVector {
  std::vector<Rational> y;  // y[k - 1]: distance bike k is ridden

  friend bool operator==(const AbandonmentVector&,
                         const AbandonmentVector&) = default;
};

struct Violation {
  int condition;  // 1 continuity, 2 single rider, 3 pickup timing
  int agent;
  int column;

  std::string ToString() const;  // 1-based "(condition, agent, column)"
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string ToString() const;
};

// Which closed-form lower bound a returned makespan attains.
enum class TightBound {
  kAverage,              // T(m, U)
  kSlowestBike,          // u_b
  kAbandonOne,           // T_1(m, U)
  kSecondSlowestBike,    // u_{b-1}
};

std::string TightBoundName(TightBound bound);
std::optional<TightBound> TightBoundFromName(std::string_view name);

struct BoundCertificate {
  Rational t_mu;
  std::optional<Rational> t1_mu;
  Rational slowest;  // u_b, or 1 when there are no bikes
  std::optional<Rational> second_slowest;
  TightBound tight_bound = TightBound::kAverage;

  // Value of the tagged bound.
  Rational Value() const;

  friend bool operator==(const BoundCertificate&,
                         const BoundCertificate&) = default;
};

struct CrossingBound {
  Rational value;   // T_1(m, U)
  Rational y_star;  // abandonment position of the slowest bike
};

// Labels must be <= b and the partition must match the column count.
CompletionProfile ComputeCompletionProfile(const Schedule& schedule,
                                           const ProblemInstance& instance);

// Conditions 1 and 2, which depend only on the matrix.
FeasibilityReport CheckStructure(const ScheduleMatrix& matrix);

// All three conditions; pickup timing uses the wait-augmented partial times.
FeasibilityReport CheckFeasible(const Schedule& schedule,
                                const ProblemInstance& instance);

// Multiplies the partition (and any waits) by `factor` > 0.
Schedule Scale(const Schedule& schedule, const Rational& factor);

AbandonmentVector ComputeAbandonmentVector(const Schedule& schedule,
                                           const ProblemInstance& instance);

// Bikes present in the last column.
bool AllBikesReachEnd(const Schedule& schedule,
                      const ProblemInstance& instance);

// T(m, U) = 1 - (1/m) sum (1 - u_k).
Rational BoundT(const ProblemInstance& instance);
Rational BoundT(int agents, std::span<const Rational> inverse_speeds);

// T(m, U, Y) = 1 - (1/m) sum (1 - u_k) y_k.
Rational BoundTY(const ProblemInstance& instance,
                 const AbandonmentVector& abandonment);

// min over y in [0,1] of max{T(m, U, [1..1, y]), y u_b + (1 - y) u_1}.
// Requires b >= 1.
CrossingBound BoundT1(const ProblemInstance& instance);

}  // namespace bikeshare

#endif  // BIKESHARE_MODEL_H_
