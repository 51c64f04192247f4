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

#include "bikeshare/model.h"

#include <algorithm>
#include <sstream>

#include "bikeshare/errors.h"

namespace bikeshare {

ProblemInstance::ProblemInstance(int agents,
                                 std::vector<Rational> inverse_speeds,
                                 int abandonment_limit)
    : agents_(agents),
      inverse_speeds_(std::move(inverse_speeds)),
      abandonment_limit_(abandonment_limit) {
  if (agents_ < 1) throw InvalidArgumentError("need at least one agent");
  if (bikes() > agents_) {
    throw InvalidArgumentError("more bikes than agents (b = " +
                               std::to_string(bikes()) +
                               ", m = " + std::to_string(agents_) + ")");
  }
  if (abandonment_limit_ < 0) {
    throw InvalidArgumentError("negative abandonment limit");
  }
  for (const Rational& u : inverse_speeds_) {
    if (u.Sign() <= 0 || u >= Rational(1)) {
      throw InvalidArgumentError("inverse speed " + u.ToString() +
                                 " is outside (0, 1)");
    }
  }
  std::sort(inverse_speeds_.begin(), inverse_speeds_.end());
}

ProblemInstance ProblemInstance::FromSpeeds(int agents,
                                            std::vector<Rational> speeds,
                                            int abandonment_limit) {
  std::vector<Rational> inverse;
  inverse.reserve(speeds.size());
  for (const Rational& v : speeds) {
    if (v <= Rational(1)) {
      throw InvalidArgumentError("bike speed " + v.ToString() +
                                 " is not greater than walking speed 1");
    }
    inverse.push_back(Rational(1) / v);
  }
  return ProblemInstance(agents, std::move(inverse), abandonment_limit);
}

const Rational& ProblemInstance::InverseSpeed(int label) const {
  static const Rational kOne(1);
  if (label == kWalk) return kOne;
  if (label < 0 || label > bikes()) {
    throw InvalidArgumentError("bike label " + std::to_string(label) +
                               " out of range [0, " +
                               std::to_string(bikes()) + "]");
  }
  return inverse_speeds_[label - 1];
}

ProblemInstance ProblemInstance::Prefix(int k) const {
  return ProblemInstance(
      PrefixAgents(k),
      std::vector<Rational>(inverse_speeds_.begin(),
                            inverse_speeds_.begin() + k),
      abandonment_limit_);
}

ProblemInstance ProblemInstance::WithAbandonmentLimit(int limit) const {
  return ProblemInstance(agents_, inverse_speeds_, limit);
}

std::string ProblemInstance::ToString() const {
  std::ostringstream os;
  os << "m=" << agents_ << " u={";
  for (int k = 0; k < bikes(); ++k) {
    os << (k ? ", " : "") << inverse_speeds_[k];
  }
  os << "}";
  if (abandonment_limit_ > 0) os << " l=" << abandonment_limit_;
  return os.str();
}

ScheduleMatrix ScheduleMatrix::FromRows(
    const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  ScheduleMatrix matrix(m, n);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InvalidArgumentError("ragged schedule matrix");
    }
    for (int j = 0; j < n; ++j) matrix.Set(i, j, rows[i][j]);
  }
  return matrix;
}

ScheduleMatrix ScheduleMatrix::FromColumns(
    int rows, const std::vector<std::vector<int>>& cols) {
  ScheduleMatrix matrix(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < matrix.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) {
      throw InvalidArgumentError("column height does not match row count");
    }
    for (int i = 0; i < rows; ++i) matrix.Set(i, j, cols[j][i]);
  }
  return matrix;
}

void ScheduleMatrix::Set(int i, int j, int label) {
  if (label < 0) throw InvalidArgumentError("negative bike label");
  labels_(i, j) = label;
}

std::vector<int> ScheduleMatrix::Column(int j) const {
  std::vector<int> col(rows());
  for (int i = 0; i < rows(); ++i) col[i] = labels_(i, j);
  return col;
}

std::vector<int> ScheduleMatrix::Row(int i) const {
  std::vector<int> row(cols());
  for (int j = 0; j < cols(); ++j) row[j] = labels_(i, j);
  return row;
}

std::vector<std::vector<int>> ScheduleMatrix::ToRows() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows());
  for (int i = 0; i < rows(); ++i) out.push_back(Row(i));
  return out;
}

int ScheduleMatrix::MaxLabel() const {
  int best = 0;
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) best = std::max(best, labels_(i, j));
  }
  return best;
}

int ScheduleMatrix::RiderOf(int label, int j) const {
  for (int i = 0; i < rows(); ++i) {
    if (labels_(i, j) == label) return i;
  }
  return -1;
}

PartitionVector::PartitionVector(std::vector<Rational> lengths)
    : lengths_(std::move(lengths)) {
  for (const Rational& x : lengths_) {
    if (x.Sign() < 0) {
      throw InvalidArgumentError("negative interval length " + x.ToString());
    }
  }
}

Rational PartitionVector::Total() const {
  Rational total;
  for (const Rational& x : lengths_) total += x;
  return total;
}

Schedule::Schedule(PartitionVector partition, ScheduleMatrix matrix,
                   std::optional<WaitMatrix> waits)
    : partition_(std::move(partition)),
      matrix_(std::move(matrix)),
      waits_(std::move(waits)) {
  if (static_cast<int>(partition_.size()) != matrix_.cols()) {
    throw InvalidArgumentError(
        "partition has " + std::to_string(partition_.size()) +
        " entries but the matrix has " + std::to_string(matrix_.cols()) +
        " columns");
  }
  if (waits_) {
    if (waits_->rows() != matrix_.rows() || waits_->cols() != matrix_.cols()) {
      throw InvalidArgumentError("waiting matrix shape mismatch");
    }
    for (int i = 0; i < waits_->rows(); ++i) {
      for (int j = 0; j < waits_->cols(); ++j) {
        if ((*waits_)(i, j).Sign() < 0) {
          throw InvalidArgumentError("negative waiting time");
        }
      }
    }
  }
}

bool Schedule::HasPositiveWait() const {
  if (!waits_) return false;
  for (int i = 0; i < waits_->rows(); ++i) {
    for (int j = 0; j < waits_->cols(); ++j) {
      if ((*waits_)(i, j).Sign() > 0) return true;
    }
  }
  return false;
}

bool CompletionProfile::AllFinalTimesEqual() const {
  return std::all_of(final.begin(), final.end(),
                     [&](const Rational& t) { return t == final.front(); });
}

std::string Violation::ToString() const {
  std::ostringstream os;
  os << "condition " << condition << " violated at (agent " << agent + 1
     << ", column " << column + 1 << ")";
  return os.str();
}

std::string FeasibilityReport::ToString() const {
  if (ok()) return "feasible";
  std::ostringstream os;
  for (const Violation& v : violations) os << v.ToString() << "\n";
  return os.str();
}

std::string TightBoundName(TightBound bound) {
  switch (bound) {
    case TightBound::kAverage:
      return "T(m,U)";
    case TightBound::kSlowestBike:
      return "u_b";
    case TightBound::kAbandonOne:
      return "T1(m,U)";
    case TightBound::kSecondSlowestBike:
      return "u_{b-1}";
  }
  return "?";
}

std::optional<TightBound> TightBoundFromName(std::string_view name) {
  for (TightBound b :
       {TightBound::kAverage, TightBound::kSlowestBike, TightBound::kAbandonOne,
        TightBound::kSecondSlowestBike}) {
    if (TightBoundName(b) == name) return b;
  }
  return std::nullopt;
}

Rational BoundCertificate::Value() const {
  switch (tight_bound) {
    case TightBound::kAverage:
      return t_mu;
    case TightBound::kSlowestBike:
      return slowest;
    case TightBound::kAbandonOne:
      return t1_mu.value();
    case TightBound::kSecondSlowestBike:
      return second_slowest.value();
  }
  return t_mu;
}

CompletionProfile ComputeCompletionProfile(const Schedule& schedule,
                                           const ProblemInstance& instance) {
  const ScheduleMatrix& matrix = schedule.matrix();
  const int m = matrix.rows();
  const int n = matrix.cols();
  if (m != instance.agents()) {
    throw InvalidArgumentError("schedule has " + std::to_string(m) +
                               " rows for " +
                               std::to_string(instance.agents()) + " agents");
  }
  CompletionProfile profile{Grid<Rational>(m, n), std::vector<Rational>(m),
                            Rational()};
  for (int i = 0; i < m; ++i) {
    Rational t;
    for (int j = 0; j < n; ++j) {
      t += instance.InverseSpeed(matrix(i, j)) * schedule.partition()[j];
      if (schedule.waits()) t += (*schedule.waits())(i, j);
      profile.partial(i, j) = t;
    }
    profile.final[i] = t;
  }
  if (m > 0) {
    profile.makespan =
        *std::max_element(profile.final.begin(), profile.final.end());
  }
  return profile;
}

FeasibilityReport CheckStructure(const ScheduleMatrix& matrix) {
  FeasibilityReport report;
  const int m = matrix.rows();
  for (int j = 0; j < matrix.cols(); ++j) {
    for (int i = 0; i < m; ++i) {
      const int label = matrix(i, j);
      if (label == kWalk) continue;
      if (j > 0 && matrix.RiderOf(label, j - 1) < 0) {
        report.violations.push_back({1, i, j});
      }
      for (int other = 0; other < i; ++other) {
        if (matrix(other, j) == label) {
          report.violations.push_back({2, i, j});
          break;
        }
      }
    }
  }
  return report;
}

FeasibilityReport CheckFeasible(const Schedule& schedule,
                                const ProblemInstance& instance) {
  FeasibilityReport report = CheckStructure(schedule.matrix());
  const ScheduleMatrix& matrix = schedule.matrix();
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  for (int j = 1; j < matrix.cols(); ++j) {
    for (int i = 0; i < matrix.rows(); ++i) {
      const int label = matrix(i, j);
      if (label == kWalk) continue;
      const int dropper = matrix.RiderOf(label, j - 1);
      if (dropper < 0 || dropper == i) continue;
      if (profile.partial(dropper, j - 1) > profile.partial(i, j - 1)) {
        report.violations.push_back({3, i, j});
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.column, a.agent, a.condition) <
                     std::tie(b.column, b.agent, b.condition);
            });
  return report;
}

Schedule Scale(const Schedule& schedule, const Rational& factor) {
  if (factor.Sign() <= 0) {
    throw InvalidArgumentError("scale factor must be positive");
  }
  std::vector<Rational> x;
  x.reserve(schedule.partition().size());
  for (const Rational& xj : schedule.partition()) x.push_back(xj * factor);
  std::optional<WaitMatrix> waits = schedule.waits();
  if (waits) {
    for (int i = 0; i < waits->rows(); ++i) {
      for (int j = 0; j < waits->cols(); ++j) (*waits)(i, j) *= factor;
    }
  }
  return Schedule(PartitionVector(std::move(x)), schedule.matrix(),
                  std::move(waits));
}

AbandonmentVector ComputeAbandonmentVector(const Schedule& schedule,
                                           const ProblemInstance& instance) {
  AbandonmentVector result{std::vector<Rational>(instance.bikes())};
  const ScheduleMatrix& matrix = schedule.matrix();
  for (int j = 0; j < matrix.cols(); ++j) {
    for (int i = 0; i < matrix.rows(); ++i) {
      const int label = matrix(i, j);
      if (label == kWalk) continue;
      if (label > instance.bikes()) {
        throw InvalidArgumentError("bike label out of range");
      }
      result.y[label - 1] += schedule.partition()[j];
    }
  }
  return result;
}

bool AllBikesReachEnd(const Schedule& schedule,
                      const ProblemInstance& instance) {
  const ScheduleMatrix& matrix = schedule.matrix();
  if (matrix.cols() == 0) return instance.bikes() == 0;
  for (int k = 1; k <= instance.bikes(); ++k) {
    if (matrix.RiderOf(k, matrix.cols() - 1) < 0) return false;
  }
  return true;
}

Rational BoundT(int agents, std::span<const Rational> inverse_speeds) {
  if (agents < 1) throw InvalidArgumentError("T(m, U) needs m >= 1");
  Rational deficit;
  for (const Rational& u : inverse_speeds) deficit += Rational(1) - u;
  return Rational(1) - deficit / Rational(agents);
}

Rational BoundT(const ProblemInstance& instance) {
  return BoundT(instance.agents(), instance.inverse_speeds());
}

Rational BoundTY(const ProblemInstance& instance,
                 const AbandonmentVector& abandonment) {
  if (static_cast<int>(abandonment.y.size()) != instance.bikes()) {
    throw InvalidArgumentError("abandonment vector length differs from b");
  }
  Rational deficit;
  for (int k = 0; k < instance.bikes(); ++k) {
    const Rational& y = abandonment.y[k];
    if (y.Sign() < 0 || y > Rational(1)) {
      throw InvalidArgumentError("abandonment entry outside [0, 1]");
    }
    deficit += (Rational(1) - instance.inverse_speeds()[k]) * y;
  }
  return Rational(1) - deficit / Rational(instance.agents());
}

CrossingBound BoundT1(const ProblemInstance& instance) {
  const int b = instance.bikes();
  if (b == 0) throw PreconditionError("T1(m, U) needs at least one bike");
  const Rational t = BoundT(instance);
  const Rational& fastest = instance.inverse_speeds().front();
  const Rational& slowest = instance.Slowest();
  if (slowest <= t) return {t, Rational(1)};

  // Crossing of T(m, U, [1..1, y]) = T(m, U_{b-1}) - (1 - u_b) y / m with
  // u_1 + y (u_b - u_1).
  const std::span<const Rational> all(instance.inverse_speeds());
  const Rational rest = BoundT(instance.agents(), all.first(b - 1));
  const Rational y = (rest - fastest) /
                     (slowest - fastest +
                      (Rational(1) - slowest) / Rational(instance.agents()));
  return {fastest + y * (slowest - fastest), y};
}

}  // namespace bikeshare
