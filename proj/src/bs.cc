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

#include "bikeshare/bs.h"

#include <algorithm>
#include <span>
#include <string>

#include "bikeshare/errors.h"
#include "bikeshare/lp.h"
#include "bikeshare/normalize.h"

namespace bikeshare {
namespace {

Schedule AllWalk(int agents) {
  return Schedule(PartitionVector({Rational(1)}), ScheduleMatrix(agents, 1));
}

// Instance with the first `count` bikes of `instance` and `agents` agents.
ProblemInstance FirstBikes(const ProblemInstance& instance, int agents,
                           int count) {
  const auto& u = instance.inverse_speeds();
  return ProblemInstance(agents,
                         std::vector<Rational>(u.begin(), u.begin() + count));
}

bool FastEnough(const ProblemInstance& instance) {
  return instance.bikes() == 0 || instance.Slowest() <= BoundT(instance);
}

// Stand-in for a group with no agents.
Schedule EmptyGroup() {
  return Schedule(PartitionVector({Rational(1)}), ScheduleMatrix(0, 1));
}

// Phase-1 column j (zero based) for `rows` agents sharing `bikes` bikes: the
// bikes sit on agents j .. j + bikes - 1.
std::vector<int> PhaseOneColumn(int rows, int bikes, int j) {
  std::vector<int> col(rows, kWalk);
  for (int i = j; i < j + bikes && i < rows; ++i) col[i] = i - j + 1;
  return col;
}

// Labels of agents `from` .. rows - 1 during phase 2, where agent
// (rows - bikes) + k rides bike k + 1.
std::vector<int> PhaseTwoTail(int rows, int bikes, int from) {
  std::vector<int> tail;
  for (int i = from; i < rows; ++i) tail.push_back(i + 1 - (rows - bikes));
  return tail;
}

void CheckEqualArrival(const Schedule& schedule,
                       const ProblemInstance& instance, const Rational& target,
                       const char* what) {
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  for (const Rational& t : profile.final) {
    if (t != target) {
      throw InternalError(std::string(what) + " on " + instance.ToString() +
                          ": agent arrives at " + t.ToString() +
                          " instead of " + target.ToString());
    }
  }
  const FeasibilityReport report = CheckFeasible(schedule, instance);
  if (!report.ok()) {
    throw InternalError(std::string(what) + " on " + instance.ToString() +
                        " is infeasible: " + report.ToString());
  }
}

Schedule ReferenceRecursive(const ProblemInstance& instance, bool verify_lp) {
  const int m = instance.agents();
  const int b = instance.bikes();
  if (b == 0) return AllWalk(m);

  const UnexpandedSchedule unexpanded = UnexpandedPartition(instance);
  std::vector<NestedColumn> columns;
  for (int j = 0; j < m - b; ++j) {
    columns.push_back(NestedColumn::Plain(PhaseOneColumn(m, b, j)));
  }
  for (int k = 0; k < b; ++k) {
    const int group = instance.PrefixAgents(k);
    Schedule block = group == 0
                         ? EmptyGroup()
                         : ReferenceRecursive(instance.Prefix(k), false);
    columns.push_back({std::move(block), PhaseTwoTail(m, b, group)});
  }

  Rational total;
  for (const Rational& z : unexpanded.z) total += z;
  std::vector<Rational> z;
  for (const Rational& zj : unexpanded.z) z.push_back(zj / total);
  Schedule schedule(ExpandPartition(z, columns), Expand(m, columns));

  const Rational target = BoundT(instance);
  CheckEqualArrival(schedule, instance, target, "reference schedule");
  if (verify_lp) {
    const PartitionSolution lp = SolvePartition(schedule.matrix(), instance);
    if (lp.makespan != target) {
      throw InternalError("LP makespan " + lp.makespan.ToString() +
                          " differs from T = " + target.ToString());
    }
  }
  return schedule;
}

}  // namespace

NestedColumn NestedColumn::Plain(std::vector<int> labels) {
  return {Schedule(PartitionVector({Rational(1)}), ScheduleMatrix(0, 1)),
          std::move(labels)};
}

ScheduleMatrix Expand(int rows, const std::vector<NestedColumn>& columns) {
  std::vector<std::vector<int>> cols;
  for (const NestedColumn& nested : columns) {
    const ScheduleMatrix& block = nested.block.matrix();
    if (block.rows() + static_cast<int>(nested.tail.size()) != rows) {
      throw InvalidArgumentError(
          "nested column has " + std::to_string(block.rows()) + " + " +
          std::to_string(nested.tail.size()) + " rows, expected " +
          std::to_string(rows));
    }
    if (block.cols() == 0) {
      throw InvalidArgumentError("nested block has no columns");
    }
    for (int c = 0; c < block.cols(); ++c) {
      std::vector<int> col = block.Column(c);
      col.insert(col.end(), nested.tail.begin(), nested.tail.end());
      cols.push_back(std::move(col));
    }
  }
  return ScheduleMatrix::FromColumns(rows, cols);
}

PartitionVector ExpandPartition(const std::vector<Rational>& z,
                                const std::vector<NestedColumn>& columns) {
  if (z.size() != columns.size()) {
    throw InvalidArgumentError("one interval length per nested column needed");
  }
  std::vector<Rational> x;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const Rational& xb : columns[j].block.partition()) {
      x.push_back(z[j] * xb);
    }
  }
  return PartitionVector(std::move(x));
}

ScheduleMatrix Relabel(const ScheduleMatrix& matrix,
                       const std::vector<int>& map) {
  if (map.empty() || map[0] != kWalk) {
    throw InvalidArgumentError("relabeling must keep walking as 0");
  }
  ScheduleMatrix out(matrix.rows(), matrix.cols());
  for (int i = 0; i < matrix.rows(); ++i) {
    for (int j = 0; j < matrix.cols(); ++j) {
      const int label = matrix(i, j);
      if (label >= static_cast<int>(map.size())) {
        throw InvalidArgumentError("no new name for bike " +
                                   std::to_string(label));
      }
      out.Set(i, j, map[label]);
    }
  }
  return out;
}

std::vector<Rational> CatchUpLengths(
    const Grid<Rational>& pace, const std::vector<std::pair<int, int>>& sync) {
  const int n = pace.cols();
  if (static_cast<int>(sync.size()) != n) {
    throw InvalidArgumentError("one sync pair per interval needed");
  }
  std::vector<Rational> z(n);
  if (n == 0) return z;
  z[0] = 1;
  for (int j = 1; j < n; ++j) {
    const auto [leader, catcher] = sync[j];
    Rational numerator;
    for (int p = 0; p < j; ++p) {
      numerator += (pace(catcher, p) - pace(leader, p)) * z[p];
    }
    const Rational denominator = pace(leader, j) - pace(catcher, j);
    if (denominator.IsZero()) {
      if (!numerator.IsZero()) {
        // Equal paces with a gap: only the all-zero prefix closes it, which
        // happens at the boundary u_b = T. Restart the lengths here.
        std::fill(z.begin(), z.begin() + j, Rational());
        z[j] = 1;
      }
      continue;
    }
    z[j] = numerator / denominator;
    if (z[j].Sign() < 0) {
      throw PreconditionError("negative interval length in interval " +
                              std::to_string(j + 1));
    }
  }
  return z;
}

Grid<Rational> UnexpandedTimes(const UnexpandedSchedule& schedule) {
  const Grid<Rational>& pace = schedule.pace;
  Grid<Rational> t(pace.rows(), pace.cols());
  for (int i = 0; i < pace.rows(); ++i) {
    Rational sum;
    for (int j = 0; j < pace.cols(); ++j) {
      sum += pace(i, j) * schedule.z[j];
      t(i, j) = sum;
    }
  }
  return t;
}

bool IsValidUnexpanded(const UnexpandedSchedule& schedule) {
  const Grid<Rational> t = UnexpandedTimes(schedule);
  for (int j = 1; j < t.cols(); ++j) {
    const auto [leader, catcher] = schedule.sync[j];
    if (t(leader, j) != t(catcher, j)) return false;
  }
  for (const Rational& z : schedule.z) {
    if (z.Sign() < 0) return false;
  }
  return true;
}

UnexpandedSchedule UnexpandedPartition(const ProblemInstance& instance) {
  const int m = instance.agents();
  const int b = instance.bikes();
  if (b == 0) throw PreconditionError("unexpanded partition needs a bike");
  if (!FastEnough(instance)) {
    throw PreconditionError("slowest bike is slower than T(m, U) on " +
                            instance.ToString());
  }
  UnexpandedSchedule out{Grid<Rational>(m, m, Rational(1)), {{-1, -1}}, {}};
  for (int j = 0; j < m - b; ++j) {
    const std::vector<int> col = PhaseOneColumn(m, b, j);
    for (int i = 0; i < m; ++i) out.pace(i, j) = instance.InverseSpeed(col[i]);
  }
  for (int k = 0; k < b; ++k) {
    const int j = m - b + k;
    const int group = instance.PrefixAgents(k);
    if (group > 0) {
      const Rational pace = BoundT(instance.Prefix(k));
      for (int i = 0; i < group; ++i) out.pace(i, j) = pace;
    }
    const std::vector<int> tail = PhaseTwoTail(m, b, group);
    for (int i = group; i < m; ++i) {
      out.pace(i, j) = instance.InverseSpeed(tail[i - group]);
    }
  }
  for (int j = 1; j < m; ++j) out.sync.push_back({j - 1, j});
  out.z = CatchUpLengths(out.pace, out.sync);
  return out;
}

Schedule AllMakeItReference(const ProblemInstance& instance) {
  if (!FastEnough(instance)) {
    throw PreconditionError("slowest bike is slower than T(m, U) on " +
                            instance.ToString());
  }
  return ReferenceRecursive(instance, true);
}

long ReferenceSize(int agents, int bikes) {
  if (bikes == 0) return 1;
  long size = agents - bikes + 1;
  for (int k = 1; k < bikes; ++k) size += ReferenceSize(agents - bikes + k, k);
  return size;
}

AllMakeItTable AllMakeItStarTable(const ProblemInstance& instance) {
  if (!FastEnough(instance)) {
    throw PreconditionError("slowest bike is slower than T(m, U) on " +
                            instance.ToString());
  }
  const int m = instance.agents();
  const int b = instance.bikes();
  const int walkers = m - b;

  AllMakeItTable table;
  table.entries.push_back(walkers == 0 ? EmptyGroup() : AllWalk(walkers));
  for (int k = 1; k <= b; ++k) {
    const ProblemInstance sub = instance.Prefix(k);
    if (sub.agents() - sub.bikes() != walkers) {
      throw InternalError("subproblem lost its walker count");
    }
    if (!FastEnough(sub)) {
      throw InternalError("subproblem " + sub.ToString() +
                          " breaks the speed precondition");
    }
    const int rows = sub.agents();
    std::vector<NestedColumn> columns;
    for (int j = 0; j < walkers; ++j) {
      columns.push_back(NestedColumn::Plain(PhaseOneColumn(rows, k, j)));
    }
    for (int p = 0; p < k; ++p) {
      const int group = walkers + p;
      columns.push_back({table.entries[p], PhaseTwoTail(rows, k, group)});
    }
    const ScheduleMatrix matrix = Expand(rows, columns);
    table.max_intermediate_size =
        std::max(table.max_intermediate_size, matrix.cols());
    if (matrix.cols() > m * b) {
      throw InternalError("intermediate matrix of size " +
                          std::to_string(matrix.cols()) + " exceeds m b");
    }
    ReduceResult reduced = Reduce(matrix, sub);
    CheckEqualArrival(reduced.schedule, sub, BoundT(sub), "table entry");
    table.entries.push_back(std::move(reduced.schedule));
  }
  return table;
}

Schedule AllMakeItStar(const ProblemInstance& instance) {
  AllMakeItTable table = AllMakeItStarTable(instance);
  return std::move(table.entries.back());
}

int FindKSlow(const ProblemInstance& instance) {
  if (FastEnough(instance)) {
    throw PreconditionError("slowest bike is not slower than T(m, U)");
  }
  const int m = instance.agents();
  const int b = instance.bikes();
  const std::span<const Rational> u(instance.inverse_speeds());
  for (int k = 1; k <= b - 1; ++k) {
    const Rational t = BoundT(m - k, u.first(b - k));
    if (u[b - k - 1] <= t) {
      if (t > instance.Slowest()) {
        throw InternalError("T(m-k, U_{b-k}) exceeds u_b");
      }
      return k;
    }
  }
  throw InternalError("no split found for " + instance.ToString());
}

Schedule StackSoloRiders(const Schedule& top,
                         const std::vector<int>& solo_labels) {
  const ScheduleMatrix& matrix = top.matrix();
  const int rows = matrix.rows() + static_cast<int>(solo_labels.size());
  ScheduleMatrix out(rows, matrix.cols());
  for (int j = 0; j < matrix.cols(); ++j) {
    for (int i = 0; i < matrix.rows(); ++i) out.Set(i, j, matrix(i, j));
    for (std::size_t s = 0; s < solo_labels.size(); ++s) {
      out.Set(matrix.rows() + static_cast<int>(s), j, solo_labels[s]);
    }
  }
  std::optional<WaitMatrix> waits;
  if (top.waits()) {
    waits = WaitMatrix(rows, matrix.cols());
    for (int i = 0; i < matrix.rows(); ++i) {
      for (int j = 0; j < matrix.cols(); ++j) {
        (*waits)(i, j) = (*top.waits())(i, j);
      }
    }
  }
  return Schedule(top.partition(), std::move(out), std::move(waits));
}

BoundCertificate MakeCertificate(const ProblemInstance& instance,
                                 TightBound tight) {
  BoundCertificate cert;
  cert.t_mu = BoundT(instance);
  const int b = instance.bikes();
  cert.slowest = b == 0 ? Rational(1) : instance.Slowest();
  if (b >= 1) cert.t1_mu = BoundT1(instance).value;
  if (b >= 2) cert.second_slowest = instance.inverse_speeds()[b - 2];
  cert.tight_bound = tight;
  return cert;
}

Solution SolveBs(const ProblemInstance& instance) {
  const int m = instance.agents();
  const int b = instance.bikes();
  Schedule schedule;
  TightBound tight;
  if (FastEnough(instance)) {
    schedule = AllMakeItStar(instance);
    tight = TightBound::kAverage;
  } else {
    const int k = FindKSlow(instance);
    const Schedule top = AllMakeItStar(FirstBikes(instance, m - k, b - k));
    std::vector<int> solo;
    for (int label = b - k + 1; label <= b; ++label) solo.push_back(label);
    schedule = StackSoloRiders(top, solo);
    tight = TightBound::kSlowestBike;
  }

  Solution solution;
  solution.certificate = MakeCertificate(instance, tight);
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  solution.makespan = profile.makespan;
  if (profile.makespan != solution.certificate.Value()) {
    throw InternalError("makespan " + profile.makespan.ToString() +
                        " misses the bound " +
                        solution.certificate.Value().ToString());
  }
  if (tight == TightBound::kAverage && !profile.AllFinalTimesEqual()) {
    throw InternalError("agents do not arrive together");
  }
  const FeasibilityReport report = CheckFeasible(schedule, instance);
  if (!report.ok()) throw InternalError("infeasible: " + report.ToString());
  if (!AllBikesReachEnd(schedule, instance)) {
    throw InternalError("a bike does not reach the end");
  }
  solution.abandonment = ComputeAbandonmentVector(schedule, instance);
  solution.schedule = std::move(schedule);
  return solution;
}

}  // namespace bikeshare
