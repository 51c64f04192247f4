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

#include "bikeshare/oracle.h"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "bikeshare/errors.h"
#include "bikeshare/lp.h"

namespace bikeshare {
namespace {

int EnvInt(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 0) {
    throw InvalidArgumentError(std::string(name) + " must be a non-negative "
                               "integer, got '" + value + "'");
  }
  return static_cast<int>(parsed);
}

class Search {
 public:
  Search(const ProblemInstance& instance, int max_columns, int min_final_bikes)
      : instance_(instance),
        m_(instance.agents()),
        b_(instance.bikes()),
        max_columns_(max_columns),
        min_final_bikes_(min_final_bikes) {}

  OracleResult Run() {
    std::vector<bool> available(b_ + 1, true);
    std::vector<bool> tied(m_ > 0 ? m_ - 1 : 0, true);
    Extend(available, tied);
    if (!best_) throw InternalError("oracle found no schedule");
    OracleResult result;
    result.makespan = best_->makespan;
    result.witness = Schedule(best_->partition, best_matrix_);
    result.abandonment = ComputeAbandonmentVector(result.witness, instance_);
    result.matrices_examined = examined_;
    return result;
  }

 private:
  // Appends every admissible next column. `available[k]` says bike k was in
  // the previous column; `tied[i]` says rows i and i + 1 agree so far.
  void Extend(const std::vector<bool>& available,
              const std::vector<bool>& tied) {
    if (static_cast<int>(columns_.size()) == max_columns_) return;
    std::vector<int> column(m_, kWalk);
    std::vector<bool> used(b_ + 1, false);
    Fill(0, column, used, available, tied);
  }

  void Fill(int i, std::vector<int>& column, std::vector<bool>& used,
            const std::vector<bool>& available,
            const std::vector<bool>& tied) {
    if (i == m_) {
      Accept(column, used, tied);
      return;
    }
    for (int label = 0; label <= b_; ++label) {
      if (label != kWalk && (!available[label] || used[label])) continue;
      // Keep rows sorted: a row tied with the one above may not get a
      // smaller label.
      if (i > 0 && tied[i - 1] && label < column[i - 1]) continue;
      column[i] = label;
      if (label != kWalk) used[label] = true;
      Fill(i + 1, column, used, available, tied);
      if (label != kWalk) used[label] = false;
    }
    column[i] = kWalk;
  }

  void Accept(const std::vector<int>& column, const std::vector<bool>& used,
              const std::vector<bool>& tied) {
    if (!columns_.empty() && columns_.back() == column) return;
    int bikes = 0;
    for (int k = 1; k <= b_; ++k) bikes += used[k] ? 1 : 0;
    // Bikes never come back, so a column with too few is a dead end.
    if (bikes < min_final_bikes_) return;

    columns_.push_back(column);
    Evaluate();
    std::vector<bool> next_tied(tied);
    for (int i = 0; i + 1 < m_; ++i) {
      next_tied[i] = tied[i] && column[i] == column[i + 1];
    }
    Extend(used, next_tied);
    columns_.pop_back();
  }

  void Evaluate() {
    ++examined_;
    const ScheduleMatrix matrix = ScheduleMatrix::FromColumns(m_, columns_);
    PartitionSolution solution = SolvePartition(matrix, instance_);
    if (!best_ || solution.makespan < best_->makespan) {
      best_ = std::move(solution);
      best_matrix_ = matrix;
    }
  }

  const ProblemInstance& instance_;
  const int m_;
  const int b_;
  const int max_columns_;
  const int min_final_bikes_;
  std::vector<std::vector<int>> columns_;
  std::optional<PartitionSolution> best_;
  ScheduleMatrix best_matrix_;
  long examined_ = 0;
};

void CheckBudget(const ProblemInstance& instance,
                 const EnumerationBudget& budget) {
  if (instance.agents() > budget.max_agents ||
      instance.bikes() > budget.max_bikes) {
    throw BudgetExceededError(
        "instance " + instance.ToString() + " exceeds the oracle budget of " +
        std::to_string(budget.max_agents) + " agents and " +
        std::to_string(budget.max_bikes) + " bikes");
  }
}

OracleResult RunSearch(const ProblemInstance& instance,
                       const EnumerationBudget& budget, int limit) {
  CheckBudget(instance, budget);
  const int columns =
      budget.max_columns > 0 ? budget.max_columns : instance.agents();
  const int min_bikes = std::max(0, instance.bikes() - limit);
  return Search(instance, columns, min_bikes).Run();
}

}  // namespace

EnumerationBudget EnumerationBudget::FromEnvironment() {
  EnumerationBudget budget;
  budget.max_agents = EnvInt("BIKESHARE_ORACLE_MAX_AGENTS", budget.max_agents);
  budget.max_bikes = EnvInt("BIKESHARE_ORACLE_MAX_BIKES", budget.max_bikes);
  budget.max_columns =
      EnvInt("BIKESHARE_ORACLE_MAX_COLUMNS", budget.max_columns);
  return budget;
}

OracleResult BruteForceBs(const ProblemInstance& instance,
                          const EnumerationBudget& budget) {
  return RunSearch(instance, budget, 0);
}

OracleResult BruteForceRbs(const ProblemInstance& instance,
                           const EnumerationBudget& budget) {
  return RunSearch(instance, budget, instance.abandonment_limit());
}

}  // namespace bikeshare
