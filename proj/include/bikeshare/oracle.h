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

// Exhaustive search over schedule matrices for tiny instances.
//
// Every matrix with at most `max_columns` columns that respects bike
// continuity and the single-rider rule is generated, up to reordering of the
// agents (rows are kept lexicographically sorted) and without repeating a
// column twice in a row. Each matrix gets its LP-optimal partition; the
// smallest makespan wins, ties going to the first matrix found.

#ifndef BIKESHARE_ORACLE_H_
#define BIKESHARE_ORACLE_H_

#include "bikeshare/model.h"

namespace bikeshare {

struct EnumerationBudget {
  int max_agents = 4;
  int max_bikes = 3;
  int max_columns = 0;  // 0 means m

  // Defaults overridden by BIKESHARE_ORACLE_MAX_AGENTS,
  // BIKESHARE_ORACLE_MAX_BIKES and BIKESHARE_ORACLE_MAX_COLUMNS.
  static EnumerationBudget FromEnvironment();
};

struct OracleResult {
  Rational makespan;
  Schedule witness;
  AbandonmentVector abandonment;
  long matrices_examined = 0;
};

// All bikes must be in the last column. Throws BudgetExceededError when the
// instance is larger than the budget allows.
OracleResult BruteForceBs(const ProblemInstance& instance,
                          const EnumerationBudget& budget = {});

// At most `instance.abandonment_limit()` bikes may be missing from the last
// column. Any limit is accepted.
OracleResult BruteForceRbs(const ProblemInstance& instance,
                           const EnumerationBudget& budget = {});

}  // namespace bikeshare

#endif  // BIKESHARE_ORACLE_H_
