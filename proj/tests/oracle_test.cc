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
#include <random>
#include <vector>

#include "bikeshare/bs.h"
#include "bikeshare/errors.h"
#include "bikeshare/rbs.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace bikeshare {
namespace {

using testing::Q;

void ExpectSoundWitness(const OracleResult& r, const ProblemInstance& instance) {
  EXPECT_TRUE(CheckFeasible(r.witness, instance).ok());
  EXPECT_EQ(ComputeCompletionProfile(r.witness, instance).makespan, r.makespan);
  EXPECT_LE(r.witness.size(), instance.agents());
  EXPECT_EQ(r.abandonment, ComputeAbandonmentVector(r.witness, instance));
  EXPECT_GT(r.matrices_examined, 0);
}

TEST(BruteForceBsTest, Examples) {
  // One bike at speed v = 2: (1 + v) / (2 v).
  const ProblemInstance one(2, {Q(1, 2)});
  const OracleResult a = BruteForceBs(one);
  EXPECT_EQ(a.makespan, Q(3, 4));
  ExpectSoundWitness(a, one);
  EXPECT_TRUE(AllBikesReachEnd(a.witness, one));

  // Two bikes for two agents: the slower bike decides, 1 / v2.
  const ProblemInstance two(2, {Q(1, 3), Q(1, 2)});
  EXPECT_EQ(BruteForceBs(two).makespan, Q(1, 2));

  const ProblemInstance three(3, {Q(1, 2), Q(1, 2)});
  const OracleResult c = BruteForceBs(three);
  EXPECT_EQ(c.makespan, testing::AverageBound(3, {Q(1, 2), Q(1, 2)}));
  EXPECT_EQ(c.makespan, Q(2, 3));
  ExpectSoundWitness(c, three);
}

TEST(BruteForceRbsTest, Examples) {
  const ProblemInstance two(2, {Q(1, 3), Q(1, 2)}, 1);
  const OracleResult a = BruteForceRbs(two);
  EXPECT_EQ(a.makespan, Q(7, 15));
  ExpectSoundWitness(a, two);
  EXPECT_EQ(a.abandonment.y, (std::vector<Rational>{Q(1), Q(4, 5)}));

  const ProblemInstance three(3, {Q(1, 2), Q(4, 5)}, 1);
  const OracleResult b = BruteForceRbs(three);
  EXPECT_EQ(b.makespan, testing::CrossingPoint(3, {Q(1, 2), Q(4, 5)}).value);
  EXPECT_EQ(b.makespan, Q(17, 22));
  ExpectSoundWitness(b, three);
}

TEST(BruteForceRbsTest, LimitZeroIsBs) {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    const ProblemInstance instance = testing::RandomInstance(rng, 3);
    EXPECT_EQ(BruteForceRbs(instance).makespan, BruteForceBs(instance).makespan);
  }
}

TEST(BruteForceRbsTest, HigherLimitsAreSearched) {
  // Two slow bikes, both may be left behind. Never worse than one.
  const ProblemInstance base(3, {Q(3, 4), Q(9, 10)});
  const Rational one = BruteForceRbs(base.WithAbandonmentLimit(1)).makespan;
  const OracleResult two = BruteForceRbs(base.WithAbandonmentLimit(2));
  EXPECT_LE(two.makespan, one);
  ExpectSoundWitness(two, base.WithAbandonmentLimit(2));
}

TEST(BruteForceTest, AgreesWithSolvers) {
  std::mt19937 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const ProblemInstance instance = testing::RandomInstance(rng, 3);
    EXPECT_EQ(BruteForceBs(instance).makespan, SolveBs(instance).makespan)
        << instance.ToString();
    if (instance.bikes() > 0) {
      const ProblemInstance one = instance.WithAbandonmentLimit(1);
      const OracleResult r = BruteForceRbs(one);
      EXPECT_EQ(r.makespan, SolveRbs(one).makespan) << one.ToString();
      ExpectSoundWitness(r, one);
    }
  }
}

TEST(BruteForceTest, BudgetExceeded) {
  EXPECT_THROW(BruteForceBs(ProblemInstance(5, {Q(1, 2)})), BudgetExceededError);
  EXPECT_THROW(
      BruteForceBs(ProblemInstance(4, {Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)})),
      BudgetExceededError);
  EnumerationBudget small;
  small.max_agents = 2;
  EXPECT_THROW(BruteForceRbs(ProblemInstance(3, {Q(1, 2)}, 1), small),
               BudgetExceededError);
  EXPECT_EQ(BruteForceBs(ProblemInstance(2, {Q(1, 2)}), small).makespan,
            Q(3, 4));
}

TEST(BruteForceTest, LongerMatricesDoNotHelp) {
  const std::vector<ProblemInstance> instances = {
      ProblemInstance(2, {Q(1, 2)}), ProblemInstance(2, {Q(1, 4), Q(2, 3)}),
      ProblemInstance(3, {Q(2, 5)}), ProblemInstance(3, {Q(1, 2), Q(4, 5)}, 1)};
  for (const ProblemInstance& instance : instances) {
    EnumerationBudget longer;
    longer.max_columns = instance.agents() == 2 ? 4 : 5;
    const OracleResult wide = BruteForceRbs(instance, longer);
    const OracleResult narrow = BruteForceRbs(instance);
    EXPECT_EQ(wide.makespan, narrow.makespan) << instance.ToString();
    EXPECT_GT(wide.matrices_examined, narrow.matrices_examined);
  }
}

class EnvironmentTest : public ::testing::Test {
 protected:
  void TearDown() override {
    unsetenv("BIKESHARE_ORACLE_MAX_AGENTS");
    unsetenv("BIKESHARE_ORACLE_MAX_BIKES");
    unsetenv("BIKESHARE_ORACLE_MAX_COLUMNS");
  }
};

TEST_F(EnvironmentTest, Defaults) {
  const EnumerationBudget b = EnumerationBudget::FromEnvironment();
  EXPECT_EQ(b.max_agents, 4);
  EXPECT_EQ(b.max_bikes, 3);
  EXPECT_EQ(b.max_columns, 0);
}

TEST_F(EnvironmentTest, Overrides) {
  setenv("BIKESHARE_ORACLE_MAX_AGENTS", "5", 1);
  setenv("BIKESHARE_ORACLE_MAX_BIKES", "2", 1);
  setenv("BIKESHARE_ORACLE_MAX_COLUMNS", "7", 1);
  const EnumerationBudget b = EnumerationBudget::FromEnvironment();
  EXPECT_EQ(b.max_agents, 5);
  EXPECT_EQ(b.max_bikes, 2);
  EXPECT_EQ(b.max_columns, 7);
}

TEST_F(EnvironmentTest, RejectsGarbage) {
  setenv("BIKESHARE_ORACLE_MAX_AGENTS", "four", 1);
  EXPECT_THROW(EnumerationBudget::FromEnvironment(), InvalidArgumentError);
  setenv("BIKESHARE_ORACLE_MAX_AGENTS", "-1", 1);
  EXPECT_THROW(EnumerationBudget::FromEnvironment(), InvalidArgumentError);
}

}  // namespace
}  // namespace bikeshare
