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

#include <random>
#include <vector>

#include "bikeshare/bs.h"
#include "bikeshare/errors.h"
#include "bikeshare/lp.h"
#include "bikeshare/normalize.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace bikeshare {
namespace {

using testing::Q;

// Two agents, one bike at u = 1/2, handed over at the midpoint.
const ProblemInstance& Relay() {
  static const ProblemInstance* instance = new ProblemInstance(2, {Q(1, 2)});
  return *instance;
}

Schedule RelayWithWait(int agent, int column, const Rational& wait) {
  WaitMatrix d(2, 2);
  d(agent, column) = wait;
  return Schedule(PartitionVector({Q(1, 2), Q(1, 2)}),
                  ScheduleMatrix::FromRows({{1, 0}, {0, 1}}), d);
}

TEST(SwitchMatrixTest, Relay) {
  const SwitchMatrix s =
      ComputeSwitchMatrix(ScheduleMatrix::FromRows({{1, 0}, {0, 1}}));
  EXPECT_EQ(s(1, 1), 0);
  EXPECT_EQ(s(0, 0), kNoSwitch);
  EXPECT_EQ(s(0, 1), kNoSwitch);
  EXPECT_EQ(s(1, 0), kNoSwitch);
}

TEST(SwitchMatrixTest, NoSwitches) {
  const SwitchMatrix walk =
      ComputeSwitchMatrix(ScheduleMatrix::FromRows({{0, 0}, {0, 0}}));
  const SwitchMatrix solo =
      ComputeSwitchMatrix(ScheduleMatrix::FromRows({{1}, {2}, {0}}));
  for (const SwitchMatrix* s : {&walk, &solo}) {
    for (int i = 0; i < s->rows(); ++i) {
      for (int j = 0; j < s->cols(); ++j) EXPECT_EQ((*s)(i, j), kNoSwitch);
    }
  }
  const SwitchMatrix keep =
      ComputeSwitchMatrix(ScheduleMatrix::FromRows({{1, 1}, {0, 0}}));
  EXPECT_EQ(keep(0, 1), kNoSwitch);
}

TEST(SwitchMatrixTest, SwapAndMalformed) {
  const SwitchMatrix s =
      ComputeSwitchMatrix(ScheduleMatrix::FromRows({{1, 2}, {2, 1}}));
  EXPECT_EQ(s(0, 1), 1);
  EXPECT_EQ(s(1, 1), 0);
  EXPECT_THROW(ComputeSwitchMatrix(ScheduleMatrix::FromRows({{0, 1}, {0, 0}})),
               InvalidArgumentError);
}

TEST(RemoveOneWaitTest, WaitWithNoLaterPickup) {
  const Schedule s = RelayWithWait(0, 0, Q(1, 10));
  ASSERT_TRUE(CheckFeasible(s, Relay()).ok());
  // 1/4 on the bike, 1/10 idle, 1/2 on foot.
  EXPECT_EQ(ComputeCompletionProfile(s, Relay()).final[0], Q(17, 20));
  EXPECT_EQ(RemovableWait(s, Relay(), 0, 0), Q(1, 10));

  const Schedule r = RemoveOneWait(s, Relay(), 0, 0);
  ASSERT_TRUE(r.waits().has_value());
  EXPECT_EQ((*r.waits())(0, 0), Q(0));
  EXPECT_EQ(ComputeCompletionProfile(r, Relay()).final[0], Q(3, 4));
  EXPECT_TRUE(CheckFeasible(r, Relay()).ok());
}

TEST(RemoveOneWaitTest, WaitAfterPickupIsCappedBySlack) {
  // The pickup at column 1 has slack t(1, 0) - t(0, 0) = 1/2 - 1/4.
  const Schedule s = RelayWithWait(1, 1, Q(1, 10));
  EXPECT_EQ(RemovableWait(s, Relay(), 1, 1), Q(1, 10));
  const Schedule big = RelayWithWait(1, 1, Q(1, 2));
  EXPECT_EQ(RemovableWait(big, Relay(), 1, 1), Q(1, 4));

  const Schedule r = RemoveOneWait(big, Relay(), 1, 1);
  EXPECT_EQ((*r.waits())(1, 1), Q(1, 4));
  EXPECT_EQ(ComputeCompletionProfile(r, Relay()).final[1],
            ComputeCompletionProfile(big, Relay()).final[1] - Q(1, 4));
}

TEST(RemoveOneWaitTest, RejectsBadTargets) {
  const Schedule s = RelayWithWait(0, 0, Q(1, 10));
  EXPECT_THROW(RemoveOneWait(s, Relay(), 1, 0), PreconditionError);
  const Schedule no_waits(PartitionVector({Q(1, 2), Q(1, 2)}),
                          ScheduleMatrix::FromRows({{1, 0}, {0, 1}}));
  EXPECT_THROW(RemoveOneWait(no_waits, Relay(), 0, 0), PreconditionError);

  // Equal bikes traded at the midpoint: a swap-switch, not standard form.
  const ProblemInstance pair(2, {Q(1, 2), Q(1, 2)});
  WaitMatrix d(2, 2);
  d(0, 1) = Q(1, 10);
  const Schedule swap(PartitionVector({Q(1, 2), Q(1, 2)}),
                      ScheduleMatrix::FromRows({{1, 2}, {2, 1}}), d);
  ASSERT_TRUE(CheckFeasible(swap, pair).ok());
  EXPECT_THROW(RemoveOneWait(swap, pair, 0, 1), PreconditionError);
}

TEST(RemoveAllWaitsTest, SingleWait) {
  const WaitRemovalResult r =
      RemoveAllWaits(RelayWithWait(0, 0, Q(1, 10)), Relay());
  EXPECT_FALSE(r.schedule.waits().has_value());
  EXPECT_EQ(r.steps, 1);
  EXPECT_EQ(ComputeCompletionProfile(r.schedule, Relay()).makespan, Q(3, 4));
}

TEST(RemoveAllWaitsTest, SlowWalkerIsSpedUp) {
  // Agent 2 walks the first half at half pace, spending 1 instead of 1/2,
  // then rides: 1 + 1/4. At full pace everyone is done by 3/4.
  const Schedule s = RelayWithWait(1, 0, Q(1, 2));
  ASSERT_TRUE(CheckFeasible(s, Relay()).ok());
  EXPECT_EQ(ComputeCompletionProfile(s, Relay()).makespan, Q(5, 4));
  const WaitRemovalResult r = RemoveAllWaits(s, Relay());
  EXPECT_FALSE(r.schedule.HasPositiveWait());
  EXPECT_EQ(ComputeCompletionProfile(r.schedule, Relay()).makespan, Q(3, 4));
}

TEST(RemoveAllWaitsTest, IdentityWithoutWaits) {
  const Solution s = SolveBs(ProblemInstance(4, {Q(1, 2), Q(3, 5), Q(2, 3)}));
  const WaitRemovalResult r =
      RemoveAllWaits(s.schedule, ProblemInstance(4, {Q(1, 2), Q(3, 5), Q(2, 3)}));
  EXPECT_EQ(r.schedule, s.schedule);
  EXPECT_EQ(r.steps, 0);
}

TEST(RemoveAllWaitsTest, RejectsInfeasibleInput) {
  // Agent 2 would take the bike before agent 1 drops it.
  const Schedule s = RelayWithWait(0, 0, Q(1, 2));
  ASSERT_FALSE(CheckFeasible(s, Relay()).ok());
  EXPECT_THROW(RemoveAllWaits(s, Relay()), InvalidArgumentError);
}

// Feasible random schedule with a few waits sprinkled on it.
Schedule RandomWaitedSchedule(std::mt19937& rng, const ProblemInstance& instance,
                              const ScheduleMatrix& matrix) {
  const Schedule base(SolvePartition(matrix, instance).partition, matrix);
  const int m = matrix.rows(), n = matrix.cols();
  WaitMatrix d(m, n);
  const int count = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int tries = 0, placed = 0; placed < count && tries < 50; ++tries) {
    const int i = std::uniform_int_distribution<int>(0, m - 1)(rng);
    const int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    WaitMatrix trial = d;
    trial(i, j) += testing::RandomInverseSpeed(rng, 12);
    if (CheckFeasible(Schedule(base.partition(), matrix, trial), instance)
            .ok()) {
      d = std::move(trial);
      ++placed;
    }
  }
  return Schedule(base.partition(), matrix, d);
}

TEST(RemoveOneWaitTest, RandomProfilesShiftOnOneRow) {
  std::mt19937 rng(73);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = std::uniform_int_distribution<int>(2, 5)(rng);
    const int b = std::uniform_int_distribution<int>(1, m)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const ProblemInstance instance(m, testing::RandomInverseSpeeds(rng, b));
    const Schedule waited = RandomWaitedSchedule(
        rng, instance, testing::RandomMatrix(rng, m, b, n));
    const Schedule s = Standardize(waited, instance).schedule;
    if (!s.HasPositiveWait()) continue;

    int i0 = -1, j0 = -1;
    for (int i = 0; i < s.agents() && i0 < 0; ++i) {
      for (int j = 0; j < s.size(); ++j) {
        if ((*s.waits())(i, j).Sign() > 0) {
          i0 = i;
          j0 = j;
          break;
        }
      }
    }
    const Rational d = RemovableWait(s, instance, i0, j0);
    EXPECT_GT(d, Q(0));
    EXPECT_LE(d, (*s.waits())(i0, j0));

    const Schedule r = RemoveOneWait(s, instance, i0, j0);
    EXPECT_EQ(r.matrix(), s.matrix());
    EXPECT_EQ(r.partition(), s.partition());
    for (int i = 0; i < s.agents(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        const Rational expected = (*s.waits())(i, j) -
                                  (i == i0 && j == j0 ? d : Rational());
        EXPECT_EQ((*r.waits())(i, j), expected);
      }
    }
    const CompletionProfile before = ComputeCompletionProfile(s, instance);
    const CompletionProfile after = ComputeCompletionProfile(r, instance);
    for (int i = 0; i < s.agents(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        const Rational shift = i == i0 && j >= j0 ? d : Rational();
        EXPECT_EQ(after.partial(i, j), before.partial(i, j) - shift);
      }
    }
    EXPECT_TRUE(CheckFeasible(r, instance).ok()) << instance.ToString();
    EXPECT_LE(after.makespan, before.makespan);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(RemoveAllWaitsTest, RandomSchedulesLoseAllWaits) {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const int b = std::uniform_int_distribution<int>(0, m)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    // Equal speeds make swap-switches, which the loop must clear as it goes.
    std::vector<Rational> u(b, Q(2, 3));
    if (trial % 2 == 0) u = testing::RandomInverseSpeeds(rng, b);
    const ProblemInstance instance(m, u);
    const Schedule s = RandomWaitedSchedule(
        rng, instance, testing::RandomMatrix(rng, m, b, n));

    const WaitRemovalResult r = RemoveAllWaits(s, instance);
    EXPECT_FALSE(r.schedule.HasPositiveWait());
    EXPECT_TRUE(CheckFeasible(r.schedule, instance).ok());
    EXPECT_LE(ComputeCompletionProfile(r.schedule, instance).makespan,
              ComputeCompletionProfile(s, instance).makespan);
    EXPECT_EQ(r.schedule.partition().Total(), Q(1));
  }
}

}  // namespace
}  // namespace bikeshare
