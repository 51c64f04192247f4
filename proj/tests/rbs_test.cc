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

#include "bikeshare/rbs.h"

#include <algorithm>
#include <random>
#include <vector>

#include "bikeshare/bs.h"
#include "bikeshare/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace bikeshare {
namespace {

using testing::AverageBound;
using testing::CrossingPoint;
using testing::Q;

// T_1 from its two regimes, independent of the library.
Rational T1(int m, const std::vector<Rational>& u) {
  const Rational t = AverageBound(m, u);
  if (u.back() <= t) return t;
  return CrossingPoint(m, u).value;
}

ProblemInstance One(int m, std::vector<Rational> u) {
  return ProblemInstance(m, std::move(u), 1);
}

TEST(FindQTest, Examples) {
  // T(2, {1/2}) = 3/4 admits u_1; T(3, {1/2, 4/5}) = 23/30 < 4/5.
  ASSERT_EQ(AverageBound(2, {Q(1, 2)}), Q(3, 4));
  ASSERT_EQ(AverageBound(3, {Q(1, 2), Q(4, 5)}), Q(23, 30));
  EXPECT_EQ(FindQ(One(3, {Q(1, 2), Q(4, 5)})), 1);
  // Equality at T(1, {1/3}) = 1/3 still counts.
  EXPECT_EQ(FindQ(One(2, {Q(1, 3), Q(1, 2)})), 1);
  EXPECT_EQ(FindQ(One(3, {Q(1, 2), Q(1, 2)})), 2);
  EXPECT_THROW(FindQ(One(2, {})), PreconditionError);
}

TEST(AllButOneTest, ThreeAgents) {
  const ProblemInstance instance = One(3, {Q(1, 2), Q(4, 5)});
  const testing::Crossing c = CrossingPoint(3, instance.inverse_speeds());
  ASSERT_EQ(c.y, Q(10, 11));
  ASSERT_EQ(c.value, Q(17, 22));

  const UnexpandedSchedule unexpanded = AllButOneUnexpanded(instance);
  EXPECT_EQ(unexpanded.z, (std::vector<Rational>{Q(1), Q(1, 10)}));

  const RbsSolution s = AllButOne(instance);
  EXPECT_EQ(s.makespan, Q(17, 22));
  EXPECT_EQ(s.certificate.tight_bound, TightBound::kAbandonOne);
  ASSERT_EQ(s.abandoned.size(), 1u);
  EXPECT_EQ(s.abandoned[0], (AbandonedBike{2, Q(10, 11)}));
  EXPECT_EQ(s.abandonment.y, (std::vector<Rational>{Q(1), Q(10, 11)}));
  EXPECT_TRUE(CheckFeasible(s.schedule, instance).ok());

  const CompletionProfile p = ComputeCompletionProfile(s.schedule, instance);
  EXPECT_TRUE(p.AllFinalTimesEqual());
  EXPECT_EQ(p.makespan, Q(17, 22));

  // Agent 3 rides bike 2 to the drop point and bike 1 after it; the other
  // two walk the last stretch.
  const ScheduleMatrix& matrix = s.schedule.matrix();
  const int last = matrix.cols() - 1;
  EXPECT_EQ(matrix(2, 0), 2);
  EXPECT_EQ(matrix(2, last), 1);
  EXPECT_EQ(matrix(0, last), kWalk);
  EXPECT_EQ(matrix(1, last), kWalk);
  EXPECT_EQ(s.schedule.partition()[last], Q(1, 11));
}

TEST(AllButOneTest, TwoAgentsClosedForm) {
  // Speeds v1 = 3, v2 = 2: tau = (v1^2 - v2) / (v2 v1^2 + v1^2 - 2 v1 v2)
  // and the slow bike stays at v2 (v1 - 1) / (v1 v2 + v1 - 2 v2).
  const long v1 = 3, v2 = 2;
  const Rational tau(v1 * v1 - v2, v2 * v1 * v1 + v1 * v1 - 2 * v1 * v2);
  const Rational z(v2 * (v1 - 1), v1 * v2 + v1 - 2 * v2);
  ASSERT_EQ(tau, Q(7, 15));
  ASSERT_EQ(z, Q(4, 5));

  const RbsSolution s = AllButOne(One(2, {Q(1, 3), Q(1, 2)}));
  EXPECT_EQ(s.makespan, tau);
  ASSERT_EQ(s.abandoned.size(), 1u);
  EXPECT_EQ(s.abandoned[0], (AbandonedBike{2, z}));
}

TEST(AllButOneTest, RejectsOutsideItsRegion) {
  // Fast enough for everyone to arrive.
  EXPECT_THROW(AllButOne(One(3, {Q(1, 2), Q(1, 2)})), PreconditionError);
  // u_2 = 9/10 exceeds T_1.
  EXPECT_THROW(AllButOne(One(3, {Q(1, 5), Q(9, 10), Q(19, 20)})),
               PreconditionError);
}

TEST(AllButOneTest, AbandoningAgentTime) {
  std::mt19937 rng(61);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const ProblemInstance base = testing::RandomInstance(rng, 7);
    const int m = base.agents();
    const std::vector<Rational>& u = base.inverse_speeds();
    if (u.size() < 2 || u.back() <= AverageBound(m, u)) continue;
    const testing::Crossing c = CrossingPoint(m, u);
    if (u[u.size() - 2] > c.value) continue;

    const ProblemInstance instance = One(m, u);
    const RbsSolution s = AllButOne(instance);
    EXPECT_EQ(s.makespan, c.value) << instance.ToString();
    EXPECT_EQ(c.y * u.back() + (Rational(1) - c.y) * u.front(), s.makespan);
    ASSERT_EQ(s.abandoned.size(), 1u);
    EXPECT_EQ(s.abandoned[0].bike, instance.bikes());
    EXPECT_EQ(s.abandoned[0].position, c.y);
    EXPECT_TRUE(CheckFeasible(s.schedule, instance).ok());
    EXPECT_TRUE(ComputeCompletionProfile(s.schedule, instance)
                    .AllFinalTimesEqual());
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(FindKRbsTest, Examples) {
  // T_1(2, {1/5, 19/20}): y* = 16/31, value 1/5 + (16/31)(3/4) = 91/155.
  const testing::Crossing c = CrossingPoint(2, {Q(1, 5), Q(19, 20)});
  ASSERT_EQ(c.y, Q(16, 31));
  ASSERT_EQ(c.value, Q(91, 155));
  EXPECT_EQ(FindKRbs(One(3, {Q(1, 5), Q(9, 10), Q(19, 20)})), 1);
  // With two bikes u_1 < T_1 always, so the premise fails.
  EXPECT_THROW(FindKRbs(One(3, {Q(1, 2), Q(4, 5)})), PreconditionError);
}

TEST(SolveRbsTest, CaseExamples) {
  const RbsSolution a = SolveRbs(One(3, {Q(1, 2), Q(1, 2)}));
  EXPECT_EQ(a.makespan, Q(2, 3));
  EXPECT_EQ(a.certificate.tight_bound, TightBound::kAverage);
  EXPECT_TRUE(a.abandoned.empty());

  const RbsSolution b = SolveRbs(One(3, {Q(1, 2), Q(4, 5)}));
  EXPECT_EQ(b.makespan, Q(17, 22));
  EXPECT_EQ(b.abandoned, (std::vector<AbandonedBike>{{2, Q(10, 11)}}));

  const ProblemInstance c_instance = One(3, {Q(1, 5), Q(9, 10), Q(19, 20)});
  const RbsSolution c = SolveRbs(c_instance);
  EXPECT_EQ(c.makespan, Q(9, 10));
  EXPECT_EQ(c.certificate.tight_bound, TightBound::kSecondSlowestBike);
  ASSERT_EQ(c.abandoned.size(), 1u);
  EXPECT_EQ(c.abandoned[0].bike, 3);
  EXPECT_TRUE(CheckFeasible(c.schedule, c_instance).ok());
  const CompletionProfile p = ComputeCompletionProfile(c.schedule, c_instance);
  // The solo rider of bike 2 sets the makespan; the pair finishes at T_1.
  std::vector<Rational> finals = p.final;
  std::sort(finals.begin(), finals.end());
  EXPECT_EQ(finals, (std::vector<Rational>{Q(91, 155), Q(91, 155), Q(9, 10)}));
}

TEST(SolveRbsTest, LimitDispatch) {
  const ProblemInstance bs(3, {Q(1, 2), Q(4, 5)});
  EXPECT_EQ(SolveRbs(bs).makespan, SolveBs(bs).makespan);
  EXPECT_TRUE(SolveRbs(bs).abandoned.empty());
  EXPECT_THROW(SolveRbs(bs.WithAbandonmentLimit(2)), UnsupportedError);
  EXPECT_THROW(SolveRbs(bs.WithAbandonmentLimit(5)), UnsupportedError);
}

TEST(SolveRbsTest, RandomInstancesHitTheirBound) {
  std::mt19937 rng(67);
  int cases[3] = {0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    const ProblemInstance base = testing::RandomInstance(rng, 7);
    const int m = base.agents();
    const std::vector<Rational>& u = base.inverse_speeds();
    const ProblemInstance instance = base.WithAbandonmentLimit(1);

    Rational expected;
    if (u.empty() || u.back() <= AverageBound(m, u)) {
      expected = AverageBound(m, u);
      ++cases[0];
    } else if (u[u.size() - 2] <= CrossingPoint(m, u).value) {
      expected = CrossingPoint(m, u).value;
      ++cases[1];
    } else {
      expected = u[u.size() - 2];
      ++cases[2];
    }

    const RbsSolution s = SolveRbs(instance);
    EXPECT_EQ(s.makespan, expected) << instance.ToString();
    EXPECT_EQ(s.certificate.Value(), expected);
    EXPECT_TRUE(CheckFeasible(s.schedule, instance).ok());
    EXPECT_EQ(ComputeCompletionProfile(s.schedule, instance).makespan,
              expected);
    EXPECT_LE(s.abandoned.size(), 1u);
    for (const AbandonedBike& a : s.abandoned) {
      EXPECT_LT(a.position, Q(1));
      EXPECT_EQ(s.abandonment.y[a.bike - 1], a.position);
    }
    EXPECT_LE(s.makespan, SolveBs(base).makespan);
    EXPECT_GE(s.makespan, BoundTY(instance, s.abandonment));
  }
  EXPECT_GT(cases[0], 0);
  EXPECT_GT(cases[1], 0);
  EXPECT_GT(cases[2], 0);
}

TEST(T1OrderTest, RemovingOneBikeAndAgent) {
  // For u_b > T(m, U) and 2 <= k <= b - 1: T_1(m, U) <= T_1(m - 1, U - u_k)
  // exactly when u_k <= T_1(m, U), with equality only at u_k = T_1(m, U).
  std::mt19937 rng(71);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const ProblemInstance base = testing::RandomInstance(rng, 7);
    const int m = base.agents();
    const std::vector<Rational>& u = base.inverse_speeds();
    const int b = static_cast<int>(u.size());
    if (b < 3 || m < 2 || u.back() <= AverageBound(m, u)) continue;
    const Rational t1 = BoundT1(base).value;
    ASSERT_EQ(t1, T1(m, u));
    for (int k = 2; k <= b - 1; ++k) {
      std::vector<Rational> rest = u;
      rest.erase(rest.begin() + (k - 1));
      const Rational smaller = BoundT1(ProblemInstance(m - 1, rest)).value;
      EXPECT_EQ(t1 <= smaller, u[k - 1] <= t1) << base.ToString();
      EXPECT_EQ(t1 == smaller, u[k - 1] == t1) << base.ToString();
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace bikeshare
