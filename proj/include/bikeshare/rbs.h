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

// Optimal schedules when up to one bike may be left behind.

#ifndef BIKESHARE_RBS_H_
#define BIKESHARE_RBS_H_

#include "bikeshare/bs.h"
#include "bikeshare/model.h"

namespace bikeshare {

using RbsSolution = Solution;

// Largest q in [1, b] with u_q <= T(m_q, U_q). Throws PreconditionError when
// there is no bike.
int FindQ(const ProblemInstance& instance);

// Agent m rides the slowest bike up to y* and then the fastest bike, while
// the other agents form a group that absorbs one biker at a time. Everyone
// arrives at T_1(m, U). Requires u_b > T(m, U) and u_{b-1} <= T_1(m, U).
RbsSolution AllButOne(const ProblemInstance& instance);

// The interval lengths of AllButOne before normalization (z_1 = 1).
UnexpandedSchedule AllButOneUnexpanded(const ProblemInstance& instance);

// Smallest k in [1, b-2] with
// u_{b-k-1} <= T_1(m-k, U_{b-k-1} + {u_b}) <= u_{b-1}.
// Requires u_b > T(m, U) and u_{b-1} > T_1(m, U).
int FindKRbs(const ProblemInstance& instance);

// Dispatches on the abandonment limit: 0 solves the BS problem, 1 picks among
// AllMakeIt*, AllButOne and the second-slowest-bike split. Limits of two or
// more throw UnsupportedError.
RbsSolution SolveRbs(const ProblemInstance& instance);

}  // namespace bikeshare

#endif  // BIKESHARE_RBS_H_
