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

// Command-line front end.
//
//   bikeshare solve  --in problem.json --out schedule.json [--mode bs|rbs]
//                    [--abandon L]
//   bikeshare verify --schedule schedule.json --problem problem.json
//   bikeshare render --schedule schedule.json --out timeline.svg
//   bikeshare oracle --in problem.json [--abandon L]
//
// Exit codes: 0 success, 1 infeasible schedule, 2 unreadable or invalid
// input, 3 unsupported request, 4 internal verification failure.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bikeshare/bs.h"
#include "bikeshare/errors.h"
#include "bikeshare/io.h"
#include "bikeshare/model.h"
#include "bikeshare/normalize.h"
#include "bikeshare/oracle.h"
#include "bikeshare/rbs.h"
#include "bikeshare/render.h"

namespace bikeshare {
namespace {

enum ExitCode {
  kOk = 0,
  kInfeasible = 1,
  kBadInput = 2,
  kUnsupported = 3,
  kInternal = 4,
};

ProblemInstance LoadProblem(const std::string& path,
                            const std::optional<std::string>& mode,
                            const std::optional<int>& abandon) {
  ProblemFile problem = ParseProblemFile(ReadFile(path));
  if (mode) {
    // A different mode on the command line also replaces the file's limit.
    const Mode chosen = ParseMode(*mode);
    if (chosen != problem.mode) problem.abandonment_limit.reset();
    problem.mode = chosen;
  }
  if (abandon) problem.abandonment_limit = *abandon;
  return problem.ToInstance();
}

int Solve(const std::string& in, const std::string& out,
          const std::optional<std::string>& mode,
          const std::optional<int>& abandon) {
  const ProblemInstance instance = LoadProblem(in, mode, abandon);
  const Solution solution = instance.abandonment_limit() == 0
                                ? SolveBs(instance)
                                : SolveRbs(instance);
  const ScheduleFile file = MakeScheduleFile(instance, solution);
  // The solvers certify their output; this guards the file we hand out.
  if (!CheckFeasible(file.schedule, instance).ok() ||
      file.makespan != solution.makespan) {
    throw InternalError("solver output failed re-verification");
  }
  WriteFile(out, WriteScheduleFile(file));
  std::cout << "makespan " << solution.makespan << "\n"
            << "tight " << TightBoundName(solution.certificate.tight_bound)
            << "\n";
  for (const AbandonedBike& a : solution.abandoned) {
    std::cout << "abandoned bike " << a.bike << " at " << a.position << "\n";
  }
  return kOk;
}

int Verify(const std::string& schedule_path, const std::string& problem_path) {
  const ScheduleFile file = ParseScheduleFile(ReadFile(schedule_path));
  const ProblemInstance instance =
      ParseProblemFile(ReadFile(problem_path)).ToInstance();
  const Schedule& schedule = file.schedule;
  if (schedule.agents() != instance.agents() ||
      schedule.matrix().MaxLabel() > instance.bikes()) {
    throw InvalidArgumentError("schedule does not fit the problem (" +
                               instance.ToString() + ")");
  }

  bool ok = true;
  const FeasibilityReport report = CheckFeasible(schedule, instance);
  for (const Violation& v : report.violations) {
    std::cout << v.ToString() << "\n";
    ok = false;
  }
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  std::cout << "makespan " << profile.makespan << "\n";
  if (profile.makespan != file.makespan) {
    std::cout << "recorded makespan " << file.makespan << " does not match\n";
    ok = false;
  }
  const AbandonmentVector y = ComputeAbandonmentVector(schedule, instance);
  int abandoned = 0;
  for (int k = 0; k < instance.bikes(); ++k) {
    if (y.y[k] < Rational(1)) ++abandoned;
  }
  if (abandoned > instance.abandonment_limit()) {
    std::cout << abandoned << " bikes left behind, limit is "
              << instance.abandonment_limit() << "\n";
    ok = false;
  }
  if (report.ok()) {
    const int swaps = CountSwapSwitches(schedule, instance);
    if (swaps > 0) {
      std::cout << "note: not in standard form (" << swaps
                << " swap-switches)\n";
    }
  }
  std::cout << (ok ? "feasible" : "infeasible") << "\n";
  return ok ? kOk : kInfeasible;
}

int Render(const std::string& schedule_path, const std::string& out) {
  const ScheduleFile file = ParseScheduleFile(ReadFile(schedule_path));
  WriteFile(out, RenderSvg(file));
  return kOk;
}

int Oracle(const std::string& in, const std::optional<int>& abandon) {
  ProblemFile problem = ParseProblemFile(ReadFile(in));
  if (abandon) {
    problem.abandonment_limit = *abandon;
    if (*abandon > 0) problem.mode = Mode::kRbs;
  }
  const ProblemInstance instance = problem.ToInstance();
  const EnumerationBudget budget = EnumerationBudget::FromEnvironment();
  const OracleResult result = instance.abandonment_limit() == 0
                                  ? BruteForceBs(instance, budget)
                                  : BruteForceRbs(instance, budget);
  std::cout << "makespan " << result.makespan << "\n"
            << "matrices " << result.matrices_examined << "\n";
  for (int i = 0; i < result.witness.agents(); ++i) {
    std::cout << "row " << i + 1 << ":";
    for (int j = 0; j < result.witness.size(); ++j) {
      std::cout << " " << result.witness.matrix()(i, j);
    }
    std::cout << "\n";
  }
  std::cout << "partition:";
  for (const Rational& x : result.witness.partition()) std::cout << " " << x;
  std::cout << "\n";
  return kOk;
}

}  // namespace
}  // namespace bikeshare

int main(int argc, char** argv) {
  using namespace bikeshare;  // NOLINT(build/namespaces)

  CLI::App app{"Bike sharing schedules over [0, 1]"};
  app.require_subcommand(1);

  std::string in, out, schedule, problem;
  std::optional<std::string> mode;
  std::optional<int> abandon;

  CLI::App* solve = app.add_subcommand("solve", "Compute an optimal schedule");
  solve->add_option("--in", in, "Problem JSON")->required();
  solve->add_option("--out", out, "Schedule JSON to write")->required();
  solve->add_option("--mode", mode, "bs or rbs (default: from the file)")
      ->check(CLI::IsMember({"bs", "rbs"}));
  solve->add_option("--abandon", abandon, "Abandonment limit");

  CLI::App* verify =
      app.add_subcommand("verify", "Check a schedule against a problem");
  verify->add_option("--schedule", schedule, "Schedule JSON")->required();
  verify->add_option("--problem", problem, "Problem JSON")->required();

  CLI::App* render = app.add_subcommand("render", "Draw a schedule as SVG");
  render->add_option("--schedule", schedule, "Schedule JSON")->required();
  render->add_option("--out", out, "SVG file to write")->required();

  CLI::App* oracle =
      app.add_subcommand("oracle", "Exhaustive search on a tiny instance");
  oracle->add_option("--in", in, "Problem JSON")->required();
  oracle->add_option("--abandon", abandon, "Abandonment limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (solve->parsed()) return Solve(in, out, mode, abandon);
    if (verify->parsed()) return Verify(schedule, problem);
    if (render->parsed()) return Render(schedule, out);
    if (oracle->parsed()) return Oracle(in, abandon);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const BudgetExceededError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
