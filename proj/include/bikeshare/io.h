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

// JSON problem and schedule files. Rationals are written as "p/q" strings.
//
// Problem file:
//   {"agents": 3, "speeds": ["2", "5/4"], "mode": "rbs",
//    "abandonment_limit": 1}
//
// Schedule file: agents, inverse_speeds, partition, matrix, optional waits,
// completion, makespan, optional certificate, abandonment_limit, abandonment,
// abandoned.

#ifndef BIKESHARE_IO_H_
#define BIKESHARE_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bikeshare/bs.h"
#include "bikeshare/model.h"

namespace bikeshare {

enum class Mode { kBs, kRbs };

std::string ModeName(Mode mode);
// Throws ParseError on anything but "bs" or "rbs".
Mode ParseMode(std::string_view name);

struct ProblemFile {
  int agents = 0;
  std::vector<Rational> speeds;  // v_k > 1
  Mode mode = Mode::kBs;
  std::optional<int> abandonment_limit;

  // Limit defaults to 0 in bs mode and 1 in rbs mode.
  ProblemInstance ToInstance() const;
};

// Throws ParseError naming the offending field. Speeds must be strings or
// integers; fractional JSON numbers are refused because they are not exact.
ProblemFile ParseProblemFile(std::string_view text);
std::string WriteProblemFile(const ProblemFile& problem);

struct ScheduleFile {
  int agents = 0;
  std::vector<Rational> inverse_speeds;
  int abandonment_limit = 0;
  Schedule schedule;
  std::vector<Rational> completion;
  Rational makespan;
  std::optional<BoundCertificate> certificate;
  AbandonmentVector abandonment;
  std::vector<AbandonedBike> abandoned;

  ProblemInstance Instance() const;
  friend bool operator==(const ScheduleFile&, const ScheduleFile&);
};

// Fills completion, makespan and abandonment from the schedule.
ScheduleFile MakeScheduleFile(const ProblemInstance& instance,
                              const Schedule& schedule,
                              std::optional<BoundCertificate> certificate);
ScheduleFile MakeScheduleFile(const ProblemInstance& instance,
                              const Solution& solution);

std::string WriteScheduleFile(const ScheduleFile& file);
// Throws ParseError on malformed JSON or missing fields.
ScheduleFile ParseScheduleFile(std::string_view text);

// Whole-file helpers. Throw ParseError when the file cannot be read and
// InvalidArgumentError when it cannot be written.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace bikeshare

#endif  // BIKESHARE_IO_H_
