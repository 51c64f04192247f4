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

#include "bikeshare/io.h"

#include <fstream>
#include <sstream>

#include "bikeshare/errors.h"
#include "json.hpp"

namespace bikeshare {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

Json Parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& Require(const Json& object, const char* key) {
  if (!object.is_object()) Fail("document", "expected a JSON object");
  const auto it = object.find(key);
  if (it == object.end()) Fail(key, "missing");
  return *it;
}

int ReadInt(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) Fail(field, "expected an integer");
  return value.get<int>();
}

// Strings are parsed as exact rationals; integers are accepted as-is.
Rational ReadRational(const Json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return Rational::Parse(value.get<std::string>());
    } catch (const ParseError& e) {
      Fail(field, e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_number()) {
    Fail(field, "fractional JSON numbers are inexact; write \"p/q\" instead");
  }
  Fail(field, "expected a rational string");
}

std::vector<Rational> ReadRationalList(const Json& value,
                                       const std::string& field) {
  if (!value.is_array()) Fail(field, "expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(ReadRational(value[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

Json RationalList(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(v.ToString());
  return out;
}

Json CertificateJson(const BoundCertificate& cert) {
  Json out = Json::object();
  out["T"] = cert.t_mu.ToString();
  out["T1"] = cert.t1_mu ? Json(cert.t1_mu->ToString()) : Json(nullptr);
  out["slowest"] = cert.slowest.ToString();
  out["second_slowest"] = cert.second_slowest
                              ? Json(cert.second_slowest->ToString())
                              : Json(nullptr);
  out["tight"] = TightBoundName(cert.tight_bound);
  return out;
}

std::optional<Rational> ReadOptionalRational(const Json& object,
                                             const char* key,
                                             const std::string& field) {
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  return ReadRational(*it, field + "." + key);
}

BoundCertificate ReadCertificate(const Json& value) {
  if (!value.is_object()) Fail("certificate", "expected an object");
  BoundCertificate cert;
  cert.t_mu = ReadRational(Require(value, "T"), "certificate.T");
  cert.t1_mu = ReadOptionalRational(value, "T1", "certificate");
  cert.slowest = ReadRational(Require(value, "slowest"), "certificate.slowest");
  cert.second_slowest =
      ReadOptionalRational(value, "second_slowest", "certificate");
  const Json& tight = Require(value, "tight");
  if (!tight.is_string()) Fail("certificate.tight", "expected a string");
  const auto tag = TightBoundFromName(tight.get<std::string>());
  if (!tag) Fail("certificate.tight", "unknown bound '" +
                                          tight.get<std::string>() + "'");
  cert.tight_bound = *tag;
  return cert;
}

}  // namespace

std::string ModeName(Mode mode) { return mode == Mode::kBs ? "bs" : "rbs"; }

Mode ParseMode(std::string_view name) {
  if (name == "bs") return Mode::kBs;
  if (name == "rbs") return Mode::kRbs;
  throw ParseError("mode: expected \"bs\" or \"rbs\", got \"" +
                   std::string(name) + "\"");
}

ProblemInstance ProblemFile::ToInstance() const {
  const int limit =
      abandonment_limit.value_or(mode == Mode::kRbs ? 1 : 0);
  if (mode == Mode::kBs && limit != 0) {
    throw InvalidArgumentError("bs mode does not allow abandoned bikes");
  }
  return ProblemInstance::FromSpeeds(agents, speeds, limit);
}

ProblemFile ParseProblemFile(std::string_view text) {
  const Json doc = Parse(text);
  ProblemFile problem;
  problem.agents = ReadInt(Require(doc, "agents"), "agents");
  if (problem.agents < 1) Fail("agents", "must be at least 1");
  problem.speeds = ReadRationalList(Require(doc, "speeds"), "speeds");
  for (std::size_t k = 0; k < problem.speeds.size(); ++k) {
    if (problem.speeds[k] <= Rational(1)) {
      Fail("speeds[" + std::to_string(k) + "]",
           "bike speed " + problem.speeds[k].ToString() +
               " must exceed the walking speed 1");
    }
  }
  if (static_cast<int>(problem.speeds.size()) > problem.agents) {
    Fail("speeds", "more bikes than agents");
  }
  if (const auto it = doc.find("mode"); it != doc.end()) {
    if (!it->is_string()) Fail("mode", "expected a string");
    problem.mode = ParseMode(it->get<std::string>());
  }
  if (const auto it = doc.find("abandonment_limit");
      it != doc.end() && !it->is_null()) {
    const int limit = ReadInt(*it, "abandonment_limit");
    if (limit < 0) Fail("abandonment_limit", "must be non-negative");
    problem.abandonment_limit = limit;
  }
  return problem;
}

std::string WriteProblemFile(const ProblemFile& problem) {
  Json doc = Json::object();
  doc["agents"] = problem.agents;
  doc["speeds"] = RationalList(problem.speeds);
  doc["mode"] = ModeName(problem.mode);
  if (problem.abandonment_limit) {
    doc["abandonment_limit"] = *problem.abandonment_limit;
  }
  return doc.dump(2) + "\n";
}

ProblemInstance ScheduleFile::Instance() const {
  return ProblemInstance(agents, inverse_speeds, abandonment_limit);
}

bool operator==(const ScheduleFile& a, const ScheduleFile& b) {
  return a.agents == b.agents && a.inverse_speeds == b.inverse_speeds &&
         a.abandonment_limit == b.abandonment_limit &&
         a.schedule == b.schedule && a.completion == b.completion &&
         a.makespan == b.makespan && a.certificate == b.certificate &&
         a.abandonment == b.abandonment && a.abandoned == b.abandoned;
}

ScheduleFile MakeScheduleFile(const ProblemInstance& instance,
                              const Schedule& schedule,
                              std::optional<BoundCertificate> certificate) {
  ScheduleFile file;
  file.agents = instance.agents();
  file.inverse_speeds = instance.inverse_speeds();
  file.abandonment_limit = instance.abandonment_limit();
  file.schedule = schedule;
  const CompletionProfile profile =
      ComputeCompletionProfile(schedule, instance);
  file.completion = profile.final;
  file.makespan = profile.makespan;
  file.certificate = std::move(certificate);
  file.abandonment = ComputeAbandonmentVector(schedule, instance);
  for (int k = 0; k < instance.bikes(); ++k) {
    if (file.abandonment.y[k] < Rational(1)) {
      file.abandoned.push_back({k + 1, file.abandonment.y[k]});
    }
  }
  return file;
}

ScheduleFile MakeScheduleFile(const ProblemInstance& instance,
                              const Solution& solution) {
  return MakeScheduleFile(instance, solution.schedule, solution.certificate);
}

std::string WriteScheduleFile(const ScheduleFile& file) {
  Json doc = Json::object();
  doc["agents"] = file.agents;
  doc["inverse_speeds"] = RationalList(file.inverse_speeds);
  doc["abandonment_limit"] = file.abandonment_limit;
  doc["partition"] = RationalList(file.schedule.partition().values());
  doc["matrix"] = file.schedule.matrix().ToRows();
  if (file.schedule.waits()) {
    const WaitMatrix& waits = *file.schedule.waits();
    Json rows = Json::array();
    for (int i = 0; i < waits.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < waits.cols(); ++j) row.push_back(waits(i, j).ToString());
      rows.push_back(std::move(row));
    }
    doc["waits"] = std::move(rows);
  }
  doc["completion"] = RationalList(file.completion);
  doc["makespan"] = file.makespan.ToString();
  if (file.certificate) doc["certificate"] = CertificateJson(*file.certificate);
  doc["abandonment"] = RationalList(file.abandonment.y);
  Json abandoned = Json::array();
  for (const AbandonedBike& a : file.abandoned) {
    abandoned.push_back({{"bike", a.bike}, {"position", a.position.ToString()}});
  }
  doc["abandoned"] = std::move(abandoned);
  return doc.dump(2) + "\n";
}

ScheduleFile ParseScheduleFile(std::string_view text) {
  const Json doc = Parse(text);
  ScheduleFile file;
  file.agents = ReadInt(Require(doc, "agents"), "agents");
  file.inverse_speeds =
      ReadRationalList(Require(doc, "inverse_speeds"), "inverse_speeds");
  if (const auto it = doc.find("abandonment_limit"); it != doc.end()) {
    file.abandonment_limit = ReadInt(*it, "abandonment_limit");
  }

  std::vector<Rational> partition =
      ReadRationalList(Require(doc, "partition"), "partition");
  const Json& matrix_json = Require(doc, "matrix");
  if (!matrix_json.is_array()) Fail("matrix", "expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < matrix_json.size(); ++i) {
    const Json& row = matrix_json[i];
    const std::string field = "matrix[" + std::to_string(i) + "]";
    if (!row.is_array()) Fail(field, "expected an array");
    std::vector<int> labels;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int label =
          ReadInt(row[j], field + "[" + std::to_string(j) + "]");
      if (label < 0) Fail(field, "negative bike label");
      labels.push_back(label);
    }
    rows.push_back(std::move(labels));
  }
  if (static_cast<int>(rows.size()) != file.agents) {
    Fail("matrix", "has " + std::to_string(rows.size()) + " rows for " +
                       std::to_string(file.agents) + " agents");
  }

  try {
    ScheduleMatrix matrix =
        rows.empty() ? ScheduleMatrix() : ScheduleMatrix::FromRows(rows);
    std::optional<WaitMatrix> waits;
    if (const auto it = doc.find("waits"); it != doc.end() && !it->is_null()) {
      if (!it->is_array() || static_cast<int>(it->size()) != matrix.rows()) {
        Fail("waits", "expected one row per agent");
      }
      waits = WaitMatrix(matrix.rows(), matrix.cols());
      for (int i = 0; i < matrix.rows(); ++i) {
        const std::string field = "waits[" + std::to_string(i) + "]";
        const std::vector<Rational> row = ReadRationalList((*it)[i], field);
        if (static_cast<int>(row.size()) != matrix.cols()) {
          Fail(field, "expected one entry per column");
        }
        for (int j = 0; j < matrix.cols(); ++j) (*waits)(i, j) = row[j];
      }
    }
    file.schedule = Schedule(PartitionVector(std::move(partition)),
                             std::move(matrix), std::move(waits));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(std::string("schedule: ") + e.what());
  }

  if (const auto it = doc.find("completion"); it != doc.end()) {
    file.completion = ReadRationalList(*it, "completion");
  }
  if (const auto it = doc.find("makespan"); it != doc.end()) {
    file.makespan = ReadRational(*it, "makespan");
  }
  if (const auto it = doc.find("certificate");
      it != doc.end() && !it->is_null()) {
    file.certificate = ReadCertificate(*it);
  }
  if (const auto it = doc.find("abandonment"); it != doc.end()) {
    file.abandonment.y = ReadRationalList(*it, "abandonment");
  }
  if (const auto it = doc.find("abandoned"); it != doc.end()) {
    if (!it->is_array()) Fail("abandoned", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const Json& entry = (*it)[k];
      const std::string field = "abandoned[" + std::to_string(k) + "]";
      file.abandoned.push_back(
          {ReadInt(Require(entry, "bike"), field + ".bike"),
           ReadRational(Require(entry, "position"), field + ".position")});
    }
  }
  return file;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  out << contents;
  if (!out) throw InvalidArgumentError("failed writing " + path);
}

}  // namespace bikeshare
