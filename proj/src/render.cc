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

#include "bikeshare/render.h"

#include <cstdio>
#include <sstream>
#include <vector>

namespace bikeshare {
namespace {

constexpr double kLeft = 90.0;
constexpr double kTrack = 720.0;
constexpr double kTop = 50.0;
constexpr double kLane = 36.0;
constexpr double kBar = 22.0;

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                "#76b7b2", "#edc948", "#b07aa1", "#ff9da7",
                                "#9c755f"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double X(const Rational& position) {
  return kLeft + kTrack * position.ToDouble();
}

}  // namespace

std::string RenderSvg(const ScheduleFile& file) {
  const Schedule& schedule = file.schedule;
  const ScheduleMatrix& matrix = schedule.matrix();
  const int m = matrix.rows();
  const int n = matrix.cols();
  const double height = kTop + kLane * m + 50.0;
  const double width = kLeft + kTrack + 40.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(width)
     << "\" height=\"" << Num(height) << "\" viewBox=\"0 0 " << Num(width)
     << " " << Num(height) << "\" font-family=\"sans-serif\">\n";
  os << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" "
        "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">"
        "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" "
        "stroke-width=\"2\"/></pattern></defs>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << Num(kLeft) << "\" y=\"24\" font-size=\"14\">"
     << "m = " << file.agents << ", b = " << file.inverse_speeds.size()
     << ", makespan " << Escape(file.makespan.ToString());
  if (file.certificate) {
    os << " = " << Escape(TightBoundName(file.certificate->tight_bound));
  }
  os << "</text>\n";

  // Column boundaries in position space.
  std::vector<Rational> bound(n + 1);
  for (int j = 0; j < n; ++j) bound[j + 1] = bound[j] + schedule.partition()[j];

  for (int i = 0; i < m; ++i) {
    const double y = kTop + kLane * i;
    os << "<text x=\"" << Num(kLeft - 10) << "\" y=\"" << Num(y + kBar * 0.7)
       << "\" font-size=\"12\" text-anchor=\"end\">agent " << i + 1;
    if (i < static_cast<int>(file.completion.size())) {
      os << " (" << Escape(file.completion[i].ToString()) << ")";
    }
    os << "</text>\n";
    for (int j = 0; j < n; ++j) {
      if (schedule.partition()[j].IsZero()) continue;
      const int label = matrix(i, j);
      const double x0 = X(bound[j]);
      const double x1 = X(bound[j + 1]);
      const char* fill =
          label == kWalk ? "#e6e6e6"
                         : kPalette[(label - 1) % std::size(kPalette)];
      const std::string name =
          label == kWalk ? "walk" : "bike " + std::to_string(label);
      os << "<rect x=\"" << Num(x0) << "\" y=\"" << Num(y) << "\" width=\""
         << Num(x1 - x0) << "\" height=\"" << Num(kBar) << "\" fill=\"" << fill
         << "\" stroke=\"white\"><title>" << name << " over ["
         << bound[j].ToString() << ", " << bound[j + 1].ToString()
         << "]</title></rect>\n";
      os << "<text x=\"" << Num((x0 + x1) / 2) << "\" y=\""
         << Num(y + kBar * 0.7) << "\" font-size=\"10\" text-anchor=\"middle\""
         << (label == kWalk ? "" : " fill=\"white\"") << ">" << name
         << "</text>\n";
    }
    if (schedule.waits()) {
      for (int j = 0; j < n; ++j) {
        const Rational& wait = (*schedule.waits())(i, j);
        if (wait.Sign() <= 0) continue;
        const double x = X(bound[j + 1]);
        os << "<rect x=\"" << Num(x - 4) << "\" y=\"" << Num(y - 3)
           << "\" width=\"8\" height=\"" << Num(kBar + 6)
           << "\" fill=\"url(#hatch)\" stroke=\"#555\"><title>wait "
           << wait.ToString() << "</title></rect>\n";
      }
    }
  }

  // The agent who last rode an abandoned bike leaves it at its position.
  for (const AbandonedBike& a : file.abandoned) {
    int rider = -1;
    for (int j = n - 1; j >= 0 && rider < 0; --j) {
      rider = matrix.RiderOf(a.bike, j);
    }
    if (rider < 0) continue;
    const double x = X(a.position);
    const double y = kTop + kLane * rider;
    os << "<path d=\"M " << Num(x) << " " << Num(y - 8) << " l -6 -8 l 12 0 z\""
       << " fill=\"#c00\"><title>bike " << a.bike << " abandoned at "
       << a.position.ToString() << "</title></path>\n";
    os << "<line x1=\"" << Num(x) << "\" y1=\"" << Num(y - 8) << "\" x2=\""
       << Num(x) << "\" y2=\"" << Num(y + kBar) << "\" stroke=\"#c00\" "
       << "stroke-dasharray=\"3 2\"/>\n";
  }

  const double axis = kTop + kLane * m + 8;
  os << "<line x1=\"" << Num(kLeft) << "\" y1=\"" << Num(axis) << "\" x2=\""
     << Num(kLeft + kTrack) << "\" y2=\"" << Num(axis)
     << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double x = kLeft + kTrack * t / 4.0;
    os << "<line x1=\"" << Num(x) << "\" y1=\"" << Num(axis) << "\" x2=\""
       << Num(x) << "\" y2=\"" << Num(axis + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << Num(x) << "\" y=\"" << Num(axis + 18)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << Num(t / 4.0)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bikeshare
