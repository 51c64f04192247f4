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

#ifndef BIKESHARE_RENDER_H_
#define BIKESHARE_RENDER_H_

#include <string>

#include "bikeshare/io.h"

namespace bikeshare {

// Timeline over positions [0, 1] with one lane per agent. Segments carry the
// bike label ("bike k" or "walk"), waits are hatched blocks at the end of
// their interval, and abandoned bikes get a marker where they are left.
// The output depends only on `file`.
std::string RenderSvg(const ScheduleFile& file);

}  // namespace bikeshare

#endif  // BIKESHARE_RENDER_H_
