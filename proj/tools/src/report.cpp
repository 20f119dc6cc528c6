// Copyright 2026 The matroidkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroidkit/cli/report.hpp"

#include <algorithm>

namespace matroidkit::cli {

void Report::add(std::string check, std::string instance, bool pass, std::string witness) {
  lines_.push_back({std::move(check), std::move(instance), pass, std::move(witness)});
}

void Report::append(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

std::size_t Report::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(lines_.begin(), lines_.end(), [](const auto& l) { return !l.pass; }));
}

std::string format_line(const ReportLine& line) {
  std::string out = line.check + " " + line.instance + (line.pass ? " PASS" : " FAIL");
  if (!line.witness.empty()) out += " " + line.witness;
  return out;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& line : lines_) out += format_line(line) + "\n";
  return out;
}

}  // namespace matroidkit::cli
