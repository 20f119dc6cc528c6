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

#ifndef MATROIDKIT_CLI_REPORT_HPP_
#define MATROIDKIT_CLI_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace matroidkit::cli {

struct ReportLine {
  std::string check;
  std::string instance;
  bool pass = true;
  std::string witness;
};

/// Ordered check results, rendered one per line as
/// `<check-id> <instance-id> PASS|FAIL [witness]`.
class Report {
 public:
  void add(std::string check, std::string instance, bool pass, std::string witness = {});
  void append(const Report& other);

  const std::vector<ReportLine>& lines() const noexcept { return lines_; }
  std::size_t failures() const noexcept;
  bool all_pass() const noexcept { return failures() == 0; }

  std::string to_text() const;

 private:
  std::vector<ReportLine> lines_;
};

std::string format_line(const ReportLine& line);

}  // namespace matroidkit::cli

#endif  // MATROIDKIT_CLI_REPORT_HPP_
