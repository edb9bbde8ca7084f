// Copyright 2026 The hidcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Subcommands of the hidcorr CLI. Each returns the rendered output and an
// exit code: 0 all checks hold, 1 a guaranteed inequality is violated,
// 2 bad input or usage (thrown as hidcorr::UsageError / DomainError and
// mapped by the caller).

#include <cstdint>
#include <string>
#include <vector>

#include "hidcorr/io.hpp"

namespace hidcorr::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20170507;

struct AnalysisRequest {
  std::string subcommand;
  std::string input;
  std::string dims;  // comma list
  Index split = 1;
  std::vector<double> qs;
  std::vector<std::string> given;  // "axis=value"
  std::string grid;
  std::uint64_t seed = kDefaultSeed;
  Index count = 10000;
  std::string out;
};

struct CommandResult {
  std::string output;
  std::string error;  // set when exit_code == 2
  int exit_code = 0;
};

// Accumulates checks; every judged number carries its tolerance.
class Report {
 public:
  explicit Report(const AnalysisRequest& request);

  // guaranteed = false marks a check that is informative only (e.g. Tsallis
  // subadditivity for q < 1) and does not affect the exit code.
  void add_check(const std::string& name, double value, bool holds, double tolerance,
                 bool guaranteed = true, bool infinite = false);

  io::Json& section(const std::string& name) { return body_[name]; }

  bool guaranteed_checks_hold() const noexcept { return ok_; }
  io::Json to_json() const;
  CommandResult finish() const;

 private:
  io::Json head_;
  io::Json body_ = io::Json::object();
  io::Json checks_ = io::Json::array();
  bool ok_ = true;
};

io::Json request_echo(const AnalysisRequest& request);

CommandResult analyze_prob(const AnalysisRequest& request);
CommandResult analyze_dm(const AnalysisRequest& request);
// JSON lines, one record per direction.
CommandResult tomogram_sweep(const AnalysisRequest& request);
CommandResult demo_four_level(const AnalysisRequest& request);
CommandResult fuzz(const AnalysisRequest& request);

// Dispatches on request.subcommand and maps input errors to exit code 2.
CommandResult run(const AnalysisRequest& request);

}  // namespace hidcorr::cli
