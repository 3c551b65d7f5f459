// Copyright 2026 The posebench Authors
//
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace posebench::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  ///< validation or domain failure
  kIoError = 2,
};

struct RunConfig {
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> predictions;
  std::filesystem::path out_dir;
  std::vector<double> ratios = {0.05, 0.075, 0.1};
  std::optional<std::string> view;  ///< restrict to one view
  double age_split_days = 42.0;
  std::size_t curve_points = 200;
  std::optional<std::uint64_t> seed;
  std::set<std::string> formats = {"csv", "json", "svg"};
  bool mcnemar = false;

  // select-frames / split-folds
  std::filesystem::path features;
  std::size_t k = 30;
  std::size_t n_folds = 5;
  double validation_fraction = 0.0;

  bool wants(const std::string& format) const { return formats.count(format) > 0; }
};

/// Each command writes its report to `out`, diagnostics to `err`, and files
/// under `config.out_dir`. Library exceptions propagate; run_command maps
/// them to exit codes.
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_agreement(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_select_frames(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_split_folds(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs `verb` and converts exceptions to the exit-code contract:
/// 0 success, 1 validation/domain error, 2 I/O error.
int run_command(const std::string& verb, const RunConfig& config, std::ostream& out,
                std::ostream& err);

/// Full command line (argv[0] included). Used by main() and by tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// File-system-safe rendering of a model name.
std::string safe_name(const std::string& name);

}  // namespace posebench::cli
