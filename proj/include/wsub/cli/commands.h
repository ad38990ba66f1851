// Copyright 2026 The Authors.
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

#ifndef WSUB_CLI_COMMANDS_H_
#define WSUB_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wsub::cli {

inline constexpr char kVersion[] = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

struct CheckArgs {
  std::string instance;  // path, or "-" for stdin
  std::string property = "weakly_submodular";
  std::optional<std::string> mode;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  // When both are set only this pair is evaluated.
  std::optional<std::vector<int>> pair_s;
  std::optional<std::vector<int>> pair_t;
};

struct MaximizeArgs {
  std::string instance;
  std::string algorithm = "greedy";  // greedy | local | exact
  std::optional<double> epsilon;
  std::int64_t max_iters = 1'000'000;
  bool compare_exact = false;
};

struct BoundsArgs {
  std::string kind = "greedy";  // greedy | local
  int from = 2;
  std::optional<int> to;
  int step = 1;
  std::string precision = "float50";
  std::string format = "json";
};

struct BenchArgs {
  std::string suite = "dispersion";  // dispersion | segmentation | coverage | msd
  std::string algorithm = "greedy";  // greedy | local
  std::string matroid = "uniform";   // uniform | partition, for local
  int instances = 100;
  int n = 8;
  int k = 3;  // p for greedy, rank for local
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format = "json";
};

struct FormatArgs {
  std::string format = "json";
};

// Each command writes one report to `out` and diagnostics to `err`, and
// returns the process exit code.
int RunCheck(const CheckArgs& args, std::ostream& out, std::ostream& err);
int RunMaximize(const MaximizeArgs& args, std::ostream& out, std::ostream& err);
int RunBounds(const BoundsArgs& args, std::ostream& out, std::ostream& err);
int RunCounterexamples(const FormatArgs& args, std::ostream& out, std::ostream& err);
int RunBench(const BenchArgs& args, std::ostream& out, std::ostream& err);

// Argument parsing and dispatch for the `wsub` tool.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsub::cli

#endif  // WSUB_CLI_COMMANDS_H_
