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

#include <ostream>

#include "CLI11.hpp"
#include "wsub/cli/commands.h"

namespace wsub::cli {

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly submodular set functions: checks, maximization and ratio bounds", "wsub"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CheckArgs check;
  std::string check_mode;
  std::int64_t check_samples = 0;
  std::uint64_t check_seed = 0;
  std::vector<int> pair_s, pair_t;
  CLI::App* c = app.add_subcommand("check", "Test a property of an instance's function");
  c->add_option("instance", check.instance, "Instance JSON file, or - for stdin")->required();
  c->add_option("--property", check.property,
                "normalized_nonnegative | monotone | submodular | weakly_submodular | all")
      ->capture_default_str();
  auto* c_mode = c->add_option("--mode", check_mode, "exhaustive | sampled");
  auto* c_samples = c->add_option("--samples", check_samples, "Pairs drawn in sampled mode");
  auto* c_seed = c->add_option("--seed", check_seed, "Sampler seed");
  c->add_option("--jobs", check.jobs, "Worker threads for the pair scan")->capture_default_str();
  auto* c_ps = c->add_option("--pair-s", pair_s, "Evaluate only this S (comma separated)")
                   ->delimiter(',');
  auto* c_pt = c->add_option("--pair-t", pair_t, "Evaluate only this T (comma separated)")
                   ->delimiter(',');

  MaximizeArgs maximize;
  double epsilon = 0.0;
  std::string compare;
  CLI::App* m = app.add_subcommand("maximize", "Run greedy, local search or brute force");
  m->add_option("instance", maximize.instance, "Instance JSON file, or - for stdin")->required();
  m->add_option("--algorithm", maximize.algorithm, "greedy | local | exact")->capture_default_str();
  auto* m_eps = m->add_option("--epsilon", epsilon, "Local search improvement threshold");
  m->add_option("--max-iters", maximize.max_iters, "Local search swap limit")
      ->capture_default_str();
  m->add_option("--compare", compare, "exact: also compute the optimum and the ratio")
      ->check(CLI::IsMember({"exact"}));

  BoundsArgs bounds;
  int to = 0;
  CLI::App* b = app.add_subcommand("bounds", "Tabulate approximation ratio bounds");
  b->add_option("kind", bounds.kind, "greedy | local")->required();
  b->add_option("--from", bounds.from, "First parameter (p or s)")->capture_default_str();
  auto* b_to = b->add_option("--to", to, "Last parameter (default: --from)");
  b->add_option("--step", bounds.step, "Parameter step")->capture_default_str();
  b->add_option("--precision", bounds.precision, "double | float50 | rational")
      ->capture_default_str();
  b->add_option("--format", bounds.format, "json | csv")->capture_default_str();

  FormatArgs counter;
  CLI::App* x = app.add_subcommand("counterexamples", "Replay the fixed violation fixtures");
  x->add_option("--format", counter.format, "json | csv")->capture_default_str();

  BenchArgs bench;
  CLI::App* n = app.add_subcommand("bench", "Algorithm-versus-optimum ratios on random instances");
  n->add_option("--suite", bench.suite, "dispersion | segmentation | coverage | msd")
      ->capture_default_str();
  n->add_option("--algorithm", bench.algorithm, "greedy | local")->capture_default_str();
  n->add_option("--matroid", bench.matroid, "uniform | partition (local only)")
      ->capture_default_str();
  n->add_option("--instances", bench.instances, "Number of instances")->capture_default_str();
  n->add_option("--n", bench.n, "Ground set size")->capture_default_str();
  n->add_option("--k", bench.k, "Cardinality p or matroid rank s")->capture_default_str();
  n->add_option("--seed", bench.seed, "Master seed")->capture_default_str();
  n->add_option("--jobs", bench.jobs, "Worker threads")->capture_default_str();
  n->add_option("--format", bench.format, "json | csv")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (c->parsed()) {
    if (c_mode->count()) check.mode = check_mode;
    if (c_samples->count()) check.samples = check_samples;
    if (c_seed->count()) check.seed = check_seed;
    if (c_ps->count()) check.pair_s = pair_s;
    if (c_pt->count()) check.pair_t = pair_t;
    return RunCheck(check, out, err);
  }
  if (m->parsed()) {
    if (m_eps->count()) maximize.epsilon = epsilon;
    maximize.compare_exact = compare == "exact";
    return RunMaximize(maximize, out, err);
  }
  if (b->parsed()) {
    if (b_to->count()) bounds.to = to;
    return RunBounds(bounds, out, err);
  }
  if (x->parsed()) return RunCounterexamples(counter, out, err);
  return RunBench(bench, out, err);
}

}  // namespace wsub::cli
