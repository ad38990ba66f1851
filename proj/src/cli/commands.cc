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

#include "wsub/cli/commands.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "absl/strings/str_cat.h"
#include "wsub/bounds/bounds.h"
#include "wsub/core/checks.h"
#include "wsub/io/instance.h"
#include "wsub/io/serialize.h"
#include "wsub/solve/solve.h"
#include "wsub/zoo/functions.h"
#include "wsub/zoo/random.h"

namespace wsub::cli {
namespace {

using io::Json;
using Clock = std::chrono::steady_clock;

constexpr std::int64_t kDefaultSamples = 10000;

class Envelope {
 public:
  explicit Envelope(const char* command) : start_(Clock::now()) {
    json_ = {{"command", command}, {"version", kVersion}};
  }
  Json& operator[](const char* key) { return json_[key]; }
  void Write(std::ostream& out) {
    json_["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start_).count();
    out << json_.dump(2) << '\n';
  }

 private:
  Clock::time_point start_;
  Json json_;
};

int Fail(const absl::Status& status, std::ostream& err) {
  err << "error: " << status.message() << '\n';
  return kExitUsage;
}

int Usage(const std::string& message, std::ostream& err) {
  err << "error: " << message << '\n';
  return kExitUsage;
}

absl::StatusOr<io::Instance> LoadInstance(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
    buffer << in.rdbuf();
  }
  return io::ParseInstanceText(buffer.str());
}

// OPT / ALG, with 0/0 read as 1.
double Ratio(double opt, double alg) {
  if (alg > 0) return opt / alg;
  return opt == 0 ? 1.0 : std::numeric_limits<double>::infinity();
}

bool WithinBound(double ratio, double bound) { return ratio <= bound * (1.0 + 1e-12); }

absl::StatusOr<Subset> SubsetOf(const std::vector<int>& elements, int n) {
  Subset s(n);
  for (int e : elements) {
    if (e < 0 || e >= n) {
      return absl::InvalidArgumentError(absl::StrCat("element ", e, " outside [0, ", n, ")"));
    }
    s.Insert(e);
  }
  return s;
}

absl::StatusOr<CheckReport> CheckPair(const SetFunction& f, const std::string& property,
                                      const Subset& s, const Subset& t) {
  Property kind;
  InequalitySides sides;
  if (property == "weakly_submodular") {
    kind = Property::kWeaklySubmodular;
    sides = WeakSubmodularSides(f, s, t);
  } else if (property == "submodular") {
    kind = Property::kSubmodular;
    sides = SubmodularSides(f, s, t);
  } else {
    return absl::InvalidArgumentError(
        "--pair-s/--pair-t apply to submodular and weakly_submodular only");
  }
  CheckReport r{kind, Exhaustive{}, 1, true, std::nullopt};
  if (ViolatesInequality(sides.lhs, sides.rhs, RelativeTolerance(f.domain()))) {
    r.passed = false;
    r.witness = ViolationWitness{kind, s, t, sides.lhs, sides.rhs, std::nullopt};
  }
  return r;
}

absl::StatusOr<CheckReport> RunProperty(const SetFunction& f, const std::string& property,
                                        const CheckOptions& options) {
  if (property == "normalized_nonnegative") return CheckNormalizedNonnegative(f, options);
  if (property == "monotone") return CheckMonotone(f, options);
  if (property == "submodular") return CheckSubmodular(f, options);
  if (property == "weakly_submodular") return CheckWeaklySubmodular(f, options);
  return absl::InvalidArgumentError(absl::StrCat("unknown property '", property, "'"));
}

}  // namespace

int RunCheck(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  Envelope report("check");
  absl::StatusOr<io::Instance> inst = LoadInstance(args.instance);
  if (!inst.ok()) return Fail(inst.status(), err);
  const SetFunction& f = inst->function;

  const std::string mode = args.mode.value_or(inst->options.mode.value_or("exhaustive"));
  CheckOptions options;
  options.jobs = std::max(1, args.jobs);
  if (mode == "sampled") {
    options.mode = Sampled{args.samples.value_or(inst->options.samples.value_or(kDefaultSamples)),
                           args.seed.value_or(inst->options.seed.value_or(0))};
  } else if (mode != "exhaustive") {
    return Usage(absl::StrCat("unknown mode '", mode, "' (exhaustive, sampled)"), err);
  }

  std::vector<std::string> properties = {args.property};
  if (args.property == "all") {
    properties = {"normalized_nonnegative", "monotone", "submodular", "weakly_submodular"};
  }
  if (args.pair_s.has_value() != args.pair_t.has_value()) {
    return Usage("--pair-s and --pair-t must be given together", err);
  }

  Json results = Json::array();
  bool passed = true;
  for (const std::string& property : properties) {
    absl::StatusOr<CheckReport> r;
    if (args.pair_s) {
      absl::StatusOr<Subset> s = SubsetOf(*args.pair_s, f.n());
      absl::StatusOr<Subset> t = SubsetOf(*args.pair_t, f.n());
      if (!s.ok()) return Fail(s.status(), err);
      if (!t.ok()) return Fail(t.status(), err);
      r = CheckPair(f, property, *s, *t);
    } else {
      r = RunProperty(f, property, options);
    }
    if (!r.ok()) return Fail(r.status(), err);
    Json j = io::ToJson(*r);
    if (args.pair_s) j["mode"] = {{"kind", "pair"}};
    if (r->witness) j["witness"] = io::WithLabels(j["witness"], f.ground());
    results.push_back(j);
    passed = passed && r->passed;
  }
  report["instance"] = args.instance;
  report["function"] = {{"name", f.name()}, {"n", f.n()}};
  report["results"] = results;
  report["passed"] = passed;
  report.Write(out);
  return passed ? kExitOk : kExitViolation;
}

int RunMaximize(const MaximizeArgs& args, std::ostream& out, std::ostream& err) {
  Envelope report("maximize");
  absl::StatusOr<io::Instance> inst = LoadInstance(args.instance);
  if (!inst.ok()) return Fail(inst.status(), err);
  const SetFunction& f = inst->function;
  if (!inst->constraint) return Usage("maximize needs a \"constraint\" in the instance", err);
  const auto* card = std::get_if<io::CardinalityConstraint>(&*inst->constraint);
  const auto* matroid = std::get_if<Matroid>(&*inst->constraint);

  report["instance"] = args.instance;
  report["algorithm"] = args.algorithm;
  double alg_value = 0.0;
  std::optional<double> bound;
  if (args.algorithm == "greedy") {
    if (card == nullptr) return Usage("greedy needs a cardinality constraint", err);
    absl::StatusOr<SolveResult> r = GreedyCardinality(f, card->p);
    if (!r.ok()) return Fail(r.status(), err);
    report["result"] = io::ToJson(*r);
    alg_value = r->value;
    if (card->p >= 2) bound = *bounds::GreedyRatio(card->p);
  } else if (args.algorithm == "local") {
    absl::StatusOr<Matroid> m =
        matroid != nullptr ? absl::StatusOr<Matroid>(*matroid) : Matroid::Uniform(f.n(), card->p);
    if (!m.ok()) return Fail(m.status(), err);
    LocalSearchOptions options;
    options.epsilon = args.epsilon.value_or(inst->options.epsilon.value_or(0.0));
    options.max_iters = args.max_iters;
    absl::StatusOr<SolveResult> r = LocalSearchMatroid(f, *m, options);
    if (!r.ok()) return Fail(r.status(), err);
    report["result"] = io::ToJson(*r);
    alg_value = r->value;
    if (m->rank() >= 2) bound = bounds::LocalSearchBound(m->rank())->value;
  } else if (args.algorithm == "exact") {
    absl::StatusOr<OptResult> r = card != nullptr ? BruteForceCardinality(f, card->p)
                                                  : BruteForceMatroid(f, *matroid);
    if (!r.ok()) return Fail(r.status(), err);
    report["result"] = io::ToJson(*r);
    report.Write(out);
    return kExitOk;
  } else {
    return Usage(absl::StrCat("unknown algorithm '", args.algorithm, "' (greedy, local, exact)"),
                 err);
  }

  bool ok = true;
  if (args.compare_exact) {
    absl::StatusOr<OptResult> opt = card != nullptr ? BruteForceCardinality(f, card->p)
                                                    : BruteForceMatroid(f, *matroid);
    if (!opt.ok()) return Fail(opt.status(), err);
    const double ratio = Ratio(opt->value, alg_value);
    Json cmp = {{"optimum", io::ToJson(*opt)},
                {"ratio", std::isfinite(ratio) ? Json(ratio) : Json(nullptr)},
                {"opt_dominates", opt->value >= alg_value}};
    ok = opt->value >= alg_value;
    if (bound) {
      cmp["bound"] = *bound;
      cmp["within_bound"] = WithinBound(ratio, *bound);
      ok = ok && WithinBound(ratio, *bound);
    }
    report["comparison"] = cmp;
  }
  report.Write(out);
  return ok ? kExitOk : kExitViolation;
}

int RunBounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
  Envelope report("bounds");
  bounds::BoundKind kind;
  if (args.kind == "greedy") {
    kind = bounds::BoundKind::kGreedy;
  } else if (args.kind == "local") {
    kind = bounds::BoundKind::kLocalSearch;
  } else {
    return Usage(absl::StrCat("unknown bound kind '", args.kind, "' (greedy, local)"), err);
  }
  absl::StatusOr<bounds::Arithmetic> arithmetic = bounds::ParseArithmetic(args.precision);
  if (!arithmetic.ok()) return Fail(arithmetic.status(), err);
  absl::StatusOr<bounds::RatioTable> table =
      bounds::MakeRatioTable(kind, args.from, args.to.value_or(args.from), args.step, *arithmetic);
  if (!table.ok()) return Fail(table.status(), err);
  if (args.format == "csv") {
    out << bounds::ToCsv(*table);
    return kExitOk;
  }
  if (args.format != "json") return Usage("--format must be json or csv", err);
  report["table"] = io::ToJson(*table);
  report.Write(out);
  return kExitOk;
}

int RunCounterexamples(const FormatArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format != "json" && args.format != "csv") {
    return Usage("--format must be json or csv", err);
  }
  Envelope report("counterexamples");
  struct Row {
    std::string name;
    std::vector<int> s, t;
    double lhs, rhs, expected_lhs, expected_rhs;
    bool exhaustive_fails;
  };
  std::vector<Row> rows;

  auto weak_row = [&](const std::string& name, const SetFunction& f, std::vector<int> s,
                      std::vector<int> t, double expected_lhs, double expected_rhs) {
    const InequalitySides sides =
        WeakSubmodularSides(f, Subset::FromIndices(f.n(), s), Subset::FromIndices(f.n(), t));
    absl::StatusOr<CheckReport> check = CheckWeaklySubmodular(f);
    rows.push_back({name, std::move(s), std::move(t), sides.lhs, sides.rhs, expected_lhs,
                    expected_rhs, check.ok() && !check->passed});
  };

  // Star with n leaves R = {0..n-1}, centres s = n and t = n + 1.
  constexpr int kLeaves = 3;
  weak_row("max_cut_star", *zoo::MaxCut(zoo::StarCounterexample(kLeaves)), {0, 1, 2, 3},
           {0, 1, 2, 4}, 2 * kLeaves * kLeaves + 2 * kLeaves, 2 * kLeaves * kLeaves + 4 * kLeaves);
  constexpr double kB = 1.0;
  weak_row("threshold_k3", *zoo::Threshold(5, 3, kB), {0, 1}, {0, 2}, 0.0, kB);
  // |S|^4 with a = |S\T| = 4, b = |T\S| = 4, c = |SnT| = 1.
  weak_row("cardinality_power_4", *zoo::RawCardinalityProfile(9, {0, 0, 0, 0, 1}),
           {0, 1, 2, 3, 4}, {0, 5, 6, 7, 8}, 6250.0, 6570.0);
  weak_row("supermodular_pair", *zoo::SupermodularPair(kB), {0, 2}, {1, 2}, 0.0, kB);

  const ExactSides family = CardinalityFamilySides(CardinalityProfile::Power(4), 4, 4, 1);
  const bool family_ok = family.lhs == 6250 && family.rhs == 6570;

  bool all = family_ok;
  Json fixtures = Json::array();
  std::ostringstream csv;
  csv << "name,lhs,rhs,expected_lhs,expected_rhs,reproduced\n";
  for (const Row& r : rows) {
    const bool reproduced = r.lhs == r.expected_lhs && r.rhs == r.expected_rhs && r.lhs < r.rhs &&
                            r.exhaustive_fails;
    all = all && reproduced;
    fixtures.push_back({{"name", r.name},
                        {"property", "weakly_submodular"},
                        {"S", r.s},
                        {"T", r.t},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"expected_lhs", r.expected_lhs},
                        {"expected_rhs", r.expected_rhs},
                        {"exhaustive_check_fails", r.exhaustive_fails},
                        {"reproduced", reproduced}});
    csv << r.name << ',' << r.lhs << ',' << r.rhs << ',' << r.expected_lhs << ','
        << r.expected_rhs << ',' << (reproduced ? "true" : "false") << '\n';
  }
  if (args.format == "csv") {
    out << csv.str();
  } else {
    report["fixtures"] = fixtures;
    report["cardinality_family_abc"] = {{"abc", {4, 4, 1}},
                                        {"lhs", static_cast<std::int64_t>(family.lhs)},
                                        {"rhs", static_cast<std::int64_t>(family.rhs)},
                                        {"reproduced", family_ok}};
    report["all_reproduced"] = all;
    report.Write(out);
  }
  return all ? kExitOk : kExitViolation;
}

int RunBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.instances < 1) return Usage("--instances must be >= 1", err);
  if (args.n < 2 || args.n > 16) return Usage("--n must be in [2, 16]", err);
  if (args.k < 2 || args.k > args.n) return Usage("--k must be in [2, n]", err);
  if (args.algorithm != "greedy" && args.algorithm != "local") {
    return Usage("--algorithm must be greedy or local", err);
  }
  if (args.matroid != "uniform" && args.matroid != "partition") {
    return Usage("--matroid must be uniform or partition", err);
  }
  if (args.suite != "dispersion" && args.suite != "segmentation" && args.suite != "coverage" &&
      args.suite != "msd") {
    return Usage(absl::StrCat("unknown suite '", args.suite,
                              "' (dispersion, segmentation, coverage, msd)"),
                 err);
  }
  if (args.format != "json" && args.format != "csv") {
    return Usage("--format must be json or csv", err);
  }
  Envelope report("bench");

  // Blocks {e : e mod k == b}, cap 1 each.
  absl::StatusOr<Matroid> matroid = [&]() -> absl::StatusOr<Matroid> {
    if (args.matroid == "uniform") return Matroid::Uniform(args.n, args.k);
    std::vector<std::vector<int>> blocks(args.k);
    for (int e = 0; e < args.n; ++e) blocks[e % args.k].push_back(e);
    return Matroid::Partition(args.n, std::move(blocks), std::vector<int>(args.k, 1));
  }();
  if (!matroid.ok()) return Fail(matroid.status(), err);

  std::mt19937_64 master(args.seed);
  std::vector<std::uint64_t> seeds(args.instances);
  for (auto& s : seeds) s = master();

  struct Outcome {
    absl::Status status;
    double alg = 0.0, opt = 0.0;
  };
  std::vector<Outcome> outcomes(args.instances);

  auto run = [&](int index) -> Outcome {
    std::mt19937_64 rng(seeds[index]);
    absl::StatusOr<SetFunction> f;
    if (args.suite == "dispersion") {
      f = zoo::MetricDispersion(zoo::RandomMetric(args.n, rng));
    } else if (args.suite == "segmentation") {
      f = zoo::Segmentation(zoo::RandomSegmentationMatrix(args.n, args.n, rng));
    } else if (args.suite == "coverage") {
      zoo::CoverageInstance c = zoo::RandomCoverage(args.n, 2 * args.n, rng);
      f = zoo::Coverage(c.item_weights, c.covers);
    } else {
      std::vector<double> w(args.n);
      for (double& x : w) x = static_cast<double>(zoo::UniformInt(rng, 0, 100));
      absl::StatusOr<SetFunction> g = zoo::Linear(w);
      if (!g.ok()) return {g.status()};
      f = zoo::MsdObjective(*g, zoo::RandomMetric(args.n, rng));
    }
    if (!f.ok()) return {f.status()};
    Outcome o;
    if (args.algorithm == "greedy") {
      absl::StatusOr<SolveResult> r = GreedyCardinality(*f, args.k);
      absl::StatusOr<OptResult> opt = BruteForceCardinality(*f, args.k);
      if (!r.ok()) return {r.status()};
      if (!opt.ok()) return {opt.status()};
      o.alg = r->value;
      o.opt = opt->value;
    } else {
      absl::StatusOr<SolveResult> r = LocalSearchMatroid(*f, *matroid);
      absl::StatusOr<OptResult> opt = BruteForceMatroid(*f, *matroid);
      if (!r.ok()) return {r.status()};
      if (!opt.ok()) return {opt.status()};
      o.alg = r->value;
      o.opt = opt->value;
    }
    return o;
  };

  {
    const int jobs = std::max(1, std::min(args.jobs, args.instances));
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (int i = w; i < args.instances; i += jobs) outcomes[i] = run(i);
      });
    }
  }

  const double bound = args.algorithm == "greedy" ? *bounds::GreedyRatio(args.k)
                                                  : bounds::LocalSearchBound(args.k)->value;
  double max_ratio = 0.0;
  bool ok = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "index,seed,alg,opt,ratio\n";
  for (int i = 0; i < args.instances; ++i) {
    const Outcome& o = outcomes[i];
    if (!o.status.ok()) return Fail(o.status, err);
    const double ratio = Ratio(o.opt, o.alg);
    max_ratio = std::max(max_ratio, ratio);
    ok = ok && o.opt >= o.alg && WithinBound(ratio, bound);
    rows.push_back({{"index", i},
                    {"seed", seeds[i]},
                    {"alg", o.alg},
                    {"opt", o.opt},
                    {"ratio", std::isfinite(ratio) ? Json(ratio) : Json(nullptr)}});
    csv << i << ',' << seeds[i] << ',' << o.alg << ',' << o.opt << ',' << ratio << '\n';
  }
  if (args.format == "csv") {
    out << csv.str();
    return ok ? kExitOk : kExitViolation;
  }
  report["suite"] = args.suite;
  report["algorithm"] = args.algorithm;
  if (args.algorithm == "local") report["matroid"] = args.matroid;
  report["n"] = args.n;
  report["k"] = args.k;
  report["seed"] = args.seed;
  report["instances"] = rows;
  report["aggregate"] = {{"max_ratio", std::isfinite(max_ratio) ? Json(max_ratio) : Json(nullptr)},
                         {"bound", bound},
                         {"within_bound", ok}};
  report.Write(out);
  return ok ? kExitOk : kExitViolation;
}

}  // namespace wsub::cli
