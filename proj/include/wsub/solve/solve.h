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

#ifndef WSUB_SOLVE_SOLVE_H_
#define WSUB_SOLVE_SOLVE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "wsub/core/set_function.h"
#include "wsub/core/subset.h"
#include "wsub/matroid/matroid.h"

namespace wsub {

struct TraceStep {
  int step = 0;
  // Greedy: {u}. Local search: {u, v} for the swap S + u - v.
  std::vector<int> chosen;
  double value = 0.0;
};

struct Certificate {
  std::string algorithm;
  std::vector<std::pair<std::string, std::string>> params;
  std::string note;
};

struct SolveResult {
  Subset selected{0};
  double value = 0.0;
  std::int64_t iterations = 0;
  std::vector<TraceStep> trace;
  Certificate certificate;
  bool hit_iteration_limit = false;
};

struct OptResult {
  Subset optimum{0};
  double value = 0.0;
  std::int64_t enumerated = 0;
};

// p rounds, each adding the element with the largest f(S + u) (equivalently
// the largest marginal gain), smallest index on ties. Requires 0 <= p <= n
// and rejects functions declared non-normalized, negative or non-monotone.
absl::StatusOr<SolveResult> GreedyCardinality(const SetFunction& f, int p);

struct LocalSearchOptions {
  // Partial independent sets are extended with ExtendToBasis. When absent
  // the search starts from the greedy basis (largest f(S + u) among feasible
  // u, until no element can be added).
  std::optional<Subset> init;
  double epsilon = 0.0;
  std::int64_t max_iters = 1'000'000;
};

// Oblivious local search over the bases of m: applies the first swap, in
// order u ascending over U \ S then v ascending over S, such that S + u - v
// is independent and f(S + u - v) > (1 + epsilon) f(S), then rescans.
absl::StatusOr<SolveResult> LocalSearchMatroid(const SetFunction& f, const Matroid& m,
                                               const LocalSearchOptions& options = {});

enum class SizeRule { kAtMost, kExactly };

inline constexpr int kBruteForceCardinalityMaxN = 22;
inline constexpr int kBruteForceMatroidMaxN = 18;

// Exact maximum over |S| <= p (or |S| == p). The first maximizer in order of
// size, then increasing mask, is reported.
absl::StatusOr<OptResult> BruteForceCardinality(const SetFunction& f, int p,
                                                SizeRule rule = SizeRule::kAtMost);

// Exact maximum over the bases of m. Requires n <= 18 unless m is explicit.
absl::StatusOr<OptResult> BruteForceMatroid(const SetFunction& f, const Matroid& m);

}  // namespace wsub

#endif  // WSUB_SOLVE_SOLVE_H_
