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

#ifndef WSUB_ZOO_WELFARE_H_
#define WSUB_ZOO_WELFARE_H_

#include <vector>

#include "absl/status/statusor.h"
#include "wsub/core/set_function.h"
#include "wsub/matroid/matroid.h"

namespace wsub::zoo {

// Agents with valuations over a shared item universe U.
struct WelfareInstance {
  std::vector<SetFunction> valuations;
};

// Allocation as a single set over U' = agents x U. Element (i, u) has index
// i * |U| + u and means "item u goes to agent i".
struct WelfareReduction {
  SetFunction objective;  // f'(S') = sum_i v_i(pi_i(S'))
  Matroid matroid;        // one block {(i, u) : i} per item, capacity 1
  int agents = 0;
  int items = 0;
};

// Requires at least one agent, a common item universe, every valuation
// normalized and non-negative where declared, and agents * items <= 64.
// With more than one agent the objective claims weak submodularity only when
// it is also claimed monotone and submodular; weakly submodular valuations
// alone do not make f' weakly submodular.
absl::StatusOr<WelfareReduction> ReduceWelfare(const WelfareInstance& w);

// Items received by `agent` under the allocation `s` over U'.
Mask AgentBundle(const WelfareReduction& r, Mask s, int agent);

}  // namespace wsub::zoo

#endif  // WSUB_ZOO_WELFARE_H_
