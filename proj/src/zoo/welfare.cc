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

#include "wsub/zoo/welfare.h"

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "absl/strings/str_cat.h"

namespace wsub::zoo {
namespace {

class WelfareOracle final : public SetFunctionOracle {
 public:
  WelfareOracle(std::vector<SetFunction> v, int items)
      : v_(std::move(v)), items_(items) {}
  double Value(Mask s) const override {
    double total = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      total += v_[i]((s >> (i * items_)) & FullMask(items_));
    }
    return total;
  }

 private:
  std::vector<SetFunction> v_;
  int items_;
};

}  // namespace

absl::StatusOr<WelfareReduction> ReduceWelfare(const WelfareInstance& w) {
  if (w.valuations.empty()) return absl::InvalidArgumentError("welfare instance has no agents");
  const int agents = static_cast<int>(w.valuations.size());
  const int items = w.valuations[0].n();
  if (static_cast<long>(agents) * items > kMaxGroundSize) {
    return absl::InvalidArgumentError(absl::StrCat(agents, " agents x ", items,
                                                   " items exceeds ", kMaxGroundSize,
                                                   " ground elements"));
  }
  bool integral = true;
  Claims claims = w.valuations[0].claims();
  for (int i = 0; i < agents; ++i) {
    const SetFunction& v = w.valuations[i];
    if (!(v.ground() == w.valuations[0].ground())) {
      return absl::InvalidArgumentError(
          absl::StrCat("valuation ", i, " uses a different item universe"));
    }
    if (v.claims().normalized == false || v.claims().nonnegative == false) {
      return absl::InvalidArgumentError(
          absl::StrCat("valuation ", i, " is declared non-normalized or negative"));
    }
    integral = integral && v.domain() == ValueDomain::kInteger;
    for (auto field : {&Claims::normalized, &Claims::nonnegative, &Claims::monotone,
                       &Claims::submodular, &Claims::weakly_submodular}) {
      if (claims.*field != v.claims().*field) (claims.*field).reset();
    }
  }
  // A declared violation in some v_i need not survive the sum.
  for (auto field : {&Claims::monotone, &Claims::submodular, &Claims::weakly_submodular}) {
    if (claims.*field == false) (claims.*field).reset();
  }
  // Lifting through the projections keeps monotonicity and submodularity but
  // not weak submodularity, whose weights count every agent's elements. With
  // two agents and unit dispersion, S = {(0,0),(1,0)} and T = {(0,1),(1,0)}
  // give 0 on the left and 1 on the right. Only the implied claim remains.
  if (agents > 1) {
    claims.weakly_submodular.reset();
    if (claims.monotone == true && claims.submodular == true) claims.weakly_submodular = true;
  }

  std::vector<std::string> labels;
  std::vector<std::vector<int>> blocks(items);
  for (int i = 0; i < agents; ++i) {
    for (int u = 0; u < items; ++u) {
      labels.push_back(absl::StrCat(i, ":", w.valuations[0].ground().label(u)));
      blocks[u].push_back(i * items + u);
    }
  }
  absl::StatusOr<GroundSet> ground = GroundSet::FromLabels(std::move(labels));
  if (!ground.ok()) return ground.status();
  absl::StatusOr<Matroid> matroid =
      Matroid::Partition(agents * items, std::move(blocks), std::vector<int>(items, 1));
  if (!matroid.ok()) return matroid.status();
  SetFunction objective(*std::move(ground),
                        std::make_shared<WelfareOracle>(w.valuations, items),
                        integral ? ValueDomain::kInteger : ValueDomain::kReal, claims,
                        "welfare");
  return WelfareReduction{std::move(objective), *std::move(matroid), agents, items};
}

Mask AgentBundle(const WelfareReduction& r, Mask s, int agent) {
  return (s >> (agent * r.items)) & FullMask(r.items);
}

}  // namespace wsub::zoo
