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

#ifndef WSUB_IO_INSTANCE_H_
#define WSUB_IO_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "wsub/core/ground_set.h"
#include "wsub/core/set_function.h"
#include "wsub/matroid/matroid.h"

// Instance files:
//
//   {"ground_set": 5 | ["a", "b", ...],
//    "function": {"type": "...", "params": {...}},
//    "constraint": {"type": "cardinality", "p": 3} | <matroid>,
//    "options": {"mode": "exhaustive", "seed": 1, "samples": 1000,
//                "epsilon": 0.0, "precision": "float50"}}
//
// Function types and their params:
//   linear            {"weights": [w...]}
//   coverage          {"item_weights": [w...], "covers": [[item...] per element]}
//   dispersion        {"distances": [[d...]...]} or {"unit": true}
//   segmentation      {"matrix": [[m...] per element]}
//   cardinality_poly  {"coeffs": [c0, c1, ...]} or {"power": k}; "raw": true
//                     lifts the degree and sign restrictions
//   threshold         {"k": k, "B": b}
//   combination       {"terms": [{"alpha": a, "function": {...}}...]}
//   complement        {"function": {...}}
//   zero_at_top       {"function": {...}}
//   max_cut           {"edges": [[u, v, w]...]} or {"star": n}
//   supermodular_pair {"B": b}
//
// Matroids: {"type": "uniform", "rank": s}
//           {"type": "partition", "blocks": [[e...]...], "caps": [c...]}
//           {"type": "explicit", "independent_sets": [[e...]...]}

namespace wsub::io {

using Json = nlohmann::json;

struct CardinalityConstraint {
  int p = 0;
};

using Constraint = std::variant<CardinalityConstraint, Matroid>;

struct InstanceOptions {
  std::optional<std::string> mode;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
  std::optional<double> epsilon;
  std::optional<std::string> precision;
};

struct Instance {
  SetFunction function;
  std::optional<Constraint> constraint;
  InstanceOptions options;
};

absl::StatusOr<GroundSet> ParseGroundSet(const Json& j);
absl::StatusOr<SetFunction> ParseFunction(const Json& j, const GroundSet& ground);
absl::StatusOr<Matroid> ParseMatroid(const Json& j, int n);
absl::StatusOr<Constraint> ParseConstraint(const Json& j, int n);
absl::StatusOr<Instance> ParseInstance(const Json& j);
// Malformed JSON is an InvalidArgument error.
absl::StatusOr<Instance> ParseInstanceText(std::string_view text);

}  // namespace wsub::io

#endif  // WSUB_IO_INSTANCE_H_
