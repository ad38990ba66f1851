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

#include "wsub/core/ground_set.h"

#include <algorithm>
#include <unordered_set>

#include "absl/strings/str_cat.h"
#include "wsub/core/subset.h"

namespace wsub {

absl::StatusOr<GroundSet> GroundSet::Indexed(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    return absl::InvalidArgumentError(
        absl::StrCat("ground set size ", n, " outside [0, ", kMaxGroundSize, "]"));
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

absl::StatusOr<GroundSet> GroundSet::FromLabels(std::vector<std::string> labels) {
  if (labels.size() > static_cast<size_t>(kMaxGroundSize)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ground set has ", labels.size(), " elements; limit is ", kMaxGroundSize));
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& l : labels) {
    if (!seen.insert(l).second) {
      return absl::InvalidArgumentError(absl::StrCat("duplicate ground set label '", l, "'"));
    }
  }
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::IndexOf(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

}  // namespace wsub
