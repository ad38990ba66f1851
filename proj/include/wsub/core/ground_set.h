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

#ifndef WSUB_CORE_GROUND_SET_H_
#define WSUB_CORE_GROUND_SET_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace wsub {

// An ordered finite universe. Element i has label labels()[i]; the index
// order is fixed at construction and drives all tie-breaking.
class GroundSet {
 public:
  GroundSet() = default;

  // Elements labelled "0", "1", ..., "n-1".
  static absl::StatusOr<GroundSet> Indexed(int n);
  static absl::StatusOr<GroundSet> FromLabels(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> IndexOf(std::string_view label) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

}  // namespace wsub

#endif  // WSUB_CORE_GROUND_SET_H_
