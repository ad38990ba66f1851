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

#ifndef WSUB_ZOO_RANDOM_H_
#define WSUB_ZOO_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

#include "wsub/zoo/data.h"

// Seeded instance generators. All draws go through std::mt19937_64 and
// simple modular reduction, so a seed yields the same instance on every
// platform.

namespace wsub::zoo {

// Uniform integer in [lo, hi].
std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

// Uniform double in [0, 1) with 53 random bits.
double UniformUnit(std::mt19937_64& rng);

// Symmetric random weights completed to a metric by all-pairs shortest
// paths. Integer weights are drawn from [1, max_weight]; otherwise reals
// from (0, max_weight].
DistanceMatrix RandomMetric(int n, std::mt19937_64& rng, bool integral = true,
                            int max_weight = 100);

// Integer entries in [-magnitude, magnitude]; rows with a negative sum are
// negated so every row sum is non-negative.
SegmentationMatrix RandomSegmentationMatrix(int rows, int cols, std::mt19937_64& rng,
                                            int magnitude = 10);

struct CoverageInstance {
  std::vector<double> item_weights;
  std::vector<std::vector<int>> covers;
};

// Each ground element covers each item independently with probability 1/3.
CoverageInstance RandomCoverage(int n, int items, std::mt19937_64& rng, int max_weight = 10);

}  // namespace wsub::zoo

#endif  // WSUB_ZOO_RANDOM_H_
