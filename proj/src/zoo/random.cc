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

#include "wsub/zoo/random.h"

#include <algorithm>

namespace wsub::zoo {

std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

DistanceMatrix RandomMetric(int n, std::mt19937_64& rng, bool integral, int max_weight) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double w = integral ? static_cast<double>(UniformInt(rng, 1, max_weight))
                                : (1.0 - UniformUnit(rng)) * max_weight;
      d[u][v] = d[v][u] = w;
    }
  }
  // Metric completion.
  for (int k = 0; k < n; ++k) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][k] + d[k][v]);
    }
  }
  return *DistanceMatrix::Create(d);
}

SegmentationMatrix RandomSegmentationMatrix(int rows, int cols, std::mt19937_64& rng,
                                            int magnitude) {
  std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
  for (auto& row : m) {
    double sum = 0.0;
    for (double& x : row) {
      x = static_cast<double>(UniformInt(rng, -magnitude, magnitude));
      sum += x;
    }
    if (sum < 0) {
      for (double& x : row) x = x == 0.0 ? 0.0 : -x;
    }
  }
  return *SegmentationMatrix::Create(m);
}

CoverageInstance RandomCoverage(int n, int items, std::mt19937_64& rng, int max_weight) {
  CoverageInstance inst;
  for (int i = 0; i < items; ++i) {
    inst.item_weights.push_back(static_cast<double>(UniformInt(rng, 1, max_weight)));
  }
  inst.covers.resize(n);
  for (int e = 0; e < n; ++e) {
    for (int i = 0; i < items; ++i) {
      if (rng() % 3 == 0) inst.covers[e].push_back(i);
    }
  }
  return inst;
}

}  // namespace wsub::zoo
