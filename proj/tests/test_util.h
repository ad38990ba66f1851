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

#ifndef WSUB_TESTS_TEST_UTIL_H_
#define WSUB_TESTS_TEST_UTIL_H_

#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>
#include <optional>
#include <utility>

#include "absl/status/statusor.h"
#include "gtest/gtest.h"
#include "wsub/core/set_function.h"
#include "wsub/core/subset.h"
#include "wsub/matroid/matroid.h"

namespace wsub::testing {

// Unwraps a StatusOr, aborting the test binary on error.
template <class T>
T Must(absl::StatusOr<T> v) {
  if (!v.ok()) {
    ADD_FAILURE() << v.status();
    std::abort();
  }
  return *std::move(v);
}

struct NaivePair {
  Mask s = 0;
  Mask t = 0;
};

// First violating unordered pair S <= T in lexicographic mask order, by
// direct evaluation with no tolerance beyond `slack`.
template <class Lhs, class Rhs>
std::optional<NaivePair> NaiveFirstViolation(const SetFunction& f, Lhs lhs, Rhs rhs,
                                             double rel_tol) {
  const Mask count = Mask{1} << f.n();
  for (Mask s = 0; s < count; ++s) {
    for (Mask t = s; t < count; ++t) {
      const double l = lhs(f, s, t);
      const double r = rhs(f, s, t);
      double scale = 1.0;
      if (std::abs(l) > scale) scale = std::abs(l);
      if (std::abs(r) > scale) scale = std::abs(r);
      if (l < r - rel_tol * scale) return NaivePair{s, t};
    }
  }
  return std::nullopt;
}

inline double Card(Mask m) { return static_cast<double>(std::popcount(m)); }

inline std::optional<NaivePair> NaiveFirstWeakViolation(const SetFunction& f, double rel_tol) {
  return NaiveFirstViolation(
      f,
      [](const SetFunction& g, Mask s, Mask t) { return Card(t) * g(s) + Card(s) * g(t); },
      [](const SetFunction& g, Mask s, Mask t) {
        return Card(s & t) * g(s | t) + Card(s | t) * g(s & t);
      },
      rel_tol);
}

inline std::optional<NaivePair> NaiveFirstSubmodularViolation(const SetFunction& f,
                                                              double rel_tol) {
  return NaiveFirstViolation(
      f, [](const SetFunction& g, Mask s, Mask t) { return g(s) + g(t); },
      [](const SetFunction& g, Mask s, Mask t) { return g(s | t) + g(s & t); }, rel_tol);
}

// Cycle matroid of a multigraph: an edge set is independent iff it is a
// forest. Element e is edges[e].
inline Matroid GraphicMatroid(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<Mask> forests;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (int e = 0; e < n && acyclic; ++e) {
      if (!(s >> e & 1)) continue;
      const int a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) forests.push_back(s);
  }
  return Must(Matroid::Explicit(n, forests));
}

// Small matroids on 4..8 elements, rotating through uniform, partition and
// graphic families.
inline Matroid RandomSmallMatroid(int index, std::mt19937_64& rng) {
  const int n = 4 + static_cast<int>(rng() % 5);
  switch (index % 3) {
    case 0:
      return Must(Matroid::Uniform(n, 1 + static_cast<int>(rng() % (n - 1))));
    case 1: {
      const int k = 1 + static_cast<int>(rng() % 3);
      std::vector<std::vector<int>> blocks(k);
      for (int e = 0; e < n; ++e) blocks[e < k ? e : rng() % k].push_back(e);
      std::vector<int> caps;
      for (const auto& b : blocks) caps.push_back(1 + static_cast<int>(rng() % b.size()));
      return Must(Matroid::Partition(n, blocks, caps));
    }
    default: {
      const int vertices = 3 + static_cast<int>(rng() % 3);
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        const int a = static_cast<int>(rng() % vertices);
        int b = static_cast<int>(rng() % (vertices - 1));
        if (b >= a) ++b;
        edges.emplace_back(a, b);
      }
      return GraphicMatroid(vertices, edges);
    }
  }
}

}  // namespace wsub::testing

#endif  // WSUB_TESTS_TEST_UTIL_H_
