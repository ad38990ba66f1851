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

#ifndef WSUB_ZOO_FUNCTIONS_H_
#define WSUB_ZOO_FUNCTIONS_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "wsub/core/set_function.h"
#include "wsub/core/subset.h"
#include "wsub/simd/kernels.h"
#include "wsub/zoo/data.h"

// Builders for the set-function families studied here. Each returns an
// immutable oracle over an indexed ground set {0..n-1} with the claims that
// are known to hold for the family. Builders use the integer value domain
// whenever every input number is an integer.

namespace wsub::zoo {

// f(S) = sum of w_e over e in S. Weights must be non-negative.
absl::StatusOr<SetFunction> Linear(std::vector<double> weights,
                                   const simd::Kernels& kernels = simd::ActiveKernels());

// Ground element e covers the items covers[e]; f(S) is the total weight of
// the items covered by S.
absl::StatusOr<SetFunction> Coverage(std::vector<double> item_weights,
                                     const std::vector<std::vector<int>>& covers);

// d(S) = sum over unordered pairs {u, v} in S of d(u, v).
absl::StatusOr<SetFunction> MetricDispersion(
    const DistanceMatrix& d, const simd::Kernels& kernels = simd::ActiveKernels());

// d(S, T) = sum over u in S, v in T of d(u, v), for disjoint S and T.
absl::StatusOr<double> CrossDispersion(const DistanceMatrix& d, const Subset& s,
                                       const Subset& t);

// sigma(S) = sum_j max_{i in S} M(i, j), with sigma(empty) = 0.
absl::StatusOr<SetFunction> Segmentation(
    const SegmentationMatrix& m, const simd::Kernels& kernels = simd::ActiveKernels());

// f(S) = |S|^k for k in 0..3 (k = 0 is the indicator of non-empty sets, so
// that f is normalized).
absl::StatusOr<SetFunction> CardinalityPower(int n, int k);

// f(S) = sum_k coeffs[k] |S|^k. Requires coeffs[0] == 0, all coefficients
// non-negative, and degree <= 3.
absl::StatusOr<SetFunction> CardinalityPolynomial(int n, std::vector<double> coeffs);

// Same form without any restriction, for counterexample studies. Claims
// nothing.
absl::StatusOr<SetFunction> RawCardinalityProfile(int n, std::vector<double> coeffs);

// f(S) = B if |S| >= k, else 0.
absl::StatusOr<SetFunction> Threshold(int n, int k, double b);

// g(S) = sum_i alphas[i] * fs[i](S). All functions share one ground set.
absl::StatusOr<SetFunction> LinearCombination(std::span<const SetFunction> fs,
                                              std::vector<double> alphas);

// g(S) + d(S).
absl::StatusOr<SetFunction> MsdObjective(const SetFunction& g, const DistanceMatrix& d);

// f'(S) = f(U \ S). Claims nothing.
SetFunction Complement(const SetFunction& f);

// Equal to f except at the full set, where it is 0. Requires that f is not
// declared non-monotone and that f(S*) > 0 for some proper, non-empty S*.
absl::StatusOr<SetFunction> ZeroAtTop(const SetFunction& f);

// Weight of the edges crossing (S, V \ S).
absl::StatusOr<SetFunction> MaxCut(const Graph& g);

// Over {a1, a2, b}: f(S) = B iff {a1, a2} is contained in S, else 0.
absl::StatusOr<SetFunction> SupermodularPair(double b);

}  // namespace wsub::zoo

#endif  // WSUB_ZOO_FUNCTIONS_H_
