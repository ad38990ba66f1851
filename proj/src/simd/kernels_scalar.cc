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

#include <algorithm>
#include <cmath>

#include "wsub/simd/kernels.h"

namespace wsub::simd {
namespace {

inline bool Violates(double lhs, double rhs, double rel_tol) {
  const double tol = rel_tol * std::max(std::max(1.0, std::fabs(lhs)), std::fabs(rhs));
  return lhs < rhs - tol;
}

std::int64_t FirstWeakViolation(const PairScan& scan) {
  const double fs = scan.values[scan.s];
  const double cs = scan.cardinality[scan.s];
  for (std::uint32_t t = scan.t_begin; t < scan.t_end; ++t) {
    const std::uint32_t u = scan.s | t;
    const std::uint32_t i = scan.s & t;
    const double lhs = scan.cardinality[t] * fs + cs * scan.values[t];
    const double rhs = scan.cardinality[i] * scan.values[u] + scan.cardinality[u] * scan.values[i];
    if (Violates(lhs, rhs, scan.rel_tol)) return t;
  }
  return -1;
}

std::int64_t FirstSubmodularViolation(const PairScan& scan) {
  const double fs = scan.values[scan.s];
  for (std::uint32_t t = scan.t_begin; t < scan.t_end; ++t) {
    const double lhs = fs + scan.values[t];
    const double rhs = scan.values[scan.s | t] + scan.values[scan.s & t];
    if (Violates(lhs, rhs, scan.rel_tol)) return t;
  }
  return -1;
}

double GatherSum(const double* row, const std::int32_t* idx, int count) {
  double sum = 0.0;
  for (int k = 0; k < count; ++k) sum += row[idx[k]];
  return sum;
}

double ColumnMaxSum(const double* m, int cols, const std::int32_t* rows, int nrows) {
  if (nrows == 0) return 0.0;
  double sum = 0.0;
  for (int j = 0; j < cols; ++j) {
    double best = m[static_cast<std::ptrdiff_t>(rows[0]) * cols + j];
    for (int r = 1; r < nrows; ++r) {
      best = std::max(best, m[static_cast<std::ptrdiff_t>(rows[r]) * cols + j]);
    }
    sum += best;
  }
  return sum;
}

}  // namespace

const Kernels& ScalarKernels() {
  static const Kernels kScalar{Isa::kScalar,         "scalar",  &FirstWeakViolation,
                               &FirstSubmodularViolation, &GatherSum, &ColumnMaxSum};
  return kScalar;
}

}  // namespace wsub::simd
