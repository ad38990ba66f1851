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

// Compiled with -mavx2 only; reached exclusively through the runtime
// dispatcher after a CPU feature check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "wsub/simd/kernels.h"

namespace wsub::simd {
namespace {

inline bool ViolatesScalar(double lhs, double rhs, double rel_tol) {
  const double tol = rel_tol * std::max(std::max(1.0, std::fabs(lhs)), std::fabs(rhs));
  return lhs < rhs - tol;
}

inline __m256d Abs(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Lane mask of lhs < rhs - rel_tol * max(1, |lhs|, |rhs|).
inline int ViolationMask(__m256d lhs, __m256d rhs, __m256d rel_tol) {
  const __m256d scale = _mm256_max_pd(_mm256_max_pd(_mm256_set1_pd(1.0), Abs(lhs)), Abs(rhs));
  const __m256d bound = _mm256_sub_pd(rhs, _mm256_mul_pd(rel_tol, scale));
  return _mm256_movemask_pd(_mm256_cmp_pd(lhs, bound, _CMP_LT_OQ));
}

std::int64_t FirstWeakViolation(const PairScan& scan) {
  const double* f = scan.values;
  const double* card = scan.cardinality;
  const double fs = f[scan.s];
  const double cs = card[scan.s];
  const __m256d vfs = _mm256_set1_pd(fs);
  const __m256d vcs = _mm256_set1_pd(cs);
  const __m256d vtol = _mm256_set1_pd(scan.rel_tol);
  const __m256i vs = _mm256_set1_epi64x(scan.s);
  const __m256i lane = _mm256_setr_epi64x(0, 1, 2, 3);

  std::uint32_t t = scan.t_begin;
  for (; t + 4 <= scan.t_end; t += 4) {
    const __m256i vt = _mm256_add_epi64(_mm256_set1_epi64x(t), lane);
    const __m256i vu = _mm256_or_si256(vs, vt);
    const __m256i vi = _mm256_and_si256(vs, vt);
    const __m256d ft = _mm256_loadu_pd(f + t);
    const __m256d ct = _mm256_loadu_pd(card + t);
    const __m256d fu = _mm256_i64gather_pd(f, vu, 8);
    const __m256d fi = _mm256_i64gather_pd(f, vi, 8);
    const __m256d cu = _mm256_i64gather_pd(card, vu, 8);
    const __m256d ci = _mm256_i64gather_pd(card, vi, 8);
    const __m256d lhs = _mm256_add_pd(_mm256_mul_pd(ct, vfs), _mm256_mul_pd(vcs, ft));
    const __m256d rhs = _mm256_add_pd(_mm256_mul_pd(ci, fu), _mm256_mul_pd(cu, fi));
    const int hit = ViolationMask(lhs, rhs, vtol);
    if (hit != 0) return t + __builtin_ctz(hit);
  }
  for (; t < scan.t_end; ++t) {
    const std::uint32_t u = scan.s | t;
    const std::uint32_t i = scan.s & t;
    const double lhs = card[t] * fs + cs * f[t];
    const double rhs = card[i] * f[u] + card[u] * f[i];
    if (ViolatesScalar(lhs, rhs, scan.rel_tol)) return t;
  }
  return -1;
}

std::int64_t FirstSubmodularViolation(const PairScan& scan) {
  const double* f = scan.values;
  const double fs = f[scan.s];
  const __m256d vfs = _mm256_set1_pd(fs);
  const __m256d vtol = _mm256_set1_pd(scan.rel_tol);
  const __m256i vs = _mm256_set1_epi64x(scan.s);
  const __m256i lane = _mm256_setr_epi64x(0, 1, 2, 3);

  std::uint32_t t = scan.t_begin;
  for (; t + 4 <= scan.t_end; t += 4) {
    const __m256i vt = _mm256_add_epi64(_mm256_set1_epi64x(t), lane);
    const __m256d ft = _mm256_loadu_pd(f + t);
    const __m256d fu = _mm256_i64gather_pd(f, _mm256_or_si256(vs, vt), 8);
    const __m256d fi = _mm256_i64gather_pd(f, _mm256_and_si256(vs, vt), 8);
    const __m256d lhs = _mm256_add_pd(vfs, ft);
    const __m256d rhs = _mm256_add_pd(fu, fi);
    const int hit = ViolationMask(lhs, rhs, vtol);
    if (hit != 0) return t + __builtin_ctz(hit);
  }
  for (; t < scan.t_end; ++t) {
    const double lhs = fs + f[t];
    const double rhs = f[scan.s | t] + f[scan.s & t];
    if (ViolatesScalar(lhs, rhs, scan.rel_tol)) return t;
  }
  return -1;
}

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double GatherSum(const double* row, const std::int32_t* idx, int count) {
  __m256d acc = _mm256_setzero_pd();
  int k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + k));
    acc = _mm256_add_pd(acc, _mm256_i32gather_pd(row, vi, 8));
  }
  double sum = HorizontalSum(acc);
  for (; k < count; ++k) sum += row[idx[k]];
  return sum;
}

double ColumnMaxSum(const double* m, int cols, const std::int32_t* rows, int nrows) {
  if (nrows == 0) return 0.0;
  __m256d acc = _mm256_setzero_pd();
  int j = 0;
  for (; j + 4 <= cols; j += 4) {
    __m256d best = _mm256_loadu_pd(m + static_cast<std::ptrdiff_t>(rows[0]) * cols + j);
    for (int r = 1; r < nrows; ++r) {
      best = _mm256_max_pd(best,
                           _mm256_loadu_pd(m + static_cast<std::ptrdiff_t>(rows[r]) * cols + j));
    }
    acc = _mm256_add_pd(acc, best);
  }
  double sum = HorizontalSum(acc);
  for (; j < cols; ++j) {
    double best = m[static_cast<std::ptrdiff_t>(rows[0]) * cols + j];
    for (int r = 1; r < nrows; ++r) {
      best = std::max(best, m[static_cast<std::ptrdiff_t>(rows[r]) * cols + j]);
    }
    sum += best;
  }
  return sum;
}

}  // namespace

const Kernels& Avx2KernelTable() {
  static const Kernels kAvx2{Isa::kAvx2,           "avx2",     &FirstWeakViolation,
                             &FirstSubmodularViolation, &GatherSum, &ColumnMaxSum};
  return kAvx2;
}

}  // namespace wsub::simd
