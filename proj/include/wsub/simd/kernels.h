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

#ifndef WSUB_SIMD_KERNELS_H_
#define WSUB_SIMD_KERNELS_H_

#include <cstdint>

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant selected at runtime.
//
// The pair-scan kernels perform the same IEEE operations per lane as the
// scalar loop (the project is built with -ffp-contract=off), so scalar and
// AVX2 scans report identical first violations. The reduction kernels sum in
// a different order, so their results agree exactly on integer data and to
// rounding on real data.

namespace wsub::simd {

enum class Isa { kScalar, kAvx2 };

// Pairs (S, T) for one fixed S and T in [t_begin, t_end), all masks indexing
// a 2^n value table. Violation test: lhs < rhs - rel_tol * max(1, |lhs|, |rhs|).
struct PairScan {
  const double* values = nullptr;       // f(T) for every mask T
  const double* cardinality = nullptr;  // |T| as a double for every mask T
  std::uint32_t s = 0;
  std::uint32_t t_begin = 0;
  std::uint32_t t_end = 0;
  double rel_tol = 0.0;
};

struct Kernels {
  Isa isa;
  const char* name;
  // First T with |T|f(S) + |S|f(T) < |S n T|f(S u T) + |S u T|f(S n T) - tol,
  // or -1.
  std::int64_t (*first_weak_violation)(const PairScan& scan);
  // First T with f(S) + f(T) < f(S u T) + f(S n T) - tol, or -1.
  std::int64_t (*first_submodular_violation)(const PairScan& scan);
  // sum_k row[idx[k]].
  double (*gather_sum)(const double* row, const std::int32_t* idx, int count);
  // sum_j max_{r in rows} m[r * cols + j]; 0 when nrows == 0.
  double (*column_max_sum)(const double* m, int cols, const std::int32_t* rows, int nrows);
};

const Kernels& ScalarKernels();

// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const Kernels* Avx2Kernels();

// Best available kernel set, chosen once per process. Setting the
// environment variable WSUB_SIMD=scalar forces the scalar reference.
const Kernels& ActiveKernels();

}  // namespace wsub::simd

#endif  // WSUB_SIMD_KERNELS_H_
