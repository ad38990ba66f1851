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

#include <cstdlib>
#include <string_view>

#include "wsub/simd/kernels.h"

namespace wsub::simd {

#if defined(WSUB_HAVE_AVX2)
const Kernels& Avx2KernelTable();
#endif

const Kernels* Avx2Kernels() {
#if defined(WSUB_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &Avx2KernelTable();
#endif
  return nullptr;
}

const Kernels& ActiveKernels() {
  static const Kernels* active = [] {
    const char* env = std::getenv("WSUB_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &ScalarKernels();
    if (const Kernels* avx2 = Avx2Kernels()) return avx2;
    return &ScalarKernels();
  }();
  return *active;
}

}  // namespace wsub::simd
