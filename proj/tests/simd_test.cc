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

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "wsub/simd/kernels.h"

namespace wsub::simd {
namespace {

struct Table {
  std::vector<double> values;
  std::vector<double> cardinality;
};

// Integer tables have many exact ties on both sides of the inequalities;
// real tables exercise the relative tolerance.
Table RandomTable(int n, std::uint64_t seed, bool integral) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> real(0.0, 100.0);
  Table t;
  const std::size_t count = std::size_t{1} << n;
  t.values.resize(count);
  t.cardinality.resize(count);
  for (std::size_t m = 0; m < count; ++m) {
    const int k = std::popcount(m);
    t.cardinality[m] = k;
    t.values[m] = integral ? static_cast<double>(k * k + static_cast<int>(rng() % 3)) : real(rng);
  }
  t.values[0] = 0.0;
  return t;
}

class SimdTest : public ::testing::Test {
 protected:
  void SetUp() override {
    avx2_ = Avx2Kernels();
    if (avx2_ == nullptr) GTEST_SKIP() << "AVX2 kernels unavailable on this machine";
  }
  const Kernels* avx2_ = nullptr;
};

TEST_F(SimdTest, PairScansReportTheSameFirstViolation) {
  const Kernels& scalar = ScalarKernels();
  for (int n = 1; n <= 8; ++n) {
    for (int variant = 0; variant < 4; ++variant) {
      const bool integral = variant % 2 == 0;
      const Table t = RandomTable(n, 1000 * n + variant, integral);
      const std::uint32_t count = 1u << n;
      for (std::uint32_t s = 0; s < count; ++s) {
        // Several ranges so that every tail length and alignment occurs.
        for (std::uint32_t begin = s; begin < count; begin += 3) {
          PairScan scan{t.values.data(), t.cardinality.data(), s, begin, count,
                        integral ? 0.0 : 1e-9};
          ASSERT_EQ(scalar.first_weak_violation(scan), avx2_->first_weak_violation(scan))
              << "n=" << n << " s=" << s << " begin=" << begin;
          ASSERT_EQ(scalar.first_submodular_violation(scan),
                    avx2_->first_submodular_violation(scan))
              << "n=" << n << " s=" << s << " begin=" << begin;
        }
      }
    }
  }
}

TEST_F(SimdTest, ToleranceBoundaryAgrees) {
  // f(S) + f(T) = f(S u T) + f(S n T) - delta for deltas around the tolerance.
  const int n = 4;
  const std::uint32_t count = 1u << n;
  const Kernels& scalar = ScalarKernels();
  for (double delta : {0.0, 1e-12, 5e-10, 1e-9, 2e-9, 1e-6}) {
    Table t = RandomTable(n, 7, true);
    for (std::uint32_t m = 0; m < count; ++m) t.values[m] = std::popcount(m) * 1.0;
    t.values[count - 1] += delta * 10.0;
    for (std::uint32_t s = 0; s < count; ++s) {
      PairScan scan{t.values.data(), t.cardinality.data(), s, s, count, 1e-9};
      EXPECT_EQ(scalar.first_weak_violation(scan), avx2_->first_weak_violation(scan));
      EXPECT_EQ(scalar.first_submodular_violation(scan), avx2_->first_submodular_violation(scan));
    }
  }
}

TEST_F(SimdTest, GatherSumMatches) {
  std::mt19937_64 rng(3);
  std::vector<double> row(64);
  const Kernels& scalar = ScalarKernels();
  for (int trial = 0; trial < 200; ++trial) {
    const bool integral = trial % 2 == 0;
    for (double& x : row) x = integral ? static_cast<double>(rng() % 1000) : (rng() % 100000) / 7.0;
    const int count = static_cast<int>(rng() % 65);
    std::vector<std::int32_t> idx(count);
    for (auto& i : idx) i = static_cast<std::int32_t>(rng() % 64);
    const double a = scalar.gather_sum(row.data(), idx.data(), count);
    const double b = avx2_->gather_sum(row.data(), idx.data(), count);
    if (integral) {
      EXPECT_EQ(a, b);
    } else {
      EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_F(SimdTest, ColumnMaxSumMatches) {
  std::mt19937_64 rng(5);
  const Kernels& scalar = ScalarKernels();
  for (int trial = 0; trial < 200; ++trial) {
    const bool integral = trial % 2 == 0;
    const int rows = 1 + static_cast<int>(rng() % 12);
    const int cols = 1 + static_cast<int>(rng() % 19);
    std::vector<double> m(static_cast<std::size_t>(rows) * cols);
    for (double& x : m) {
      const double v = static_cast<double>(static_cast<int>(rng() % 41) - 20);
      x = integral ? v : v / 3.0;
    }
    std::vector<std::int32_t> pick;
    for (int r = 0; r < rows; ++r) {
      if (rng() % 2) pick.push_back(r);
    }
    const double a = scalar.column_max_sum(m.data(), cols, pick.data(), static_cast<int>(pick.size()));
    const double b = avx2_->column_max_sum(m.data(), cols, pick.data(), static_cast<int>(pick.size()));
    if (integral) {
      EXPECT_EQ(a, b);
    } else {
      EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST(KernelSelectionTest, ActiveKernelsIsOneOfTheVariants) {
  const Kernels& active = ActiveKernels();
  EXPECT_TRUE(&active == &ScalarKernels() || &active == Avx2Kernels());
  EXPECT_EQ(ScalarKernels().isa, Isa::kScalar);
}

}  // namespace
}  // namespace wsub::simd
