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

#ifndef WSUB_CORE_CHECKS_H_
#define WSUB_CORE_CHECKS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "wsub/core/set_function.h"
#include "wsub/core/subset.h"

namespace wsub {

enum class Property {
  kNormalizedNonnegative,
  kNormalized,   // witness kind only
  kNonnegative,  // witness kind only
  kMonotone,
  kSubmodular,
  kWeaklySubmodular,
  kCardinalityFamily,
  kDownwardClosed,
  kMatroidExchange,
};

const char* PropertyName(Property p);

struct Exhaustive {};
struct Sampled {
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};
using CheckMode = std::variant<Exhaustive, Sampled>;

// Largest ground set each exhaustive check accepts. Exceeding a cap is an
// error; the caller must opt into sampling explicitly.
struct ExhaustiveCaps {
  int sign = 20;
  int monotone = 14;
  int pairwise = 12;
};

struct CheckOptions {
  CheckMode mode = Exhaustive{};
  int jobs = 1;
  ExhaustiveCaps caps;
};

// A concrete counterexample. For inequality properties lhs < rhs (minus the
// tolerance) is what failed:
//   weakly submodular: lhs = |T|f(S) + |S|f(T), rhs = |SnT|f(SuT) + |SuT|f(SnT)
//   submodular:        lhs = f(S) + f(T),       rhs = f(SuT) + f(SnT)
//   monotone:          lhs = f(T),              rhs = f(S), with T = S u {e}
//   nonnegative:       lhs = f(S),              rhs = 0
//   normalized:        lhs = f(empty),          rhs = 0 (an equality)
struct ViolationWitness {
  Property kind;
  Subset s;
  std::optional<Subset> t;
  double lhs = 0.0;
  double rhs = 0.0;
  // (a, b, c) = (|S\T|, |T\S|, |SnT|) for cardinality-family witnesses.
  std::optional<std::array<int, 3>> cardinalities;
};

struct CheckReport {
  Property property;
  CheckMode mode;
  std::int64_t pairs_checked = 0;
  bool passed = true;
  std::optional<ViolationWitness> witness;
};

// Relative tolerance applied to inequality checks in the real domain; the
// integer domain is checked exactly.
inline constexpr double kRealRelativeTolerance = 1e-9;

inline double RelativeTolerance(ValueDomain domain) {
  return domain == ValueDomain::kInteger ? 0.0 : kRealRelativeTolerance;
}

// True iff lhs < rhs - rel_tol * max(1, |lhs|, |rhs|).
bool ViolatesInequality(double lhs, double rhs, double rel_tol);

absl::StatusOr<CheckReport> CheckNormalizedNonnegative(const SetFunction& f,
                                                       const CheckOptions& options = {});
absl::StatusOr<CheckReport> CheckMonotone(const SetFunction& f, const CheckOptions& options = {});
absl::StatusOr<CheckReport> CheckSubmodular(const SetFunction& f,
                                            const CheckOptions& options = {});
absl::StatusOr<CheckReport> CheckWeaklySubmodular(const SetFunction& f,
                                                  const CheckOptions& options = {});

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// The two sides of the defining inequalities, computed with the same
// operation order the checkers use.
InequalitySides WeakSubmodularSides(const SetFunction& f, const Subset& s, const Subset& t);
InequalitySides SubmodularSides(const SetFunction& f, const Subset& s, const Subset& t);

// Recomputes the witness from the oracle and reports whether it reproduces
// the recorded lhs/rhs bit-for-bit and still violates the property.
absl::StatusOr<bool> ReproducesViolation(const SetFunction& f, const ViolationWitness& witness);

// A function of |S| only: f(S) = sum_k coeffs[k] * |S|^k, evaluated exactly.
struct CardinalityProfile {
  std::vector<std::int64_t> coeffs;

  static CardinalityProfile Power(int k);
  __int128 operator()(int m) const;
};

// Both sides of the reduced inequality for one (a, b, c), computed exactly.
struct ExactSides {
  __int128 lhs = 0;
  __int128 rhs = 0;
};
ExactSides CardinalityFamilySides(const CardinalityProfile& profile, int a, int b, int c);

// For functions of |S| only the weak-submodularity inequality reduces to
//   (b+c) f(a+c) + (a+c) f(b+c) >= c f(a+b+c) + (a+b+c) f(c)
// over a = |S\T|, b = |T\S|, c = |SnT|. Scans 0 <= a <= a_max, 0 <= b <= b_max,
// 0 <= c <= c_max in lexicographic (a, b, c) order.
absl::StatusOr<CheckReport> CheckCardinalityFamily(const CardinalityProfile& profile, int a_max,
                                                   int b_max, int c_max);

}  // namespace wsub

#endif  // WSUB_CORE_CHECKS_H_
