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

#ifndef WSUB_CORE_SET_FUNCTION_H_
#define WSUB_CORE_SET_FUNCTION_H_

#include <cassert>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "wsub/core/ground_set.h"
#include "wsub/core/subset.h"

namespace wsub {

// Integer-domain functions only produce integers of magnitude at most
// kExactValueLimit. Every inequality the checkers form is a sum of two
// products of such a value with a cardinality <= 64, which stays below 2^53
// and is therefore computed exactly in double arithmetic.
inline constexpr double kExactValueLimit = 70368744177664.0;  // 2^46

enum class ValueDomain {
  kInteger,  // exact; inequality checks use zero tolerance
  kReal,
};

// What a builder asserts about the function it produced. An empty optional
// means "no claim"; the checkers in checks.h establish the truth.
struct Claims {
  std::optional<bool> normalized;
  std::optional<bool> nonnegative;
  std::optional<bool> monotone;
  std::optional<bool> submodular;
  std::optional<bool> weakly_submodular;
};

// Value oracle over subsets of {0, ..., n-1}. Implementations must be
// deterministic and safe to call concurrently.
class SetFunctionOracle {
 public:
  virtual ~SetFunctionOracle() = default;
  virtual double Value(Mask subset) const = 0;
};

// An immutable, cheaply copyable set function: a ground set plus a shared
// value oracle and metadata.
class SetFunction {
 public:
  SetFunction(GroundSet ground, std::shared_ptr<const SetFunctionOracle> oracle,
              ValueDomain domain, Claims claims, std::string name)
      : ground_(std::move(ground)),
        oracle_(std::move(oracle)),
        domain_(domain),
        claims_(claims),
        name_(std::move(name)) {}

  static SetFunction FromCallable(GroundSet ground, std::function<double(Mask)> fn,
                                  ValueDomain domain, Claims claims, std::string name);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  ValueDomain domain() const { return domain_; }
  const Claims& claims() const { return claims_; }
  const std::string& name() const { return name_; }
  const std::shared_ptr<const SetFunctionOracle>& oracle() const { return oracle_; }

  double operator()(Mask s) const {
    assert((s & ~FullMask(n())) == 0);
    return oracle_->Value(s);
  }
  double operator()(const Subset& s) const {
    assert(s.universe_size() == n());
    return oracle_->Value(s.mask());
  }

  SetFunction WithClaims(Claims claims) const {
    SetFunction f = *this;
    f.claims_ = claims;
    return f;
  }

 private:
  GroundSet ground_;
  std::shared_ptr<const SetFunctionOracle> oracle_;
  ValueDomain domain_;
  Claims claims_;
  std::string name_;
};

// Checked evaluation: fails if `s` is not over f's ground set, or if an
// integer-domain function returns a non-integer or out-of-range value.
absl::StatusOr<double> Evaluate(const SetFunction& f, const Subset& s);

// Verifies the integer-domain value contract for one value.
bool IsExactInteger(double v);

// Every value f(S), S in [0, 2^n), indexed by mask.
struct ValueTable {
  int n = 0;
  ValueDomain domain = ValueDomain::kReal;
  std::vector<double> values;

  double operator[](Mask s) const { return values[s]; }
};

// Evaluates f on all 2^n subsets, splitting the work over `jobs` threads.
absl::StatusOr<ValueTable> Tabulate(const SetFunction& f, int max_n, int jobs = 1);

}  // namespace wsub

#endif  // WSUB_CORE_SET_FUNCTION_H_
