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

#include "wsub/core/set_function.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "absl/strings/str_cat.h"

namespace wsub {
namespace {

class CallableOracle final : public SetFunctionOracle {
 public:
  explicit CallableOracle(std::function<double(Mask)> fn) : fn_(std::move(fn)) {}
  double Value(Mask subset) const override { return fn_(subset); }

 private:
  std::function<double(Mask)> fn_;
};

}  // namespace

SetFunction SetFunction::FromCallable(GroundSet ground, std::function<double(Mask)> fn,
                                      ValueDomain domain, Claims claims, std::string name) {
  return SetFunction(std::move(ground), std::make_shared<CallableOracle>(std::move(fn)), domain,
                     claims, std::move(name));
}

bool IsExactInteger(double v) {
  return std::isfinite(v) && std::fabs(v) <= kExactValueLimit && std::trunc(v) == v;
}

absl::StatusOr<double> Evaluate(const SetFunction& f, const Subset& s) {
  if (s.universe_size() != f.n()) {
    return absl::InvalidArgumentError(absl::StrCat("subset over a universe of size ",
                                                   s.universe_size(), " passed to '", f.name(),
                                                   "' with ground set of size ", f.n()));
  }
  const double v = f(s);
  if (f.domain() == ValueDomain::kInteger && !IsExactInteger(v)) {
    return absl::InternalError(absl::StrCat("integer-domain function '", f.name(),
                                            "' produced inexact value ", v, " at ", s.ToString()));
  }
  return v;
}

absl::StatusOr<ValueTable> Tabulate(const SetFunction& f, int max_n, int jobs) {
  const int n = f.n();
  if (n > max_n) {
    return absl::FailedPreconditionError(absl::StrCat("exhaustive evaluation of '", f.name(),
                                                      "' needs n <= ", max_n, ", got n = ", n));
  }
  ValueTable table;
  table.n = n;
  table.domain = f.domain();
  const Mask count = Mask{1} << n;
  table.values.resize(count);

  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<Mask>(count, 64))));
  std::atomic<bool> inexact{false};
  auto work = [&](int worker) {
    for (Mask s = worker; s < count; s += jobs) {
      const double v = f(s);
      table.values[s] = v;
      if (f.domain() == ValueDomain::kInteger && !IsExactInteger(v)) inexact = true;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }
  if (inexact) {
    return absl::InternalError(
        absl::StrCat("integer-domain function '", f.name(), "' produced an inexact value"));
  }
  return table;
}

}  // namespace wsub
