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

#include "wsub/solve/solve.h"

#include <bit>
#include <utility>

#include "absl/strings/str_cat.h"

namespace wsub {
namespace {

constexpr char kDeterminismNote[] =
    "deterministic: smallest-index tie-breaking, no randomness";

absl::Status CheckMaximizable(const SetFunction& f) {
  const Claims& c = f.claims();
  if (c.normalized == false) return absl::FailedPreconditionError(f.name() + " is not normalized");
  if (c.nonnegative == false) {
    return absl::FailedPreconditionError(f.name() + " takes negative values");
  }
  if (c.monotone == false) return absl::FailedPreconditionError(f.name() + " is not monotone");
  return absl::OkStatus();
}

absl::Status CheckSameGround(const SetFunction& f, const Matroid& m) {
  if (f.n() != m.n()) {
    return absl::InvalidArgumentError(absl::StrCat("function on ", f.n(),
                                                   " elements but matroid on ", m.n()));
  }
  return absl::OkStatus();
}

// Grows an independent set by the best feasible element until none remains.
Mask GreedyBasis(const SetFunction& f, const Matroid& m) {
  Mask s = 0;
  for (;;) {
    int best = -1;
    double best_value = 0.0;
    for (int u = 0; u < f.n(); ++u) {
      const Mask bit = Mask{1} << u;
      if ((s & bit) || !m.IsIndependent(s | bit)) continue;
      const double v = f(s | bit);
      if (best < 0 || v > best_value) {
        best = u;
        best_value = v;
      }
    }
    if (best < 0) return s;
    s |= Mask{1} << best;
  }
}

}  // namespace

absl::StatusOr<SolveResult> GreedyCardinality(const SetFunction& f, int p) {
  if (p < 0 || p > f.n()) {
    return absl::InvalidArgumentError(
        absl::StrCat("cardinality bound p = ", p, " outside [0, ", f.n(), "]"));
  }
  if (auto st = CheckMaximizable(f); !st.ok()) return st;

  SolveResult r;
  Mask s = 0;
  for (int step = 1; step <= p; ++step) {
    int best = -1;
    double best_value = 0.0;
    for (int u = 0; u < f.n(); ++u) {
      const Mask bit = Mask{1} << u;
      if (s & bit) continue;
      const double v = f(s | bit);
      if (best < 0 || v > best_value) {
        best = u;
        best_value = v;
      }
    }
    s |= Mask{1} << best;
    r.trace.push_back({step, {best}, best_value});
  }
  r.selected = Subset::FromMask(f.n(), s);
  r.value = f(s);
  r.iterations = p;
  r.certificate = {"greedy", {{"p", absl::StrCat(p)}}, kDeterminismNote};
  return r;
}

absl::StatusOr<SolveResult> LocalSearchMatroid(const SetFunction& f, const Matroid& m,
                                               const LocalSearchOptions& options) {
  if (auto st = CheckSameGround(f, m); !st.ok()) return st;
  if (!(options.epsilon >= 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat("epsilon = ", options.epsilon, " < 0"));
  }
  if (options.max_iters < 0) return absl::InvalidArgumentError("max_iters < 0");
  if (auto st = CheckMaximizable(f); !st.ok()) return st;
  if (auto st = RequireMatroid(m); !st.ok()) return st;

  Mask s;
  if (options.init) {
    absl::StatusOr<Subset> basis = ExtendToBasis(m, *options.init);
    if (!basis.ok()) return basis.status();
    s = basis->mask();
  } else {
    s = GreedyBasis(f, m);
  }

  SolveResult r;
  double value = f(s);
  const double factor = 1.0 + options.epsilon;
  for (;;) {
    const double threshold = factor * value;
    int swap_in = -1;
    int swap_out = -1;
    double swap_value = 0.0;
    for (int u = 0; u < f.n() && swap_in < 0; ++u) {
      const Mask ubit = Mask{1} << u;
      if (s & ubit) continue;
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const Mask vbit = rest & (~rest + 1);
        const Mask candidate = (s | ubit) & ~vbit;
        if (!m.IsIndependent(candidate)) continue;
        const double v = f(candidate);
        if (v > threshold) {
          swap_in = u;
          swap_out = std::countr_zero(vbit);
          swap_value = v;
          break;
        }
      }
    }
    if (swap_in < 0) break;
    if (r.iterations >= options.max_iters) {
      r.hit_iteration_limit = true;
      break;
    }
    s = (s | (Mask{1} << swap_in)) & ~(Mask{1} << swap_out);
    value = swap_value;
    ++r.iterations;
    r.trace.push_back({static_cast<int>(r.iterations), {swap_in, swap_out}, value});
  }
  r.selected = Subset::FromMask(f.n(), s);
  r.value = value;
  r.certificate = {"local_search",
                   {{"epsilon", absl::StrCat(options.epsilon)},
                    {"max_iters", absl::StrCat(options.max_iters)},
                    {"init", options.init ? options.init->ToString() : "greedy"}},
                   absl::StrCat(kDeterminismNote, "; first improving swap, u then v ascending")};
  return r;
}

absl::StatusOr<OptResult> BruteForceCardinality(const SetFunction& f, int p, SizeRule rule) {
  if (f.n() > kBruteForceCardinalityMaxN) {
    return absl::FailedPreconditionError(absl::StrCat("brute force needs n <= ",
                                                      kBruteForceCardinalityMaxN,
                                                      ", got n = ", f.n()));
  }
  if (p < 0 || p > f.n()) {
    return absl::InvalidArgumentError(
        absl::StrCat("cardinality bound p = ", p, " outside [0, ", f.n(), "]"));
  }
  OptResult r;
  bool have = false;
  Mask best = 0;
  for (int k = rule == SizeRule::kAtMost ? 0 : p; k <= p; ++k) {
    ForEachKSubset(f.n(), k, [&](Mask s) {
      ++r.enumerated;
      const double v = f(s);
      if (!have || v > r.value) {
        have = true;
        best = s;
        r.value = v;
      }
      return true;
    });
  }
  r.optimum = Subset::FromMask(f.n(), best);
  return r;
}

absl::StatusOr<OptResult> BruteForceMatroid(const SetFunction& f, const Matroid& m) {
  if (auto st = CheckSameGround(f, m); !st.ok()) return st;
  if (m.kind() != MatroidKind::kExplicit && m.n() > kBruteForceMatroidMaxN) {
    return absl::FailedPreconditionError(absl::StrCat("brute force over bases needs n <= ",
                                                      kBruteForceMatroidMaxN,
                                                      ", got n = ", m.n()));
  }
  if (auto st = RequireMatroid(m); !st.ok()) return st;
  OptResult r;
  bool have = false;
  Mask best = 0;
  ForEachKSubset(m.n(), m.rank(), [&](Mask s) {
    if (!m.IsIndependent(s)) return true;
    ++r.enumerated;
    const double v = f(s);
    if (!have || v > r.value) {
      have = true;
      best = s;
      r.value = v;
    }
    return true;
  });
  r.optimum = Subset::FromMask(f.n(), best);
  return r;
}

}  // namespace wsub
