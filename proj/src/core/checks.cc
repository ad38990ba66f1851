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

#include "wsub/core/checks.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "absl/strings/str_cat.h"
#include "wsub/simd/kernels.h"

namespace wsub {
namespace {

absl::Status CapError(const char* what, int n, int cap) {
  return absl::FailedPreconditionError(absl::StrCat("exhaustive ", what, " check needs n <= ", cap,
                                                    ", got n = ", n, "; use sampled mode"));
}

std::vector<double> CardinalityTable(int n) {
  std::vector<double> card(std::size_t{1} << n);
  for (std::size_t m = 0; m < card.size(); ++m) card[m] = std::popcount(m);
  return card;
}

absl::Status ValidateSampled(const Sampled& sampled) {
  if (sampled.samples < 0) {
    return absl::InvalidArgumentError(absl::StrCat("sample count must be >= 0, got ",
                                                   sampled.samples));
  }
  return absl::OkStatus();
}

// Checked oracle call for sampled mode, which does not go through Tabulate.
absl::StatusOr<double> SampleValue(const SetFunction& f, Mask s) {
  const double v = f(s);
  if (f.domain() == ValueDomain::kInteger && !IsExactInteger(v)) {
    return absl::InternalError(absl::StrCat("integer-domain function '", f.name(),
                                            "' produced inexact value ", v));
  }
  return v;
}

Mask RandomSubset(std::mt19937_64& rng, int n) { return rng() & FullMask(n); }

// Number of unordered pairs (S, T), S <= T, up to and including (s, t) in
// lexicographic scan order over a universe with `count` masks.
std::int64_t PairsThrough(std::uint64_t count, std::uint64_t s, std::uint64_t t) {
  // sum_{s' < s} (count - s') = s * count - s(s-1)/2
  const std::uint64_t before = s * count - (s * (s - 1)) / 2;
  return static_cast<std::int64_t>(before + (t - s + 1));
}

struct PairHit {
  std::uint32_t s;
  std::uint32_t t;
};

using PairKernel = std::int64_t (*)(const simd::PairScan&);

// Scans unordered pairs (S, T), S <= T, in lexicographic order and returns
// the first violation. Work is split across threads by handing out blocks of
// S in increasing order; the reported hit is the minimum over workers, so it
// does not depend on thread timing.
std::optional<PairHit> ScanPairs(const ValueTable& table, const std::vector<double>& card,
                                 PairKernel kernel, double rel_tol, int jobs) {
  const std::uint32_t count = static_cast<std::uint32_t>(table.values.size());
  constexpr std::uint32_t kBlock = 16;
  std::atomic<std::uint32_t> next{0};
  std::atomic<std::uint32_t> best_s{count};
  std::mutex mu;
  std::optional<PairHit> best;

  auto worker = [&] {
    while (true) {
      const std::uint32_t start = next.fetch_add(kBlock);
      if (start >= count || start > best_s.load()) return;
      const std::uint32_t stop = std::min(count, start + kBlock);
      for (std::uint32_t s = start; s < stop; ++s) {
        if (s > best_s.load()) return;
        simd::PairScan scan{table.values.data(), card.data(), s, s, count, rel_tol};
        const std::int64_t t = kernel(scan);
        if (t >= 0) {
          std::lock_guard<std::mutex> lock(mu);
          const PairHit hit{s, static_cast<std::uint32_t>(t)};
          if (!best || hit.s < best->s || (hit.s == best->s && hit.t < best->t)) {
            best = hit;
            best_s.store(s);
          }
          return;
        }
      }
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker);
  }
  return best;
}

enum class PairProperty { kSubmodular, kWeaklySubmodular };

absl::StatusOr<CheckReport> CheckPairwise(const SetFunction& f, const CheckOptions& options,
                                          PairProperty which) {
  const Property property = which == PairProperty::kWeaklySubmodular ? Property::kWeaklySubmodular
                                                                     : Property::kSubmodular;
  const double rel_tol = RelativeTolerance(f.domain());
  const int n = f.n();
  CheckReport report{property, options.mode, 0, true, std::nullopt};

  auto sides = [&](const Subset& s, const Subset& t) {
    return which == PairProperty::kWeaklySubmodular ? WeakSubmodularSides(f, s, t)
                                                    : SubmodularSides(f, s, t);
  };

  if (const auto* sampled = std::get_if<Sampled>(&options.mode)) {
    if (auto st = ValidateSampled(*sampled); !st.ok()) return st;
    std::mt19937_64 rng(sampled->seed);
    for (std::int64_t k = 0; k < sampled->samples; ++k) {
      const Subset s = Subset::FromMask(n, RandomSubset(rng, n));
      const Subset t = Subset::FromMask(n, RandomSubset(rng, n));
      for (Mask m : {s.mask(), t.mask(), (s | t).mask(), (s & t).mask()}) {
        if (auto v = SampleValue(f, m); !v.ok()) return v.status();
      }
      const InequalitySides side = sides(s, t);
      ++report.pairs_checked;
      if (ViolatesInequality(side.lhs, side.rhs, rel_tol)) {
        report.passed = false;
        report.witness = ViolationWitness{property, s, t, side.lhs, side.rhs, std::nullopt};
        return report;
      }
    }
    return report;
  }

  if (n > options.caps.pairwise) {
    return CapError(PropertyName(property), n, options.caps.pairwise);
  }
  absl::StatusOr<ValueTable> table = Tabulate(f, options.caps.pairwise, options.jobs);
  if (!table.ok()) return table.status();
  const std::vector<double> card = CardinalityTable(n);
  const simd::Kernels& kernels = simd::ActiveKernels();
  const PairKernel kernel = which == PairProperty::kWeaklySubmodular
                                ? kernels.first_weak_violation
                                : kernels.first_submodular_violation;
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::optional<PairHit> hit = ScanPairs(*table, card, kernel, rel_tol, options.jobs);
  if (!hit) {
    report.pairs_checked = static_cast<std::int64_t>(count * (count + 1) / 2);
    return report;
  }
  report.passed = false;
  report.pairs_checked = PairsThrough(count, hit->s, hit->t);
  const Subset s = Subset::FromMask(n, hit->s);
  const Subset t = Subset::FromMask(n, hit->t);
  const InequalitySides side = sides(s, t);
  report.witness = ViolationWitness{property, s, t, side.lhs, side.rhs, std::nullopt};
  return report;
}

}  // namespace

const char* PropertyName(Property p) {
  switch (p) {
    case Property::kNormalizedNonnegative:
      return "normalized_nonnegative";
    case Property::kNormalized:
      return "normalized";
    case Property::kNonnegative:
      return "nonnegative";
    case Property::kMonotone:
      return "monotone";
    case Property::kSubmodular:
      return "submodular";
    case Property::kWeaklySubmodular:
      return "weakly_submodular";
    case Property::kCardinalityFamily:
      return "cardinality_family";
    case Property::kDownwardClosed:
      return "downward_closed";
    case Property::kMatroidExchange:
      return "matroid_exchange";
  }
  return "unknown";
}

bool ViolatesInequality(double lhs, double rhs, double rel_tol) {
  const double tol = rel_tol * std::max(std::max(1.0, std::fabs(lhs)), std::fabs(rhs));
  return lhs < rhs - tol;
}

InequalitySides WeakSubmodularSides(const SetFunction& f, const Subset& s, const Subset& t) {
  const Subset u = s | t;
  const Subset i = s & t;
  const double cs = s.size();
  const double ct = t.size();
  const double cu = u.size();
  const double ci = i.size();
  return {ct * f(s) + cs * f(t), ci * f(u) + cu * f(i)};
}

InequalitySides SubmodularSides(const SetFunction& f, const Subset& s, const Subset& t) {
  return {f(s) + f(t), f(s | t) + f(s & t)};
}

absl::StatusOr<CheckReport> CheckNormalizedNonnegative(const SetFunction& f,
                                                       const CheckOptions& options) {
  const int n = f.n();
  const double rel_tol = RelativeTolerance(f.domain());
  CheckReport report{Property::kNormalizedNonnegative, options.mode, 0, true, std::nullopt};

  auto check_one = [&](Mask m, double v) {
    ++report.pairs_checked;
    const Subset s = Subset::FromMask(n, m);
    if (m == 0) {
      // Equality; in the real domain |f(empty)| <= tol.
      if (std::fabs(v) > rel_tol) {
        report.passed = false;
        report.witness = ViolationWitness{Property::kNormalized, s, std::nullopt, v, 0.0,
                                          std::nullopt};
      }
    } else if (ViolatesInequality(v, 0.0, rel_tol)) {
      report.passed = false;
      report.witness = ViolationWitness{Property::kNonnegative, s, std::nullopt, v, 0.0,
                                        std::nullopt};
    }
    return report.passed;
  };

  if (const auto* sampled = std::get_if<Sampled>(&options.mode)) {
    if (auto st = ValidateSampled(*sampled); !st.ok()) return st;
    absl::StatusOr<double> empty = SampleValue(f, 0);
    if (!empty.ok()) return empty.status();
    if (!check_one(0, *empty)) return report;
    std::mt19937_64 rng(sampled->seed);
    for (std::int64_t k = 0; k < sampled->samples; ++k) {
      const Mask m = RandomSubset(rng, n);
      absl::StatusOr<double> v = SampleValue(f, m);
      if (!v.ok()) return v.status();
      if (!check_one(m, *v)) return report;
    }
    return report;
  }

  if (n > options.caps.sign) return CapError("sign", n, options.caps.sign);
  absl::StatusOr<ValueTable> table = Tabulate(f, options.caps.sign, options.jobs);
  if (!table.ok()) return table.status();
  for (Mask m = 0; m < table->values.size(); ++m) {
    if (!check_one(m, table->values[m])) return report;
  }
  return report;
}

absl::StatusOr<CheckReport> CheckMonotone(const SetFunction& f, const CheckOptions& options) {
  const int n = f.n();
  const double rel_tol = RelativeTolerance(f.domain());
  CheckReport report{Property::kMonotone, options.mode, 0, true, std::nullopt};

  auto check_one = [&](Mask s, int e, double fs, double ft) {
    ++report.pairs_checked;
    if (ViolatesInequality(ft, fs, rel_tol)) {
      report.passed = false;
      const Subset small = Subset::FromMask(n, s);
      report.witness =
          ViolationWitness{Property::kMonotone, small, small.With(e), ft, fs, std::nullopt};
    }
    return report.passed;
  };

  if (const auto* sampled = std::get_if<Sampled>(&options.mode)) {
    if (auto st = ValidateSampled(*sampled); !st.ok()) return st;
    std::mt19937_64 rng(sampled->seed);
    for (std::int64_t k = 0; k < sampled->samples; ++k) {
      const Mask s = RandomSubset(rng, n);
      const Mask outside = ~s & FullMask(n);
      if (outside == 0) continue;
      // Pick the r-th element outside S.
      int r = static_cast<int>(rng() % static_cast<std::uint64_t>(std::popcount(outside)));
      Mask rest = outside;
      while (r-- > 0) rest &= rest - 1;
      const int e = std::countr_zero(rest);
      absl::StatusOr<double> fs = SampleValue(f, s);
      if (!fs.ok()) return fs.status();
      absl::StatusOr<double> ft = SampleValue(f, s | (Mask{1} << e));
      if (!ft.ok()) return ft.status();
      if (!check_one(s, e, *fs, *ft)) return report;
    }
    return report;
  }

  if (n > options.caps.monotone) return CapError("monotone", n, options.caps.monotone);
  absl::StatusOr<ValueTable> table = Tabulate(f, options.caps.monotone, options.jobs);
  if (!table.ok()) return table.status();
  for (Mask s = 0; s < table->values.size(); ++s) {
    for (int e = 0; e < n; ++e) {
      const Mask bit = Mask{1} << e;
      if (s & bit) continue;
      if (!check_one(s, e, table->values[s], table->values[s | bit])) return report;
    }
  }
  return report;
}

absl::StatusOr<CheckReport> CheckSubmodular(const SetFunction& f, const CheckOptions& options) {
  return CheckPairwise(f, options, PairProperty::kSubmodular);
}

absl::StatusOr<CheckReport> CheckWeaklySubmodular(const SetFunction& f,
                                                  const CheckOptions& options) {
  return CheckPairwise(f, options, PairProperty::kWeaklySubmodular);
}

absl::StatusOr<bool> ReproducesViolation(const SetFunction& f, const ViolationWitness& w) {
  if (w.s.universe_size() != f.n() || (w.t && w.t->universe_size() != f.n())) {
    return absl::InvalidArgumentError("witness is not over the function's ground set");
  }
  const double rel_tol = RelativeTolerance(f.domain());
  InequalitySides sides;
  switch (w.kind) {
    case Property::kWeaklySubmodular:
    case Property::kSubmodular:
      if (!w.t) return absl::InvalidArgumentError("pair witness without T");
      sides = w.kind == Property::kWeaklySubmodular ? WeakSubmodularSides(f, w.s, *w.t)
                                                    : SubmodularSides(f, w.s, *w.t);
      break;
    case Property::kMonotone:
      if (!w.t) return absl::InvalidArgumentError("monotone witness without T");
      sides = {f(*w.t), f(w.s)};
      break;
    case Property::kNonnegative:
      sides = {f(w.s), 0.0};
      break;
    case Property::kNormalized: {
      const double v = f(w.s);
      return v == w.lhs && w.s.empty() && std::fabs(v) > rel_tol;
    }
    default:
      return absl::InvalidArgumentError(
          absl::StrCat("cannot re-evaluate a ", PropertyName(w.kind), " witness from an oracle"));
  }
  return sides.lhs == w.lhs && sides.rhs == w.rhs &&
         ViolatesInequality(sides.lhs, sides.rhs, rel_tol);
}

CardinalityProfile CardinalityProfile::Power(int k) {
  CardinalityProfile p;
  p.coeffs.assign(k + 1, 0);
  p.coeffs[k] = 1;
  return p;
}

__int128 CardinalityProfile::operator()(int m) const {
  __int128 value = 0;
  // Horner.
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * m + *it;
  return value;
}

ExactSides CardinalityFamilySides(const CardinalityProfile& f, int a, int b, int c) {
  const __int128 lhs = __int128{b + c} * f(a + c) + __int128{a + c} * f(b + c);
  const __int128 rhs = __int128{c} * f(a + b + c) + __int128{a + b + c} * f(c);
  return {lhs, rhs};
}

absl::StatusOr<CheckReport> CheckCardinalityFamily(const CardinalityProfile& profile, int a_max,
                                                   int b_max, int c_max) {
  constexpr int kMaxBound = 64;
  constexpr int kMaxDegree = 8;
  if (a_max < 1 || b_max < 1 || c_max < 1) {
    return absl::InvalidArgumentError("cardinality-family bounds must be >= 1");
  }
  if (a_max > kMaxBound || b_max > kMaxBound || c_max > kMaxBound) {
    return absl::InvalidArgumentError(
        absl::StrCat("cardinality-family bounds must be <= ", kMaxBound));
  }
  if (profile.coeffs.empty() || static_cast<int>(profile.coeffs.size()) > kMaxDegree + 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("cardinality profile degree must be in [0, ", kMaxDegree, "]"));
  }
  CheckReport report{Property::kCardinalityFamily, Exhaustive{}, 0, true, std::nullopt};
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      for (int c = 0; c <= c_max; ++c) {
        ++report.pairs_checked;
        const ExactSides sides = CardinalityFamilySides(profile, a, b, c);
        if (sides.lhs >= sides.rhs) continue;
        report.passed = false;
        ViolationWitness w{Property::kCardinalityFamily, Subset(), std::nullopt,
                           static_cast<double>(sides.lhs), static_cast<double>(sides.rhs),
                           std::array<int, 3>{a, b, c}};
        // Concrete sets S = A u C, T = B u C when they fit in a ground set.
        const int n = a + b + c;
        if (n <= kMaxGroundSize) {
          Subset s(n), t(n);
          for (int e = 0; e < c; ++e) {
            s.Insert(e);
            t.Insert(e);
          }
          for (int e = c; e < c + a; ++e) s.Insert(e);
          for (int e = c + a; e < n; ++e) t.Insert(e);
          w.s = s;
          w.t = t;
        }
        report.witness = w;
        return report;
      }
    }
  }
  return report;
}

}  // namespace wsub
