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

#include "wsub/zoo/functions.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <memory>

#include "absl/strings/str_cat.h"

namespace wsub::zoo {
namespace {

GroundSet IndexedGround(int n) { return *GroundSet::Indexed(n); }

// Writes the elements of `s` into `out` (capacity 64) and returns the count.
inline int Unpack(Mask s, std::int32_t* out) {
  int count = 0;
  for (; s != 0; s &= s - 1) out[count++] = std::countr_zero(s);
  return count;
}

ValueDomain DomainFor(bool integral) {
  return integral ? ValueDomain::kInteger : ValueDomain::kReal;
}

Claims MonotoneWeaklySubmodular() {
  Claims c;
  c.normalized = true;
  c.nonnegative = true;
  c.monotone = true;
  c.weakly_submodular = true;
  return c;
}

absl::Status CheckSize(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    return absl::InvalidArgumentError(
        absl::StrCat("ground set size ", n, " outside [0, ", kMaxGroundSize, "]"));
  }
  return absl::OkStatus();
}

class LinearOracle final : public SetFunctionOracle {
 public:
  LinearOracle(std::vector<double> w, const simd::Kernels& k) : w_(std::move(w)), k_(k) {}
  double Value(Mask s) const override {
    std::array<std::int32_t, kMaxGroundSize> idx;
    const int count = Unpack(s, idx.data());
    return k_.gather_sum(w_.data(), idx.data(), count);
  }

 private:
  std::vector<double> w_;
  const simd::Kernels& k_;
};

class CoverageOracle final : public SetFunctionOracle {
 public:
  CoverageOracle(std::vector<double> item_weights, std::vector<std::vector<std::uint64_t>> covers)
      : weights_(std::move(item_weights)), covers_(std::move(covers)) {}

  double Value(Mask s) const override {
    const std::size_t words = (weights_.size() + 63) / 64;
    std::vector<std::uint64_t> covered(words, 0);
    for (; s != 0; s &= s - 1) {
      const auto& c = covers_[std::countr_zero(s)];
      for (std::size_t w = 0; w < words; ++w) covered[w] |= c[w];
    }
    double total = 0.0;
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = covered[w]; bits != 0; bits &= bits - 1) {
        total += weights_[w * 64 + std::countr_zero(bits)];
      }
    }
    return total;
  }

 private:
  std::vector<double> weights_;
  std::vector<std::vector<std::uint64_t>> covers_;
};

class DispersionOracle final : public SetFunctionOracle {
 public:
  DispersionOracle(DistanceMatrix d, const simd::Kernels& k) : d_(std::move(d)), k_(k) {}
  double Value(Mask s) const override {
    std::array<std::int32_t, kMaxGroundSize> idx;
    const int count = Unpack(s, idx.data());
    double total = 0.0;
    for (int a = 0; a + 1 < count; ++a) {
      total += k_.gather_sum(d_.row(idx[a]), idx.data() + a + 1, count - a - 1);
    }
    return total;
  }

 private:
  DistanceMatrix d_;
  const simd::Kernels& k_;
};

class SegmentationOracle final : public SetFunctionOracle {
 public:
  SegmentationOracle(SegmentationMatrix m, const simd::Kernels& k) : m_(std::move(m)), k_(k) {}
  double Value(Mask s) const override {
    std::array<std::int32_t, kMaxGroundSize> idx;
    const int count = Unpack(s, idx.data());
    return k_.column_max_sum(m_.data(), m_.cols(), idx.data(), count);
  }

 private:
  SegmentationMatrix m_;
  const simd::Kernels& k_;
};

class PolynomialOracle final : public SetFunctionOracle {
 public:
  explicit PolynomialOracle(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}
  double Value(Mask s) const override {
    const double m = std::popcount(s);
    double v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * m + *it;
    return v;
  }

 private:
  std::vector<double> coeffs_;
};

class CombinationOracle final : public SetFunctionOracle {
 public:
  CombinationOracle(std::vector<SetFunction> fs, std::vector<double> alphas)
      : fs_(std::move(fs)), alphas_(std::move(alphas)) {}
  double Value(Mask s) const override {
    double v = 0.0;
    for (std::size_t i = 0; i < fs_.size(); ++i) v += alphas_[i] * fs_[i](s);
    return v;
  }

 private:
  std::vector<SetFunction> fs_;
  std::vector<double> alphas_;
};

class MaxCutOracle final : public SetFunctionOracle {
 public:
  explicit MaxCutOracle(Graph g) : g_(std::move(g)) {}
  double Value(Mask s) const override {
    double v = 0.0;
    for (const Edge& e : g_.edges()) {
      if (((s >> e.u) & 1) != ((s >> e.v) & 1)) v += e.weight;
    }
    return v;
  }

 private:
  Graph g_;
};

}  // namespace

absl::StatusOr<SetFunction> Linear(std::vector<double> weights, const simd::Kernels& kernels) {
  const int n = static_cast<int>(weights.size());
  if (auto st = CheckSize(n); !st.ok()) return st;
  bool integral = true;
  double total = 0.0;
  for (int e = 0; e < n; ++e) {
    if (!std::isfinite(weights[e]) || weights[e] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("linear weight w[", e, "] = ", weights[e], " must be non-negative"));
    }
    integral = integral && IsIntegral(weights[e]);
    total += weights[e];
  }
  integral = integral && total <= kExactValueLimit;
  Claims claims = MonotoneWeaklySubmodular();
  claims.submodular = true;
  return SetFunction(IndexedGround(n), std::make_shared<LinearOracle>(std::move(weights), kernels),
                     DomainFor(integral), claims, "linear");
}

absl::StatusOr<SetFunction> Coverage(std::vector<double> item_weights,
                                     const std::vector<std::vector<int>>& covers) {
  const int n = static_cast<int>(covers.size());
  if (auto st = CheckSize(n); !st.ok()) return st;
  const int items = static_cast<int>(item_weights.size());
  bool integral = true;
  double total = 0.0;
  for (int i = 0; i < items; ++i) {
    if (!std::isfinite(item_weights[i]) || item_weights[i] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("coverage item weight ", i, " = ", item_weights[i], " is invalid"));
    }
    integral = integral && IsIntegral(item_weights[i]);
    total += item_weights[i];
  }
  integral = integral && total <= kExactValueLimit;
  const std::size_t words = (item_weights.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(n, std::vector<std::uint64_t>(words, 0));
  for (int e = 0; e < n; ++e) {
    for (int item : covers[e]) {
      if (item < 0 || item >= items) {
        return absl::InvalidArgumentError(
            absl::StrCat("ground element ", e, " covers unknown item ", item));
      }
      bits[e][item / 64] |= std::uint64_t{1} << (item % 64);
    }
  }
  Claims claims = MonotoneWeaklySubmodular();
  claims.submodular = true;
  return SetFunction(IndexedGround(n),
                     std::make_shared<CoverageOracle>(std::move(item_weights), std::move(bits)),
                     DomainFor(integral), claims, "coverage");
}

absl::StatusOr<SetFunction> MetricDispersion(const DistanceMatrix& d,
                                             const simd::Kernels& kernels) {
  return SetFunction(IndexedGround(d.n()), std::make_shared<DispersionOracle>(d, kernels),
                     DomainFor(d.integral()), MonotoneWeaklySubmodular(), "dispersion");
}

absl::StatusOr<double> CrossDispersion(const DistanceMatrix& d, const Subset& s,
                                       const Subset& t) {
  if (s.universe_size() != d.n() || t.universe_size() != d.n()) {
    return absl::InvalidArgumentError("subsets are not over the metric's point set");
  }
  if (!(s & t).empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("cross dispersion needs disjoint sets; ", s.ToString(), " and ",
                     t.ToString(), " intersect"));
  }
  double total = 0.0;
  for (int u : s.Elements()) {
    for (int v : t.Elements()) total += d(u, v);
  }
  return total;
}

absl::StatusOr<SetFunction> Segmentation(const SegmentationMatrix& m,
                                         const simd::Kernels& kernels) {
  return SetFunction(IndexedGround(m.rows()), std::make_shared<SegmentationOracle>(m, kernels),
                     DomainFor(m.integral()), MonotoneWeaklySubmodular(), "segmentation");
}

absl::StatusOr<SetFunction> CardinalityPower(int n, int k) {
  if (k < 0 || k > 3) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cardinality power must be in 0..3, got ", k,
        " (higher powers are not weakly submodular; use RawCardinalityProfile)"));
  }
  if (k == 0) {
    // |S|^0 read as the indicator of non-empty S, keeping f(empty) = 0.
    auto f = Threshold(n, 1, 1.0);
    if (!f.ok()) return f;
    Claims claims = f->claims();
    claims.submodular = true;
    return SetFunction(f->ground(), f->oracle(), f->domain(), claims, "cardinality_power");
  }
  std::vector<double> coeffs(k + 1, 0.0);
  coeffs[k] = 1.0;
  auto f = CardinalityPolynomial(n, std::move(coeffs));
  if (!f.ok()) return f;
  return SetFunction(f->ground(), f->oracle(), f->domain(), f->claims(), "cardinality_power");
}

absl::StatusOr<SetFunction> CardinalityPolynomial(int n, std::vector<double> coeffs) {
  if (auto st = CheckSize(n); !st.ok()) return st;
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.size() > 4) {
    return absl::InvalidArgumentError(
        absl::StrCat("cardinality polynomial of degree ", coeffs.size() - 1,
                     " refused: degree must be <= 3 (use RawCardinalityProfile)"));
  }
  if (!coeffs.empty() && coeffs[0] != 0.0) {
    return absl::InvalidArgumentError("cardinality polynomial needs a zero constant term");
  }
  bool integral = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!std::isfinite(coeffs[k]) || coeffs[k] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("cardinality polynomial coefficient ", k, " = ", coeffs[k],
                       " must be non-negative"));
    }
    integral = integral && IsIntegral(coeffs[k]);
  }
  double top = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) top = top * n + *it;
  integral = integral && top <= kExactValueLimit;
  Claims claims = MonotoneWeaklySubmodular();
  const int degree = static_cast<int>(coeffs.size()) - 1;
  if (degree <= 1) {
    claims.submodular = true;
  } else if (n >= 2) {
    claims.submodular = false;
  }
  return SetFunction(IndexedGround(n), std::make_shared<PolynomialOracle>(std::move(coeffs)),
                     DomainFor(integral), claims, "cardinality_poly");
}

absl::StatusOr<SetFunction> RawCardinalityProfile(int n, std::vector<double> coeffs) {
  if (auto st = CheckSize(n); !st.ok()) return st;
  bool integral = true;
  double bound = 0.0;
  for (double c : coeffs) {
    if (!std::isfinite(c)) return absl::InvalidArgumentError("non-finite coefficient");
    integral = integral && IsIntegral(c);
  }
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) bound = bound * n + std::fabs(*it);
  integral = integral && bound <= kExactValueLimit;
  return SetFunction(IndexedGround(n), std::make_shared<PolynomialOracle>(std::move(coeffs)),
                     DomainFor(integral), Claims{}, "raw_cardinality_profile");
}

absl::StatusOr<SetFunction> Threshold(int n, int k, double b) {
  if (auto st = CheckSize(n); !st.ok()) return st;
  if (k < 1) return absl::InvalidArgumentError(absl::StrCat("threshold k must be >= 1, got ", k));
  if (!(b > 0) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(absl::StrCat("threshold value B must be > 0, got ", b));
  }
  Claims claims;
  claims.normalized = true;
  claims.nonnegative = true;
  claims.monotone = true;
  claims.weakly_submodular = k <= 2;
  if (k == 1) claims.submodular = true;
  const bool integral = IsIntegral(b) && b <= kExactValueLimit;
  return SetFunction::FromCallable(
      IndexedGround(n), [k, b](Mask s) { return std::popcount(s) >= k ? b : 0.0; },
      DomainFor(integral), claims, "threshold");
}

absl::StatusOr<SetFunction> LinearCombination(std::span<const SetFunction> fs,
                                              std::vector<double> alphas) {
  if (fs.empty()) return absl::InvalidArgumentError("linear combination of no functions");
  if (fs.size() != alphas.size()) {
    return absl::InvalidArgumentError(absl::StrCat("linear combination has ", fs.size(),
                                                   " functions but ", alphas.size(), " alphas"));
  }
  bool integral = true;
  Claims claims = MonotoneWeaklySubmodular();
  claims.submodular = true;
  auto meet = [](std::optional<bool>& acc, const std::optional<bool>& in) {
    if (!(in.has_value() && *in)) acc.reset();
  };
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!(fs[i].ground() == fs[0].ground())) {
      return absl::InvalidArgumentError(
          absl::StrCat("function ", i, " ('", fs[i].name(), "') has a different ground set"));
    }
    if (!std::isfinite(alphas[i]) || alphas[i] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("alpha[", i, "] = ", alphas[i], " must be non-negative"));
    }
    integral = integral && IsIntegral(alphas[i]) && fs[i].domain() == ValueDomain::kInteger;
    if (alphas[i] == 0) continue;
    meet(claims.normalized, fs[i].claims().normalized);
    meet(claims.nonnegative, fs[i].claims().nonnegative);
    meet(claims.monotone, fs[i].claims().monotone);
    meet(claims.submodular, fs[i].claims().submodular);
    meet(claims.weakly_submodular, fs[i].claims().weakly_submodular);
  }
  std::vector<SetFunction> copies(fs.begin(), fs.end());
  GroundSet ground = fs[0].ground();
  return SetFunction(std::move(ground),
                     std::make_shared<CombinationOracle>(std::move(copies), std::move(alphas)),
                     DomainFor(integral), claims, "combination");
}

absl::StatusOr<SetFunction> MsdObjective(const SetFunction& g, const DistanceMatrix& d) {
  if (g.n() != d.n()) {
    return absl::InvalidArgumentError(absl::StrCat("quality function has ", g.n(),
                                                   " elements but the metric has ", d.n()));
  }
  auto disp = MetricDispersion(d);
  if (!disp.ok()) return disp;
  // Put the dispersion term on g's ground set so the labels agree.
  const SetFunction terms[] = {
      g, SetFunction(g.ground(), disp->oracle(), disp->domain(), disp->claims(), disp->name())};
  auto f = LinearCombination(terms, {1.0, 1.0});
  if (!f.ok()) return f;
  return SetFunction(f->ground(), f->oracle(), f->domain(), f->claims(), "msd_objective");
}

SetFunction Complement(const SetFunction& f) {
  const Mask full = FullMask(f.n());
  SetFunction inner = f;
  return SetFunction::FromCallable(
      f.ground(), [inner, full](Mask s) { return inner(~s & full); }, f.domain(), Claims{},
      "complement(" + f.name() + ")");
}

absl::StatusOr<SetFunction> ZeroAtTop(const SetFunction& f) {
  if (f.claims().monotone == false) {
    return absl::FailedPreconditionError(
        absl::StrCat("'", f.name(), "' is declared non-monotone"));
  }
  const int n = f.n();
  const Mask full = FullMask(n);
  // For monotone f some proper non-empty S* has f(S*) > 0 iff some
  // U \ {e} does.
  bool positive = false;
  for (int e = 0; e < n && !positive && n >= 2; ++e) positive = f(full & ~(Mask{1} << e)) > 0;
  if (!positive) {
    return absl::FailedPreconditionError(absl::StrCat(
        "'", f.name(), "' has no proper non-empty subset with a positive value"));
  }
  Claims claims;
  claims.normalized = f.claims().normalized;
  claims.nonnegative = f.claims().nonnegative;
  claims.monotone = false;
  SetFunction inner = f;
  return SetFunction::FromCallable(
      f.ground(), [inner, full](Mask s) { return s == full ? 0.0 : inner(s); }, f.domain(),
      claims, "zero_at_top(" + f.name() + ")");
}

absl::StatusOr<SetFunction> MaxCut(const Graph& g) {
  Claims claims;
  claims.normalized = true;
  claims.nonnegative = true;
  return SetFunction(IndexedGround(g.vertices()), std::make_shared<MaxCutOracle>(g),
                     DomainFor(g.integral()), claims, "max_cut");
}

absl::StatusOr<SetFunction> SupermodularPair(double b) {
  if (!(b > 0) || !std::isfinite(b)) {
    return absl::InvalidArgumentError(absl::StrCat("B must be > 0, got ", b));
  }
  Claims claims;
  claims.normalized = true;
  claims.nonnegative = true;
  claims.monotone = true;
  claims.weakly_submodular = false;
  claims.submodular = false;
  const bool integral = IsIntegral(b) && b <= kExactValueLimit;
  return SetFunction::FromCallable(*GroundSet::FromLabels({"a1", "a2", "b"}),
                                   [b](Mask s) { return (s & 0b011) == 0b011 ? b : 0.0; },
                                   DomainFor(integral), claims, "supermodular_pair");
}

}  // namespace wsub::zoo
