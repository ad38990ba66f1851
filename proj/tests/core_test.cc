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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"
#include "wsub/core/checks.h"
#include "wsub/core/ground_set.h"
#include "wsub/core/set_function.h"
#include "wsub/core/subset.h"
#include "wsub/zoo/data.h"
#include "wsub/zoo/functions.h"
#include "wsub/zoo/random.h"

namespace wsub {
namespace {

using ::wsub::testing::Must;
using ::wsub::testing::NaiveFirstSubmodularViolation;
using ::wsub::testing::NaiveFirstWeakViolation;

SetFunction Callable(int n, std::function<double(Mask)> fn,
                     ValueDomain domain = ValueDomain::kInteger) {
  return SetFunction::FromCallable(Must(GroundSet::Indexed(n)), std::move(fn), domain, {},
                                   "callable");
}

TEST(SubsetTest, SetAlgebra) {
  const Subset s = Subset::FromIndices(6, {0, 2, 4});
  const Subset t = Subset::FromIndices(6, {2, 3});
  EXPECT_EQ((s | t).Elements(), (std::vector<int>{0, 2, 3, 4}));
  EXPECT_EQ((s & t).Elements(), (std::vector<int>{2}));
  EXPECT_EQ((s - t).Elements(), (std::vector<int>{0, 4}));
  EXPECT_EQ(s.Complement().Elements(), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.With(1).Contains(1));
  EXPECT_FALSE(s.Without(0).Contains(0));
  EXPECT_TRUE((s & t).IsSubsetOf(s));
  EXPECT_EQ(s.ToString(), "{0,2,4}");
  EXPECT_EQ(Subset::Full(64).size(), 64);
}

TEST(SubsetTest, KSubsetsInIncreasingMaskOrder) {
  std::vector<Mask> seen;
  ForEachKSubset(5, 2, [&](Mask m) {
    seen.push_back(m);
    return true;
  });
  ASSERT_EQ(seen.size(), 10u);
  for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_LT(seen[i - 1], seen[i]);
  for (Mask m : seen) EXPECT_EQ(std::popcount(m), 2);
}

TEST(GroundSetTest, LabelsAreUniqueAndIndexed) {
  const GroundSet g = Must(GroundSet::FromLabels({"a", "b", "c"}));
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.IndexOf("c"), 2);
  EXPECT_FALSE(g.IndexOf("z").has_value());
  EXPECT_FALSE(GroundSet::FromLabels({"a", "a"}).ok());
  EXPECT_FALSE(GroundSet::Indexed(65).ok());
  EXPECT_EQ(Must(GroundSet::Indexed(2)).label(1), "1");
}

TEST(EvaluateTest, DispersionOfEmptySetIsZero) {
  const SetFunction f = Must(zoo::MetricDispersion(zoo::DistanceMatrix::Unit(4)));
  EXPECT_EQ(Must(Evaluate(f, Subset(4))), 0.0);
}

TEST(EvaluateTest, UnitTriangleHasThreePairs) {
  const SetFunction f = Must(zoo::MetricDispersion(zoo::DistanceMatrix::Unit(3)));
  EXPECT_EQ(Must(Evaluate(f, Subset::Full(3))), 3.0);
}

TEST(EvaluateTest, SegmentationTakesColumnMaxima) {
  const std::vector<std::vector<double>> rows = {{1, 5}, {4, 2}, {0, 3}};
  const SetFunction f = Must(zoo::Segmentation(Must(zoo::SegmentationMatrix::Create(rows))));
  double expected = 0.0;
  for (int j = 0; j < 2; ++j) expected += std::max(rows[0][j], rows[1][j]);
  EXPECT_EQ(Must(Evaluate(f, Subset::FromIndices(3, {0, 1}))), expected);
}

TEST(EvaluateTest, RejectsUniverseMismatch) {
  const SetFunction f = Must(zoo::CardinalityPower(4, 1));
  EXPECT_FALSE(Evaluate(f, Subset(5)).ok());
}

TEST(EvaluateTest, RejectsInexactIntegerValues) {
  EXPECT_FALSE(Evaluate(Callable(2, [](Mask) { return 0.5; }), Subset(2)).ok());
  EXPECT_FALSE(Evaluate(Callable(2, [](Mask) { return std::ldexp(1.0, 50); }), Subset(2)).ok());
  EXPECT_TRUE(Evaluate(Callable(2, [](Mask) { return 0.5; }, ValueDomain::kReal), Subset(2)).ok());
}

TEST(EvaluateTest, RepeatedEvaluationIsBitIdentical) {
  std::mt19937_64 rng(3);
  const SetFunction f = Must(zoo::MetricDispersion(zoo::RandomMetric(8, rng, false)));
  for (Mask s = 0; s < 256; ++s) EXPECT_EQ(f(s), f(s));
}

TEST(ToleranceTest, RelativeForRealsAndZeroForIntegers) {
  EXPECT_FALSE(ViolatesInequality(1.0, 1.0 + 1e-12, kRealRelativeTolerance));
  EXPECT_TRUE(ViolatesInequality(1.0, 1.1, kRealRelativeTolerance));
  EXPECT_FALSE(ViolatesInequality(1e12, 1e12 + 1.0, kRealRelativeTolerance));
  EXPECT_TRUE(ViolatesInequality(1e12, 1e12 + 1.0, RelativeTolerance(ValueDomain::kInteger)));
}

TEST(CheckNormalizedNonnegativeTest, SquareOfCardinalityPasses) {
  const CheckReport r = Must(CheckNormalizedNonnegative(Must(zoo::CardinalityPower(4, 2))));
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.pairs_checked, 16);
}

TEST(CheckNormalizedNonnegativeTest, LinearPasses) {
  EXPECT_TRUE(Must(CheckNormalizedNonnegative(Must(zoo::Linear({1, 2, 3})))).passed);
}

TEST(CheckNormalizedNonnegativeTest, NonzeroEmptySetFailsAtEmptySet) {
  const CheckReport r =
      Must(CheckNormalizedNonnegative(Callable(3, [](Mask s) { return 1.0 + std::popcount(s); })));
  ASSERT_FALSE(r.passed);
  EXPECT_TRUE(r.witness->s.empty());
  EXPECT_EQ(r.witness->kind, Property::kNormalized);
}

TEST(CheckNormalizedNonnegativeTest, NegativeValueIsReported) {
  const CheckReport r = Must(CheckNormalizedNonnegative(
      Callable(3, [](Mask s) { return s == 5 ? -2.0 : 0.0; })));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness->kind, Property::kNonnegative);
  EXPECT_EQ(r.witness->s.mask(), 5u);
}

TEST(CheckMonotoneTest, AverageNonnegativeSegmentationPasses) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction f = Must(zoo::Segmentation(zoo::RandomSegmentationMatrix(7, 5, rng)));
    EXPECT_TRUE(Must(CheckMonotone(f)).passed);
  }
}

TEST(CheckMonotoneTest, ZeroAtTopFailsBelowTheFullSet) {
  const zoo::DistanceMatrix d = Must(zoo::DistanceMatrix::Create({{0, 2, 3}, {2, 0, 4}, {3, 4, 0}}));
  const SetFunction g = Must(zoo::ZeroAtTop(Must(zoo::MetricDispersion(d))));
  const CheckReport r = Must(CheckMonotone(g));
  ASSERT_FALSE(r.passed);
  const Subset full = Subset::Full(3);
  ASSERT_TRUE(r.witness->t.has_value());
  EXPECT_EQ(*r.witness->t, full);
  EXPECT_EQ(r.witness->s.size(), 2);
  EXPECT_TRUE(r.witness->s.IsSubsetOf(full));
  EXPECT_TRUE(Must(ReproducesViolation(g, *r.witness)));
}

TEST(CheckMonotoneTest, LinearPasses) {
  EXPECT_TRUE(Must(CheckMonotone(Must(zoo::Linear({0, 1, 5, 2})))).passed);
}

TEST(CheckSubmodularTest, CoveragePasses) {
  std::mt19937_64 rng(5);
  const zoo::CoverageInstance c = zoo::RandomCoverage(8, 12, rng);
  EXPECT_TRUE(Must(CheckSubmodular(Must(zoo::Coverage(c.item_weights, c.covers)))).passed);
}

TEST(CheckSubmodularTest, UnitDispersionFails) {
  const SetFunction f = Must(zoo::MetricDispersion(zoo::DistanceMatrix::Unit(4)));
  const CheckReport r = Must(CheckSubmodular(f));
  ASSERT_FALSE(r.passed);
  EXPECT_TRUE(Must(ReproducesViolation(f, *r.witness)));
  const auto naive = NaiveFirstSubmodularViolation(f, 0.0);
  ASSERT_TRUE(naive.has_value());
  EXPECT_EQ(r.witness->s.mask(), naive->s);
  EXPECT_EQ(r.witness->t->mask(), naive->t);
}

TEST(CheckSubmodularTest, LinearPasses) {
  EXPECT_TRUE(Must(CheckSubmodular(Must(zoo::Linear({3, 1, 4, 1, 5})))).passed);
}

TEST(CheckWeaklySubmodularTest, MaxCutStarFails) {
  const SetFunction f = Must(zoo::MaxCut(zoo::StarCounterexample(3)));
  const CheckReport r = Must(CheckWeaklySubmodular(f));
  ASSERT_FALSE(r.passed);
  EXPECT_TRUE(Must(ReproducesViolation(f, *r.witness)));
  // The pair from the construction: S = R + s, T = R + t.
  const InequalitySides sides = WeakSubmodularSides(f, Subset::FromIndices(5, {0, 1, 2, 3}),
                                                    Subset::FromIndices(5, {0, 1, 2, 4}));
  EXPECT_EQ(sides.lhs, 24.0);
  EXPECT_EQ(sides.rhs, 30.0);
}

TEST(CheckWeaklySubmodularTest, MaxCutStarClosedFormsForLargerStars) {
  for (int n = 1; n <= 8; ++n) {
    const SetFunction f = Must(zoo::MaxCut(zoo::StarCounterexample(n)));
    Subset s = Subset::FromIndices(n + 2, {n});
    Subset t = Subset::FromIndices(n + 2, {n + 1});
    for (int r = 0; r < n; ++r) {
      s.Insert(r);
      t.Insert(r);
    }
    const InequalitySides sides = WeakSubmodularSides(f, s, t);
    EXPECT_EQ(sides.lhs, 2.0 * n * n + 2.0 * n);
    EXPECT_EQ(sides.rhs, 2.0 * n * n + 4.0 * n);
  }
}

TEST(CheckWeaklySubmodularTest, ThresholdThreeFailsOnTwoOverlappingPairs) {
  const SetFunction f = Must(zoo::Threshold(5, 3, 1.0));
  const CheckReport r = Must(CheckWeaklySubmodular(f));
  ASSERT_FALSE(r.passed);
  const ViolationWitness& w = *r.witness;
  EXPECT_EQ(w.s.size(), 2);
  EXPECT_EQ(w.t->size(), 2);
  EXPECT_EQ((w.s & *w.t).size(), 1);
  EXPECT_EQ(w.lhs, 0.0);
  EXPECT_EQ(w.rhs, 1.0);
}

TEST(CheckWeaklySubmodularTest, RandomMetricDispersionPasses) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 8; ++n) {
    const SetFunction f = Must(zoo::MetricDispersion(zoo::RandomMetric(n, rng)));
    EXPECT_TRUE(Must(CheckWeaklySubmodular(f)).passed) << "n = " << n;
  }
}

TEST(CheckWeaklySubmodularTest, ExhaustivePassCountsAllUnorderedPairs) {
  const CheckReport r = Must(CheckWeaklySubmodular(Must(zoo::CardinalityPower(6, 2))));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.pairs_checked, 64 * 65 / 2);
}

TEST(CheckWeaklySubmodularTest, FailurePairCountIsPositionInScan) {
  const SetFunction f = Must(zoo::Threshold(5, 3, 1.0));
  const CheckReport r = Must(CheckWeaklySubmodular(f));
  ASSERT_FALSE(r.passed);
  const std::int64_t big_n = 32;
  const std::int64_t s = r.witness->s.mask();
  const std::int64_t t = r.witness->t->mask();
  EXPECT_EQ(r.pairs_checked, s * big_n - s * (s - 1) / 2 + (t - s + 1));
}

TEST(CheckCapsTest, ExceedingACapIsAnError) {
  EXPECT_FALSE(CheckWeaklySubmodular(Must(zoo::CardinalityPower(13, 2))).ok());
  EXPECT_FALSE(CheckSubmodular(Must(zoo::CardinalityPower(13, 1))).ok());
  EXPECT_FALSE(CheckMonotone(Must(zoo::CardinalityPower(15, 1))).ok());
  EXPECT_FALSE(CheckNormalizedNonnegative(Must(zoo::CardinalityPower(21, 1))).ok());
  CheckOptions raised;
  raised.caps.pairwise = 13;
  EXPECT_TRUE(CheckWeaklySubmodular(Must(zoo::CardinalityPower(13, 2)), raised).ok());
}

TEST(CheckCardinalityFamilyTest, FourthPowerFailsAtTheKnownTriple) {
  const CheckReport r = Must(CheckCardinalityFamily(CardinalityProfile::Power(4), 8, 8, 8));
  EXPECT_FALSE(r.passed);
  const ExactSides sides = CardinalityFamilySides(CardinalityProfile::Power(4), 4, 4, 1);
  EXPECT_EQ(static_cast<std::int64_t>(sides.lhs), 6250);
  EXPECT_EQ(static_cast<std::int64_t>(sides.rhs), 6570);
}

TEST(CheckCardinalityFamilyTest, SquareAndCubePass) {
  EXPECT_TRUE(Must(CheckCardinalityFamily(CardinalityProfile::Power(2), 16, 16, 16)).passed);
  EXPECT_TRUE(Must(CheckCardinalityFamily(CardinalityProfile::Power(3), 16, 16, 16)).passed);
}

TEST(CheckCardinalityFamilyTest, PowersUpToThreePassAndAboveFail) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_TRUE(Must(CheckCardinalityFamily(CardinalityProfile::Power(k), 8, 8, 8)).passed) << k;
  }
  for (int k = 4; k <= 8; ++k) {
    const CheckReport r = Must(CheckCardinalityFamily(CardinalityProfile::Power(k), 8, 8, 8));
    ASSERT_FALSE(r.passed) << k;
    // The concrete sets behind the triple violate the set-function form.
    const auto [a, b, c] = *r.witness->cardinalities;
    std::vector<double> coeffs(k + 1, 0.0);
    coeffs[k] = 1.0;
    const SetFunction f = Must(zoo::RawCardinalityProfile(a + b + c, coeffs));
    const InequalitySides sides = WeakSubmodularSides(f, r.witness->s, *r.witness->t);
    EXPECT_LT(sides.lhs, sides.rhs) << k;
  }
}

TEST(CheckCardinalityFamilyTest, AgreesWithTheSetFunctionChecker) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> coeffs(5);
    for (auto& c : coeffs) c = zoo::UniformInt(rng, -3, 3);
    coeffs[0] = 0;
    const CardinalityProfile profile{coeffs};
    const CheckReport family = Must(CheckCardinalityFamily(profile, 9, 9, 9));
    std::vector<double> real(coeffs.begin(), coeffs.end());
    // Nine elements realize exactly the triples with a + b + c <= 9.
    CheckOptions options;
    options.jobs = 4;
    const CheckReport sets =
        Must(CheckWeaklySubmodular(Must(zoo::RawCardinalityProfile(9, real)), options));
    if (family.passed) {
      EXPECT_TRUE(sets.passed) << "trial " << trial;
    }
    if (!sets.passed) {
      EXPECT_FALSE(family.passed) << "trial " << trial;
      const ViolationWitness& w = *sets.witness;
      const int a = (w.s - *w.t).size(), b = (*w.t - w.s).size(), c = (w.s & *w.t).size();
      const ExactSides sides = CardinalityFamilySides(profile, a, b, c);
      EXPECT_LT(sides.lhs, sides.rhs);
    }
  }
}

// Random integer-valued functions; most violate both inequalities.
SetFunction RandomTable(int n, std::uint64_t seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  auto table = std::make_shared<std::vector<double>>(std::size_t{1} << n);
  for (double& v : *table) v = static_cast<double>(zoo::UniformInt(rng, lo, hi));
  (*table)[0] = 0.0;
  return Callable(n, [table](Mask s) { return (*table)[s]; });
}

TEST(CheckPropertyTest, WitnessMatchesNaiveScanForAnyJobCount) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const SetFunction f = RandomTable(n, seed, 0, 20);
    const auto naive_weak = NaiveFirstWeakViolation(f, 0.0);
    const auto naive_sub = NaiveFirstSubmodularViolation(f, 0.0);
    for (int jobs : {1, 3, 8}) {
      CheckOptions options;
      options.jobs = jobs;
      const CheckReport weak = Must(CheckWeaklySubmodular(f, options));
      const CheckReport sub = Must(CheckSubmodular(f, options));
      ASSERT_EQ(weak.passed, !naive_weak.has_value());
      ASSERT_EQ(sub.passed, !naive_sub.has_value());
      if (naive_weak) {
        EXPECT_EQ(weak.witness->s.mask(), naive_weak->s);
        EXPECT_EQ(weak.witness->t->mask(), naive_weak->t);
      }
      if (naive_sub) {
        EXPECT_EQ(sub.witness->s.mask(), naive_sub->s);
        EXPECT_EQ(sub.witness->t->mask(), naive_sub->t);
      }
    }
  }
}

TEST(CheckPropertyTest, ParallelReportsAreIdentical) {
  const SetFunction f = Must(zoo::Threshold(11, 4, 3.0));
  CheckOptions one, many;
  many.jobs = 6;
  const CheckReport a = Must(CheckWeaklySubmodular(f, one));
  const CheckReport b = Must(CheckWeaklySubmodular(f, many));
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.pairs_checked, b.pairs_checked);
  EXPECT_EQ(a.witness->s, b.witness->s);
  EXPECT_EQ(*a.witness->t, *b.witness->t);
}

TEST(CheckPropertyTest, SampledWitnessesReproduce) {
  const std::vector<SetFunction> fs = {Must(zoo::Threshold(20, 3, 2.0)),
                                       Must(zoo::MaxCut(zoo::StarCounterexample(10))),
                                       RandomTable(10, 99, 0, 50)};
  for (const SetFunction& f : fs) {
    CheckOptions options;
    options.mode = Sampled{20000, 7};
    for (auto check : {&CheckWeaklySubmodular, &CheckSubmodular, &CheckMonotone}) {
      const CheckReport r = Must(check(f, options));
      if (r.passed) continue;
      EXPECT_TRUE(Must(ReproducesViolation(f, *r.witness))) << f.name();
      EXPECT_LT(r.witness->lhs, r.witness->rhs);
    }
  }
}

TEST(CheckPropertyTest, SampledModeIsDeterministicPerSeed) {
  const SetFunction f = Must(zoo::Threshold(6, 3, 1.0));
  CheckOptions options;
  options.mode = Sampled{5000, 42};
  const CheckReport a = Must(CheckWeaklySubmodular(f, options));
  const CheckReport b = Must(CheckWeaklySubmodular(f, options));
  ASSERT_FALSE(a.passed);
  EXPECT_EQ(a.pairs_checked, b.pairs_checked);
  EXPECT_EQ(a.witness->s, b.witness->s);
  EXPECT_EQ(*a.witness->t, *b.witness->t);
}

TEST(CheckPropertyTest, SampledModeNeedsNoCap) {
  CheckOptions options;
  options.mode = Sampled{2000, 1};
  EXPECT_TRUE(Must(CheckWeaklySubmodular(Must(zoo::CardinalityPower(40, 2)), options)).passed);
  EXPECT_TRUE(Must(CheckMonotone(Must(zoo::CardinalityPower(40, 3)), options)).passed);
}

TEST(CheckPropertyTest, MonotoneSubmodularImpliesWeaklySubmodular) {
  std::vector<SetFunction> fs;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const zoo::CoverageInstance c = zoo::RandomCoverage(7, 10, rng);
    fs.push_back(Must(zoo::Coverage(c.item_weights, c.covers)));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) fs.push_back(RandomTable(4, seed, 0, 6));
  fs.push_back(Must(zoo::Threshold(6, 1, 2.0)));
  fs.push_back(Must(zoo::CardinalityPower(6, 1)));
  int implications = 0;
  for (const SetFunction& f : fs) {
    if (!Must(CheckSubmodular(f)).passed || !Must(CheckMonotone(f)).passed) continue;
    ++implications;
    EXPECT_TRUE(Must(CheckWeaklySubmodular(f)).passed) << f.name();
  }
  EXPECT_GE(implications, 17);
}

TEST(CheckPropertyTest, ClaimedMonotoneZooFunctionsAreMonotone) {
  std::mt19937_64 rng(37);
  std::vector<SetFunction> fs;
  for (int n = 2; n <= 10; n += 2) {
    fs.push_back(Must(zoo::MetricDispersion(zoo::RandomMetric(n, rng, false))));
    fs.push_back(Must(zoo::Segmentation(zoo::RandomSegmentationMatrix(n, 4, rng))));
    const zoo::CoverageInstance c = zoo::RandomCoverage(n, 6, rng);
    fs.push_back(Must(zoo::Coverage(c.item_weights, c.covers)));
    fs.push_back(Must(zoo::CardinalityPower(n, 3)));
    fs.push_back(Must(zoo::Threshold(n, 2, 4.0)));
    fs.push_back(Must(zoo::CardinalityPolynomial(n, {0, 1, 2, 0.5})));
  }
  for (const SetFunction& f : fs) {
    ASSERT_EQ(f.claims().monotone, true) << f.name();
    EXPECT_TRUE(Must(CheckMonotone(f)).passed) << f.name() << " n=" << f.n();
  }
}

TEST(ReproducesViolationTest, RejectsFabricatedWitness) {
  const SetFunction f = Must(zoo::CardinalityPower(4, 2));
  const ViolationWitness w{Property::kWeaklySubmodular, Subset::FromIndices(4, {0}),
                           Subset::FromIndices(4, {1}), 0.0, 1.0, std::nullopt};
  EXPECT_FALSE(Must(ReproducesViolation(f, w)));
}

TEST(TabulateTest, MatchesDirectEvaluation) {
  std::mt19937_64 rng(41);
  const SetFunction f = Must(zoo::MetricDispersion(zoo::RandomMetric(9, rng)));
  const ValueTable t = Must(Tabulate(f, 12, 4));
  for (Mask s = 0; s < (Mask{1} << 9); ++s) EXPECT_EQ(t[s], f(s));
  EXPECT_FALSE(Tabulate(f, 8).ok());
}

}  // namespace
}  // namespace wsub
