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
#include "wsub/bounds/bounds.h"
#include "wsub/io/serialize.h"

namespace wsub::bounds {
namespace {

using ::wsub::testing::Must;

// Straight long-double evaluation of the greedy ratio from the defining sums,
// sharing no code with the library.
long double OracleGreedyRatio(int p) {
  std::vector<long double> a(p), b(p);
  for (int i = 1; i < p; ++i) {
    const long double q = static_cast<long double>(i + 1) / i;
    long double pw = 1, sa = 0, sb = 0;
    for (int j = 1; j <= p; ++j) {
      sa += (i + p - j) * pw;
      if (j <= p - 1) sb += (i + p - j + 1) * pw;
      pw *= q;
    }
    a[i] = sa;
    b[i] = sb;
  }
  long double total = 0;
  for (int i = 1; i < p; ++i) {
    long double term = i / a[i];
    for (int j = i + 1; j < p; ++j) term *= b[j] / a[j];
    total += term;
  }
  return 1 / total;
}

long double OracleLs(int s, int t) {
  const long double x = std::pow(static_cast<long double>(s + 1) / s, t);
  return (2 * s * x * x - 2 * t * x - 2 * s) / ((2 * s - t) * x - 2 * s);
}

double Rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TEST(IdentityTest, GeometricExamples) {
  const IdentitySides a = Must(GeometricIdentity(1, 3));
  EXPECT_EQ(a.lhs, 7.0);
  EXPECT_EQ(a.rhs, 7.0);
  const IdentitySides b = Must(GeometricIdentity(2, 1));
  EXPECT_EQ(b.lhs, 1.0);
  EXPECT_EQ(b.rhs, 1.0);
  const IdentitySides c = Must(GeometricIdentity(3, 5));
  EXPECT_LE(Rel(c.lhs, c.rhs), 1e-12);
  EXPECT_FALSE(GeometricIdentity(0, 3).ok());
  EXPECT_FALSE(GeometricIdentity(1, 0).ok());
}

TEST(IdentityTest, WeightedGeometricGrid) {
  EXPECT_EQ(Must(WeightedGeometricIdentity(1, 2)).lhs, 5.0);
  EXPECT_EQ(Must(WeightedGeometricIdentity(1, 2)).rhs, 5.0);
  EXPECT_EQ(Must(WeightedGeometricIdentity(2, 1)).lhs, 1.0);
  for (int i = 1; i <= 10; ++i) {
    for (int n = 1; n <= 50; ++n) {
      const IdentitySides s = Must(WeightedGeometricIdentity(i, n));
      EXPECT_LE(Rel(s.lhs, s.rhs), 1e-12) << i << " " << n;
    }
  }
}

TEST(CoefficientTest, SmallExamples) {
  EXPECT_EQ(Must(AStar(1, 2, Arithmetic::kRational)), 4.0);
  EXPECT_EQ(Must(AStar(2, 3, Arithmetic::kRational)), 13.0);
  EXPECT_EQ(Must(BStar(2, 3, Arithmetic::kRational)), 11.0);
  EXPECT_FALSE(AStar(0, 3).ok());
  EXPECT_FALSE(AStar(3, 3).ok());
  EXPECT_FALSE(BStar(1, 1).ok());
}

TEST(CoefficientTest, DifferenceIsExactlyI) {
  for (long p = 2; p <= 40; ++p) {
    for (long i = 1; i < p; ++i) {
      EXPECT_EQ(formula::AStar<Rational>(i, p) - formula::BStar<Rational>(i, p), Rational(i));
    }
  }
}

TEST(CoefficientTest, ClosedFormsMatchDefiningSums) {
  for (long p = 2; p <= 64; ++p) {
    for (long i = 1; i < p; ++i) {
      ASSERT_EQ(formula::AStar<Rational>(i, p), formula::AStarSum<Rational>(i, p)) << i << " " << p;
      ASSERT_EQ(formula::BStar<Rational>(i, p), formula::BStarSum<Rational>(i, p)) << i << " " << p;
      const double closed = static_cast<double>(formula::AStar<BigFloat>(i, p));
      const double sum = static_cast<double>(formula::AStarSum<BigFloat>(i, p));
      EXPECT_LE(Rel(closed, sum), 1e-9);
    }
  }
}

TEST(GreedyRatioTest, TwoIsExactlyFour) {
  EXPECT_EQ(Must(GreedyRatioExact(2)), Rational(4));
  EXPECT_EQ(Must(GreedyRatioExact(3)), Rational(13, 3));
  EXPECT_EQ(Must(GreedyRatio(2, Arithmetic::kDouble)), 4.0);
}

TEST(GreedyRatioTest, AgreesWithIndependentOracle) {
  for (int p : {2, 3, 5, 10, 20, 50, 100, 200}) {
    const double oracle = static_cast<double>(OracleGreedyRatio(p));
    EXPECT_LE(Rel(Must(GreedyRatio(p)), oracle), 1e-12) << p;
    EXPECT_LE(Rel(Must(GreedyRatio(p, Arithmetic::kDouble)), oracle), 1e-10) << p;
  }
  EXPECT_NEAR(Must(GreedyRatio(10)), 5.385877670, 1e-9);
  EXPECT_NEAR(Must(GreedyRatio(100)), 5.895392831, 1e-9);
}

TEST(GreedyRatioTest, SumsRouteAndArithmeticsAgree) {
  for (int p = 2; p <= kExactGreedyMaxP; ++p) {
    const double big = Must(GreedyRatio(p));
    EXPECT_LE(Rel(Must(GreedyRatioFromSums(p)), big), 1e-9) << p;
    EXPECT_LE(Rel(Must(GreedyRatio(p, Arithmetic::kRational)), big), 1e-15) << p;
    EXPECT_LE(Rel(Must(GreedyRatioFromSums(p, Arithmetic::kRational)), big), 1e-15) << p;
    EXPECT_LE(Rel(Must(GreedyRatio(p, Arithmetic::kDouble)), big), 1e-12) << p;
  }
  EXPECT_FALSE(GreedyRatioExact(kExactGreedyMaxP + 1).ok());
  EXPECT_FALSE(GreedyRatio(1).ok());
}

TEST(GreedyRatioTest, ScanIsIncreasingAndBelowTheLimit) {
  double prev = 0;
  for (int p = 10; p <= 2000; p += 10) {
    const double v = Must(GreedyRatio(p));
    EXPECT_GE(v, prev) << p;
    EXPECT_LT(v, 5.96) << p;
    EXPECT_LE(Rel(Must(GreedyRatio(p, Arithmetic::kDouble)), v), 1e-9) << p;
    prev = v;
  }
  EXPECT_NEAR(prev, 5.952545534, 1e-8);
}

TEST(GreedyRatioTest, IncreasingFromTwo) {
  double prev = 0;
  for (int p = 2; p <= 12; ++p) {
    const double v = Must(GreedyRatio(p));
    EXPECT_GT(v, prev) << p;
    prev = v;
  }
}

TEST(LocalSearchBoundTest, Examples) {
  EXPECT_NEAR(Must(LsDiscreteBound(6, 6)), 10.877415, 1e-6);
  EXPECT_EQ(Must(LsDiscreteBoundExact(2, 2)), Rational(29, 2));
  EXPECT_EQ(Must(LsDiscreteBound(2, 2, Arithmetic::kDouble)), 14.5);
  EXPECT_NEAR(Must(LocalSearchBound(2)).value, 14.5, 1e-12);
  EXPECT_FALSE(LsDiscreteBound(5, 1).ok());
  EXPECT_FALSE(LsDiscreteBound(5, 6).ok());
  EXPECT_FALSE(LocalSearchBound(1).ok());
}

TEST(LocalSearchBoundTest, AgreesWithIndependentOracle) {
  for (int s = 2; s <= 60; s += 3) {
    for (int t = 2; t <= s; ++t) {
      const double oracle = static_cast<double>(OracleLs(s, t));
      EXPECT_LE(Rel(Must(LsDiscreteBound(s, t)), oracle), 1e-12) << s << " " << t;
      EXPECT_LE(Rel(Must(LsDiscreteBound(s, t, Arithmetic::kRational)), oracle), 1e-12);
    }
  }
}

TEST(LocalSearchBoundTest, ScanIsNonIncreasingWithArgmaxAtS) {
  double prev = 1e9;
  for (int s = 2; s <= 500; ++s) {
    const LocalSearchBoundValue v = Must(LocalSearchBound(s));
    EXPECT_LE(v.value, 14.5 + 1e-6) << s;
    EXPECT_LE(v.value, prev) << s;
    EXPECT_EQ(v.argmax_t, s) << s;
    prev = v.value;
  }
  EXPECT_NEAR(prev, 10.226117, 1e-6);
  EXPECT_LT(std::abs(prev - 10.22), 0.01);
}

TEST(LocalSearchBoundTest, DiscreteApproachesTheContinuousBound) {
  const int s = 1000;
  const double x = std::pow(1.0 + 1.0 / s, s);
  EXPECT_LT(std::abs(Must(LsDiscreteBound(s, s)) - Must(GContinuous(x, 1.0))), 0.01);
}

TEST(GContinuousTest, Examples) {
  EXPECT_NEAR(Must(GContinuous(std::exp(1.0), 1.0)), 10.220986, 1e-6);
  EXPECT_EQ(Must(GContinuousExactUnitR(Rational(9, 4))), Rational(29, 2));
  EXPECT_NEAR(Must(GContinuous(2.25, 1.0)), 14.5, 1e-12);
  EXPECT_FALSE(GContinuous(2.0, 1.0).ok());
  EXPECT_FALSE(GContinuous(2.8, 1.0).ok());
  EXPECT_FALSE(GContinuous(2.5, 0.0).ok());
  EXPECT_FALSE(GContinuous(2.5, 1.5).ok());
  EXPECT_FALSE(GContinuousExactUnitR(Rational(2)).ok());
}

TEST(GStationaryTest, UnitRIsThreeAndTen) {
  const Stationary st = Must(GStationary(1.0));
  EXPECT_NEAR(st.x_star, 3.0, 1e-12);
  EXPECT_NEAR(st.g_value, 10.0, 1e-12);
  const StationaryExact ex = Must(GStationaryExact(1));
  EXPECT_EQ(ex.x_star, Rational(3));
  EXPECT_EQ(ex.g_value, Rational(10));
  const StationaryExact half = Must(GStationaryExact(2));
  EXPECT_EQ(half.x_star, Rational(25, 9));
  EXPECT_EQ(half.g_value, Rational(34, 9));
  EXPECT_FALSE(GStationary(0.0).ok());
  EXPECT_FALSE(GStationary(1.1).ok());
  EXPECT_FALSE(GStationaryExact(0).ok());
}

TEST(GStationaryTest, GridMatchesClosedFormAndIncreases) {
  double prev = 0;
  for (int k = 1; k <= 20; ++k) {
    const double r = 0.05 * k;
    const Stationary st = Must(GStationary(r));
    const double closed = (2 * r * r + 8) / ((r - 2) * (r - 2));
    EXPECT_LE(Rel(st.g_value, closed), 1e-9) << r;
    const double xr = std::pow(st.x_star, r);
    const double direct = (2 * xr * xr - 2 * r * xr - 2) / ((2 - r) * xr - 2);
    EXPECT_LE(Rel(direct, closed), 1e-9) << r;
    EXPECT_GT(closed, prev);
    prev = closed;
  }
  EXPECT_NEAR(prev, 10.0, 1e-12);
}

TEST(RearrangementTest, Examples) {
  EXPECT_TRUE(Must(RearrangementCheck({2, 2, 2}, {1, 1, 1}, {3, 3, 3})));
  EXPECT_TRUE(Must(RearrangementCheck({2, 1}, {1, 1}, {3, 0})));
  EXPECT_FALSE(RearrangementCheck({1, 2}, {1, 1}, {3, 0}).ok());
  EXPECT_FALSE(RearrangementCheck({2, 1}, {1, 1}, {3}).ok());
  EXPECT_FALSE(RearrangementCheck({2, -1}, {1, 1}, {3, 0}).ok());
}

TEST(RearrangementTest, RandomSortedTriples) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<double> a(n), b(n), x(n);
    for (int i = 0; i < n; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
      x[i] = u(rng);
    }
    for (auto* v : {&a, &b, &x}) std::sort(v->rbegin(), v->rend());
    ASSERT_TRUE(Must(RearrangementCheck(a, b, x)));
  }
}

TEST(RatioTableTest, CsvAndJson) {
  const RatioTable t = Must(MakeRatioTable(BoundKind::kLocalSearch, 2, 6, 2));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0].param, 2);
  EXPECT_NEAR(t.rows[2].bound, 10.877415, 1e-6);
  const std::string csv = ToCsv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "param,bound,mode");
  EXPECT_NE(csv.find("2,14.5,float50"), std::string::npos);
  const io::Json j = io::ToJson(t);
  EXPECT_EQ(j["rows"].size(), 3u);
  for (const RatioRow& row : Must(MakeRatioTable(BoundKind::kGreedy, 2, 40, 1)).rows) {
    EXPECT_TRUE(std::isfinite(row.bound));
    EXPECT_GT(row.bound, 1.0);
  }
  EXPECT_FALSE(MakeRatioTable(BoundKind::kGreedy, 1, 5, 1).ok());
  EXPECT_FALSE(MakeRatioTable(BoundKind::kGreedy, 5, 2, 1).ok());
  EXPECT_FALSE(MakeRatioTable(BoundKind::kGreedy, 2, 5, 0).ok());
}

TEST(ArithmeticTest, NamesRoundTrip) {
  for (Arithmetic a : {Arithmetic::kDouble, Arithmetic::kBigFloat, Arithmetic::kRational}) {
    EXPECT_EQ(Must(ParseArithmetic(ArithmeticName(a))), a);
  }
  EXPECT_FALSE(ParseArithmetic("quad").ok());
}

}  // namespace
}  // namespace wsub::bounds
