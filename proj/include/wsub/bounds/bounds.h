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

#ifndef WSUB_BOUNDS_BOUNDS_H_
#define WSUB_BOUNDS_BOUNDS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "boost/multiprecision/cpp_bin_float.hpp"
#include "boost/multiprecision/cpp_int.hpp"

// Approximation-ratio formulas for greedy under a cardinality constraint and
// for local search over a matroid, in three arithmetics. The templates in
// `formula` are unchecked; the functions below them validate their inputs.

namespace wsub::bounds {

using BigFloat = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;

enum class Arithmetic { kDouble, kBigFloat, kRational };

// "double", "float50", "rational".
const char* ArithmeticName(Arithmetic a);
absl::StatusOr<Arithmetic> ParseArithmetic(const std::string& name);

namespace formula {

// base^e by repeated squaring, e >= 0.
template <class T>
T Pow(T base, long e) {
  T result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

template <class T>
T Ratio(long num, long den) {
  return T(num) / T(den);
}

// sum_{j=1}^{n} q^{j-1}, q = (i+1)/i.
template <class T>
T GeometricSum(long i, long n) {
  const T q = Ratio<T>(i + 1, i);
  T sum(0), term(1);
  for (long j = 1; j <= n; ++j) {
    sum += term;
    term *= q;
  }
  return sum;
}

// i q^n - i.
template <class T>
T GeometricClosed(long i, long n) {
  return T(i) * Pow(Ratio<T>(i + 1, i), n) - T(i);
}

// sum_{j=1}^{n} j q^{j-1}.
template <class T>
T WeightedGeometricSum(long i, long n) {
  const T q = Ratio<T>(i + 1, i);
  T sum(0), term(1);
  for (long j = 1; j <= n; ++j) {
    sum += T(j) * term;
    term *= q;
  }
  return sum;
}

// n i^2 q^{n+1} - (n+1) i^2 q^n + i^2.
template <class T>
T WeightedGeometricClosed(long i, long n) {
  const T q = Ratio<T>(i + 1, i);
  const T qn = Pow(q, n);
  const T i2(i * i);
  return T(n) * i2 * qn * q - T(n + 1) * i2 * qn + i2;
}

// a*_i = 2 i^2 q^p - 2 i^2 - i p.
template <class T>
T AStar(long i, long p) {
  const T i2(i * i);
  return T(2) * i2 * Pow(Ratio<T>(i + 1, i), p) - T(2) * i2 - T(i * p);
}

template <class T>
T BStar(long i, long p) {
  return AStar<T>(i, p) - T(i);
}

// sum_{j=1}^{p} (i + p - j) q^{j-1}.
template <class T>
T AStarSum(long i, long p) {
  const T q = Ratio<T>(i + 1, i);
  T sum(0), term(1);
  for (long j = 1; j <= p; ++j) {
    sum += T(i + p - j) * term;
    term *= q;
  }
  return sum;
}

// sum_{j=1}^{p-1} (i + p - j + 1) q^{j-1}.
template <class T>
T BStarSum(long i, long p) {
  const T q = Ratio<T>(i + 1, i);
  T sum(0), term(1);
  for (long j = 1; j <= p - 1; ++j) {
    sum += T(i + p - j + 1) * term;
    term *= q;
  }
  return sum;
}

// (sum_{i=1}^{p-1} (i / a_i) prod_{j=i+1}^{p-1} b_j / a_j)^{-1} given the
// coefficient sequences a[i], b[i] for i = 1..p-1 (index 0 unused). The
// suffix product is accumulated from i = p-1 downwards.
template <class T>
T GreedyRatioFrom(const std::vector<T>& a, const std::vector<T>& b) {
  const long p = static_cast<long>(a.size());
  T sum(0), suffix(1);
  for (long i = p - 1; i >= 1; --i) {
    sum += T(i) / a[i] * suffix;
    suffix *= b[i] / a[i];
  }
  return T(1) / sum;
}

template <class T>
T GreedyRatio(long p) {
  std::vector<T> a(p), b(p);
  for (long i = 1; i < p; ++i) {
    a[i] = AStar<T>(i, p);
    b[i] = a[i] - T(i);
  }
  return GreedyRatioFrom(a, b);
}

template <class T>
T GreedyRatioFromSums(long p) {
  std::vector<T> a(p), b(p);
  for (long i = 1; i < p; ++i) {
    a[i] = AStarSum<T>(i, p);
    b[i] = BStarSum<T>(i, p);
  }
  return GreedyRatioFrom(a, b);
}

// With X = ((s+1)/s)^t: (2 s X^2 - 2 t X - 2 s) / ((2 s - t) X - 2 s).
template <class T>
T LsDiscreteBound(long s, long t) {
  const T x = Pow(Ratio<T>(s + 1, s), t);
  return (T(2 * s) * x * x - T(2 * t) * x - T(2 * s)) / (T(2 * s - t) * x - T(2 * s));
}

template <class T>
T LsDenominator(long s, long t) {
  return T(2 * s - t) * Pow(Ratio<T>(s + 1, s), t) - T(2 * s);
}

// g in terms of y = x^r: (2 y^2 - 2 r y - 2) / ((2 - r) y - 2).
template <class T>
T GOfPower(const T& y, const T& r) {
  return (T(2) * y * y - T(2) * r * y - T(2)) / ((T(2) - r) * y - T(2));
}

// (2 r^2 + 8) / (r - 2)^2.
template <class T>
T GStationaryValue(const T& r) {
  return (T(2) * r * r + T(8)) / ((r - T(2)) * (r - T(2)));
}

}  // namespace formula

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Geometric sum against its closed form; i >= 1, n >= 1.
absl::StatusOr<IdentitySides> GeometricIdentity(int i, int n);
// Weighted geometric sum against its closed form; i >= 1, n >= 1.
absl::StatusOr<IdentitySides> WeightedGeometricIdentity(int i, int n);

// Closed-form coefficients; 1 <= i <= p - 1.
absl::StatusOr<double> AStar(int i, int p, Arithmetic a = Arithmetic::kBigFloat);
absl::StatusOr<double> BStar(int i, int p, Arithmetic a = Arithmetic::kBigFloat);

inline constexpr int kExactGreedyMaxP = 32;

// Greedy approximation ratio for cardinality p >= 2. Rational arithmetic is
// limited to p <= 32. In double arithmetic q^p - 1 is evaluated as
// expm1(p log1p(1/i)), and b_j / a_j as 1 - j / a_j, so terms whose a*
// overflows contribute 0 and factor 1.
absl::StatusOr<double> GreedyRatio(int p, Arithmetic a = Arithmetic::kBigFloat);
absl::StatusOr<Rational> GreedyRatioExact(int p);
// Same ratio with a* and b* taken from their defining sums.
absl::StatusOr<double> GreedyRatioFromSums(int p, Arithmetic a = Arithmetic::kBigFloat);

inline constexpr int kExactLocalSearchMaxS = 256;

// Local-search bound for rank s and 2 <= t <= s.
absl::StatusOr<double> LsDiscreteBound(int s, int t, Arithmetic a = Arithmetic::kBigFloat);
absl::StatusOr<Rational> LsDiscreteBoundExact(int s, int t);

struct LocalSearchBoundValue {
  double value = 0.0;
  int argmax_t = 0;
};

// max over t in 2..s of LsDiscreteBound(s, t); s >= 2. Ties keep the
// smallest t.
absl::StatusOr<LocalSearchBoundValue> LocalSearchBound(int s,
                                                       Arithmetic a = Arithmetic::kBigFloat);

// g(x, r) = (2 x^{2r} - 2 r x^r - 2) / ((2 - r) x^r - 2) on 2.25 <= x <= e,
// 0 < r <= 1.
absl::StatusOr<double> GContinuous(double x, double r);
// g(x, 1) in exact arithmetic for rational x in [9/4, 2.72].
absl::StatusOr<Rational> GContinuousExactUnitR(const Rational& x);

struct Stationary {
  double x_star = 0.0;
  double g_value = 0.0;
};

// x* = ((2 + r) / (2 - r))^{1/r} and g(x*, r) = (2 r^2 + 8) / (r - 2)^2 for
// 0 < r <= 1. Fails internally if g evaluated at x* disagrees with the closed
// form by more than 1e-9 relative. x* lies above e, so g is evaluated there
// without the domain check.
absl::StatusOr<Stationary> GStationary(double r);

struct StationaryExact {
  Rational x_star;
  Rational g_value;
};

// The same for r = 1 / k, where x*^r = (2 + r) / (2 - r) and x* are rational.
absl::StatusOr<StationaryExact> GStationaryExact(int k);

// For non-increasing non-negative sequences of equal length, checks
// sum(alpha_i x_i) sum(beta_i) >= sum(beta_i x_{n+1-i}) sum(alpha_i)
// within 1e-12 relative.
absl::StatusOr<bool> RearrangementCheck(const std::vector<double>& alphas,
                                        const std::vector<double>& betas,
                                        const std::vector<double>& xs);

struct RatioRow {
  int param = 0;
  double bound = 0.0;
  Arithmetic mode = Arithmetic::kBigFloat;
};

enum class BoundKind { kGreedy, kLocalSearch };

struct RatioTable {
  BoundKind kind = BoundKind::kGreedy;
  std::vector<RatioRow> rows;
  std::string precision;
  std::string formula_version;
};

// One row per parameter in [from, to] stepping by `step`.
absl::StatusOr<RatioTable> MakeRatioTable(BoundKind kind, int from, int to, int step,
                                          Arithmetic a = Arithmetic::kBigFloat);

// "param,bound,mode" header, one line per row, bound with 12 significant
// digits.
std::string ToCsv(const RatioTable& t);

}  // namespace wsub::bounds

#endif  // WSUB_BOUNDS_BOUNDS_H_
