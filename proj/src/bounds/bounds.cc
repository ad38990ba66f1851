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

#include "wsub/bounds/bounds.h"

#include <cmath>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "boost/math/constants/constants.hpp"

namespace wsub::bounds {
namespace {

namespace f = formula;

constexpr char kGreedyFormula[] = "greedy: inverse suffix-product sum of i/a*_i, b*_j/a*_j";
constexpr char kLocalSearchFormula[] = "local: max over t of (2sX^2-2tX-2s)/((2s-t)X-2s)";

absl::Status CheckPositive(const char* what, long v) {
  if (v < 1) return absl::InvalidArgumentError(absl::StrCat(what, " = ", v, " must be >= 1"));
  return absl::OkStatus();
}

absl::Status CheckCoefficientRange(int i, int p) {
  if (p < 2 || i < 1 || i > p - 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("coefficient index i = ", i, " outside [1, p - 1] for p = ", p));
  }
  return absl::OkStatus();
}

absl::Status CheckGreedyP(int p) {
  if (p < 2) return absl::InvalidArgumentError(absl::StrCat("greedy ratio needs p >= 2, got ", p));
  return absl::OkStatus();
}

absl::Status CheckLsRange(int s, int t) {
  if (s < 2 || t < 2 || t > s) {
    return absl::InvalidArgumentError(
        absl::StrCat("local-search bound needs 2 <= t <= s, got s = ", s, ", t = ", t));
  }
  return absl::OkStatus();
}

// 2 i^2 (q^p - 1) - i p with q^p - 1 = expm1(p log1p(1/i)); may be +inf.
double AStarDouble(long i, long p) {
  const double di = static_cast<double>(i);
  return 2.0 * di * di * std::expm1(static_cast<double>(p) * std::log1p(1.0 / di)) -
         di * static_cast<double>(p);
}

double GreedyRatioDouble(long p) {
  double sum = 0.0, suffix = 1.0;
  for (long i = p - 1; i >= 1; --i) {
    const double i_over_a = static_cast<double>(i) / AStarDouble(i, p);
    sum += i_over_a * suffix;
    suffix *= 1.0 - i_over_a;
  }
  return 1.0 / sum;
}

template <class T>
double ToDouble(const T& v) {
  return static_cast<double>(v);
}

}  // namespace

const char* ArithmeticName(Arithmetic a) {
  switch (a) {
    case Arithmetic::kDouble:
      return "double";
    case Arithmetic::kBigFloat:
      return "float50";
    case Arithmetic::kRational:
      return "rational";
  }
  return "?";
}

absl::StatusOr<Arithmetic> ParseArithmetic(const std::string& name) {
  for (Arithmetic a : {Arithmetic::kDouble, Arithmetic::kBigFloat, Arithmetic::kRational}) {
    if (name == ArithmeticName(a)) return a;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown arithmetic '", name, "' (double, float50, rational)"));
}

absl::StatusOr<IdentitySides> GeometricIdentity(int i, int n) {
  if (auto st = CheckPositive("i", i); !st.ok()) return st;
  if (auto st = CheckPositive("n", n); !st.ok()) return st;
  return IdentitySides{ToDouble(f::GeometricSum<BigFloat>(i, n)),
                       ToDouble(f::GeometricClosed<BigFloat>(i, n))};
}

absl::StatusOr<IdentitySides> WeightedGeometricIdentity(int i, int n) {
  if (auto st = CheckPositive("i", i); !st.ok()) return st;
  if (auto st = CheckPositive("n", n); !st.ok()) return st;
  return IdentitySides{ToDouble(f::WeightedGeometricSum<BigFloat>(i, n)),
                       ToDouble(f::WeightedGeometricClosed<BigFloat>(i, n))};
}

absl::StatusOr<double> AStar(int i, int p, Arithmetic a) {
  if (auto st = CheckCoefficientRange(i, p); !st.ok()) return st;
  switch (a) {
    case Arithmetic::kDouble:
      return AStarDouble(i, p);
    case Arithmetic::kBigFloat:
      return ToDouble(f::AStar<BigFloat>(i, p));
    case Arithmetic::kRational:
      return ToDouble(f::AStar<Rational>(i, p));
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<double> BStar(int i, int p, Arithmetic a) {
  if (auto st = CheckCoefficientRange(i, p); !st.ok()) return st;
  switch (a) {
    case Arithmetic::kDouble:
      return AStarDouble(i, p) - i;
    case Arithmetic::kBigFloat:
      return ToDouble(f::BStar<BigFloat>(i, p));
    case Arithmetic::kRational:
      return ToDouble(f::BStar<Rational>(i, p));
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<Rational> GreedyRatioExact(int p) {
  if (auto st = CheckGreedyP(p); !st.ok()) return st;
  if (p > kExactGreedyMaxP) {
    return absl::InvalidArgumentError(
        absl::StrCat("exact greedy ratio is limited to p <= ", kExactGreedyMaxP));
  }
  return f::GreedyRatio<Rational>(p);
}

absl::StatusOr<double> GreedyRatio(int p, Arithmetic a) {
  if (auto st = CheckGreedyP(p); !st.ok()) return st;
  switch (a) {
    case Arithmetic::kDouble:
      return GreedyRatioDouble(p);
    case Arithmetic::kBigFloat:
      return ToDouble(f::GreedyRatio<BigFloat>(p));
    case Arithmetic::kRational: {
      absl::StatusOr<Rational> r = GreedyRatioExact(p);
      if (!r.ok()) return r.status();
      return ToDouble(*r);
    }
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<double> GreedyRatioFromSums(int p, Arithmetic a) {
  if (auto st = CheckGreedyP(p); !st.ok()) return st;
  switch (a) {
    case Arithmetic::kDouble:
      return f::GreedyRatioFromSums<double>(p);
    case Arithmetic::kBigFloat:
      return ToDouble(f::GreedyRatioFromSums<BigFloat>(p));
    case Arithmetic::kRational:
      if (p > kExactGreedyMaxP) {
        return absl::InvalidArgumentError(
            absl::StrCat("exact greedy ratio is limited to p <= ", kExactGreedyMaxP));
      }
      return ToDouble(f::GreedyRatioFromSums<Rational>(p));
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<Rational> LsDiscreteBoundExact(int s, int t) {
  if (auto st = CheckLsRange(s, t); !st.ok()) return st;
  if (s > kExactLocalSearchMaxS) {
    return absl::InvalidArgumentError(
        absl::StrCat("exact local-search bound is limited to s <= ", kExactLocalSearchMaxS));
  }
  if (f::LsDenominator<Rational>(s, t) <= 0) {
    return absl::InternalError(absl::StrCat("non-positive denominator at s = ", s, ", t = ", t));
  }
  return f::LsDiscreteBound<Rational>(s, t);
}

absl::StatusOr<double> LsDiscreteBound(int s, int t, Arithmetic a) {
  if (auto st = CheckLsRange(s, t); !st.ok()) return st;
  switch (a) {
    case Arithmetic::kDouble:
      if (!(f::LsDenominator<double>(s, t) > 0)) break;
      return f::LsDiscreteBound<double>(s, t);
    case Arithmetic::kBigFloat:
      if (!(f::LsDenominator<BigFloat>(s, t) > 0)) break;
      return ToDouble(f::LsDiscreteBound<BigFloat>(s, t));
    case Arithmetic::kRational: {
      absl::StatusOr<Rational> r = LsDiscreteBoundExact(s, t);
      if (!r.ok()) return r.status();
      return ToDouble(*r);
    }
  }
  return absl::InternalError(absl::StrCat("non-positive denominator at s = ", s, ", t = ", t));
}

absl::StatusOr<LocalSearchBoundValue> LocalSearchBound(int s, Arithmetic a) {
  if (s < 2) return absl::InvalidArgumentError(absl::StrCat("ls bound needs s >= 2, got ", s));
  LocalSearchBoundValue best;
  for (int t = 2; t <= s; ++t) {
    absl::StatusOr<double> v = LsDiscreteBound(s, t, a);
    if (!v.ok()) return v.status();
    if (best.argmax_t == 0 || *v > best.value) best = {*v, t};
  }
  return best;
}

absl::StatusOr<double> GContinuous(double x, double r) {
  if (!(x >= 2.25 && x <= std::exp(1.0)) || !(r > 0.0 && r <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("g(x, r) needs 2.25 <= x <= e and 0 < r <= 1, got x = ", x, ", r = ", r));
  }
  const double y = std::pow(x, r);
  if (!((2.0 - r) * y - 2.0 > 0.0)) {
    return absl::InternalError(absl::StrCat("non-positive denominator at x = ", x, ", r = ", r));
  }
  return f::GOfPower(y, r);
}

absl::StatusOr<Rational> GContinuousExactUnitR(const Rational& x) {
  if (x < Rational(9, 4) ||
      BigFloat(x) > boost::math::constants::e<BigFloat>()) {
    return absl::InvalidArgumentError("exact g(x, 1) needs 9/4 <= x <= e");
  }
  return f::GOfPower(x, Rational(1));
}

absl::StatusOr<Stationary> GStationary(double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat("stationary point needs 0 < r <= 1, got ", r));
  }
  const double x_star = std::pow((2.0 + r) / (2.0 - r), 1.0 / r);
  const double closed = f::GStationaryValue(r);
  const double at_x_star = f::GOfPower(std::pow(x_star, r), r);
  if (std::abs(at_x_star - closed) > 1e-9 * std::abs(closed)) {
    return absl::InternalError(absl::StrCat("g(x*, ", r, ") = ", at_x_star,
                                            " disagrees with the closed form ", closed));
  }
  return Stationary{x_star, closed};
}

absl::StatusOr<StationaryExact> GStationaryExact(int k) {
  if (k < 1) return absl::InvalidArgumentError(absl::StrCat("r = 1/k needs k >= 1, got ", k));
  const Rational r(1, k);
  const Rational y = (Rational(2) + r) / (Rational(2) - r);
  const Rational closed = f::GStationaryValue(r);
  if (f::GOfPower(y, r) != closed) {
    return absl::InternalError(absl::StrCat("exact g(x*, 1/", k, ") disagrees with the closed form"));
  }
  return StationaryExact{f::Pow(y, k), closed};
}

absl::StatusOr<bool> RearrangementCheck(const std::vector<double>& alphas,
                                        const std::vector<double>& betas,
                                        const std::vector<double>& xs) {
  if (alphas.size() != betas.size() || alphas.size() != xs.size()) {
    return absl::InvalidArgumentError("sequences must have equal length");
  }
  for (const auto* seq : {&alphas, &betas, &xs}) {
    for (std::size_t k = 0; k < seq->size(); ++k) {
      const double v = (*seq)[k];
      if (!std::isfinite(v) || v < 0 || (k > 0 && v > (*seq)[k - 1])) {
        return absl::InvalidArgumentError(
            "sequences must be finite, non-negative and non-increasing");
      }
    }
  }
  const std::size_t n = xs.size();
  double ax = 0, b = 0, bx = 0, a = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ax += alphas[k] * xs[k];
    b += betas[k];
    bx += betas[k] * xs[n - 1 - k];
    a += alphas[k];
  }
  const double lhs = ax * b;
  const double rhs = bx * a;
  return lhs >= rhs - 1e-12 * std::max(std::abs(lhs), std::abs(rhs));
}

absl::StatusOr<RatioTable> MakeRatioTable(BoundKind kind, int from, int to, int step,
                                          Arithmetic a) {
  if (from < 2 || to < from || step < 1) {
    return absl::InvalidArgumentError(absl::StrCat("bad parameter range ", from, "..", to,
                                                   " step ", step, " (need 2 <= from <= to)"));
  }
  RatioTable table;
  table.kind = kind;
  switch (a) {
    case Arithmetic::kDouble:
      table.precision = "binary64";
      break;
    case Arithmetic::kBigFloat:
      table.precision = "cpp_bin_float_50 (50 decimal digits)";
      break;
    case Arithmetic::kRational:
      table.precision = "exact rational, rounded to binary64 on output";
      break;
  }
  table.formula_version = kind == BoundKind::kGreedy ? kGreedyFormula : kLocalSearchFormula;
  for (long param = from; param <= to; param += step) {
    absl::StatusOr<double> v;
    if (kind == BoundKind::kGreedy) {
      v = GreedyRatio(static_cast<int>(param), a);
    } else {
      absl::StatusOr<LocalSearchBoundValue> ls = LocalSearchBound(static_cast<int>(param), a);
      v = ls.ok() ? absl::StatusOr<double>(ls->value) : absl::StatusOr<double>(ls.status());
    }
    if (!v.ok()) return v.status();
    table.rows.push_back({static_cast<int>(param), *v, a});
  }
  return table;
}

std::string ToCsv(const RatioTable& t) {
  std::ostringstream out;
  out.precision(12);
  out << "param,bound,mode\n";
  for (const RatioRow& r : t.rows) {
    out << r.param << ',' << r.bound << ',' << ArithmeticName(r.mode) << '\n';
  }
  return out.str();
}

}  // namespace wsub::bounds
