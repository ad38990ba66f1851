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

#include "wsub/io/instance.h"

#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "wsub/zoo/data.h"
#include "wsub/zoo/functions.h"

namespace wsub::io {
namespace {

using Matrix = std::vector<std::vector<double>>;

absl::Status SizeMismatch(const std::string& type, const char* what, std::size_t got, int n) {
  return absl::InvalidArgumentError(
      absl::StrCat(type, ": ", what, " has ", got, " entries but the ground set has ", n));
}

const Json& Params(const Json& j) {
  static const Json kEmpty = Json::object();
  return j.contains("params") ? j.at("params") : kEmpty;
}

// Builds over the indexed ground set {0..n-1}; the caller relabels.
absl::StatusOr<SetFunction> ParseIndexed(const Json& j, int n) {
  if (!j.is_object()) return absl::InvalidArgumentError("function spec must be an object");
  const std::string type = j.at("type").get<std::string>();
  const Json& p = Params(j);

  if (type == "linear") {
    auto w = p.at("weights").get<std::vector<double>>();
    if (static_cast<int>(w.size()) != n) return SizeMismatch(type, "weights", w.size(), n);
    return zoo::Linear(std::move(w));
  }
  if (type == "coverage") {
    auto covers = p.at("covers").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(covers.size()) != n) return SizeMismatch(type, "covers", covers.size(), n);
    return zoo::Coverage(p.at("item_weights").get<std::vector<double>>(), covers);
  }
  if (type == "dispersion") {
    if (p.value("unit", false)) return zoo::MetricDispersion(zoo::DistanceMatrix::Unit(n));
    auto rows = p.at("distances").get<Matrix>();
    if (static_cast<int>(rows.size()) != n) return SizeMismatch(type, "distances", rows.size(), n);
    absl::StatusOr<zoo::DistanceMatrix> d = zoo::DistanceMatrix::Create(rows);
    if (!d.ok()) return d.status();
    return zoo::MetricDispersion(*d);
  }
  if (type == "segmentation") {
    auto rows = p.at("matrix").get<Matrix>();
    if (static_cast<int>(rows.size()) != n) return SizeMismatch(type, "matrix", rows.size(), n);
    absl::StatusOr<zoo::SegmentationMatrix> m = zoo::SegmentationMatrix::Create(rows);
    if (!m.ok()) return m.status();
    return zoo::Segmentation(*m);
  }
  if (type == "cardinality_poly") {
    const bool raw = p.value("raw", false);
    std::vector<double> coeffs;
    if (p.contains("power")) {
      const int k = p.at("power").get<int>();
      if (!raw) return zoo::CardinalityPower(n, k);
      if (k < 0) return absl::InvalidArgumentError("cardinality power must be >= 0");
      coeffs.assign(k + 1, 0.0);
      coeffs[k] = 1.0;
    } else {
      coeffs = p.at("coeffs").get<std::vector<double>>();
    }
    return raw ? zoo::RawCardinalityProfile(n, std::move(coeffs))
               : zoo::CardinalityPolynomial(n, std::move(coeffs));
  }
  if (type == "threshold") {
    return zoo::Threshold(n, p.at("k").get<int>(), p.at("B").get<double>());
  }
  if (type == "combination") {
    std::vector<SetFunction> fs;
    std::vector<double> alphas;
    for (const Json& term : p.at("terms")) {
      absl::StatusOr<SetFunction> f = ParseIndexed(term.at("function"), n);
      if (!f.ok()) return f.status();
      fs.push_back(*std::move(f));
      alphas.push_back(term.at("alpha").get<double>());
    }
    return zoo::LinearCombination(fs, std::move(alphas));
  }
  if (type == "complement" || type == "zero_at_top") {
    absl::StatusOr<SetFunction> inner = ParseIndexed(p.at("function"), n);
    if (!inner.ok()) return inner.status();
    if (type == "complement") return zoo::Complement(*inner);
    return zoo::ZeroAtTop(*inner);
  }
  if (type == "max_cut") {
    absl::StatusOr<zoo::Graph> g;
    if (p.contains("star")) {
      const int r = p.at("star").get<int>();
      if (r < 1 || r + 2 != n) {
        return absl::InvalidArgumentError(absl::StrCat(
            "max_cut: a star with ", r, " leaves needs a ground set of ", r + 2, " vertices"));
      }
      g = zoo::StarCounterexample(r);
    } else {
      std::vector<zoo::Edge> edges;
      for (const Json& e : p.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) {
          return absl::InvalidArgumentError("max_cut: edges are [u, v] or [u, v, w]");
        }
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<double>() : 1.0});
      }
      g = zoo::Graph::Create(n, std::move(edges));
    }
    if (!g.ok()) return g.status();
    return zoo::MaxCut(*g);
  }
  if (type == "supermodular_pair") {
    if (n != 3) return absl::InvalidArgumentError("supermodular_pair needs a ground set of 3");
    return zoo::SupermodularPair(p.at("B").get<double>());
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown function type '", type, "'"));
}

Mask MaskOf(const std::vector<int>& elements, int n, absl::Status& status) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 0 || e >= n) {
      status = absl::InvalidArgumentError(absl::StrCat("element ", e, " outside [0, ", n, ")"));
      return 0;
    }
    m |= Mask{1} << e;
  }
  return m;
}

template <class Fn>
auto Guard(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("schema error: ", e.what()));
  }
}

}  // namespace

absl::StatusOr<GroundSet> ParseGroundSet(const Json& j) {
  return Guard([&]() -> absl::StatusOr<GroundSet> {
    if (j.is_number_integer()) return GroundSet::Indexed(j.get<int>());
    if (j.is_array()) return GroundSet::FromLabels(j.get<std::vector<std::string>>());
    return absl::InvalidArgumentError("ground_set must be a size or a list of labels");
  });
}

absl::StatusOr<SetFunction> ParseFunction(const Json& j, const GroundSet& ground) {
  return Guard([&]() -> absl::StatusOr<SetFunction> {
    absl::StatusOr<SetFunction> f = ParseIndexed(j, ground.size());
    if (!f.ok()) return f.status();
    if (f->n() != ground.size()) {
      return absl::InvalidArgumentError(absl::StrCat("function has ", f->n(),
                                                     " elements but the ground set has ",
                                                     ground.size()));
    }
    return SetFunction(ground, f->oracle(), f->domain(), f->claims(), f->name());
  });
}

absl::StatusOr<Matroid> ParseMatroid(const Json& j, int n) {
  return Guard([&]() -> absl::StatusOr<Matroid> {
    const std::string type = j.at("type").get<std::string>();
    if (type == "uniform") return Matroid::Uniform(n, j.at("rank").get<int>());
    if (type == "partition") {
      return Matroid::Partition(n, j.at("blocks").get<std::vector<std::vector<int>>>(),
                                j.at("caps").get<std::vector<int>>());
    }
    if (type == "explicit") {
      absl::Status status;
      std::vector<Mask> sets;
      for (const Json& s : j.at("independent_sets")) {
        sets.push_back(MaskOf(s.get<std::vector<int>>(), n, status));
        if (!status.ok()) return status;
      }
      return Matroid::Explicit(n, sets);
    }
    return absl::InvalidArgumentError(absl::StrCat("unknown matroid type '", type, "'"));
  });
}

absl::StatusOr<Constraint> ParseConstraint(const Json& j, int n) {
  return Guard([&]() -> absl::StatusOr<Constraint> {
    if (j.at("type").get<std::string>() == "cardinality") {
      const int p = j.at("p").get<int>();
      if (p < 0 || p > n) {
        return absl::InvalidArgumentError(
            absl::StrCat("cardinality p = ", p, " outside [0, ", n, "]"));
      }
      return CardinalityConstraint{p};
    }
    absl::StatusOr<Matroid> m = ParseMatroid(j, n);
    if (!m.ok()) return m.status();
    return *std::move(m);
  });
}

absl::StatusOr<Instance> ParseInstance(const Json& j) {
  return Guard([&]() -> absl::StatusOr<Instance> {
    if (!j.is_object()) return absl::InvalidArgumentError("instance must be a JSON object");
    absl::StatusOr<GroundSet> ground = ParseGroundSet(j.at("ground_set"));
    if (!ground.ok()) return ground.status();
    absl::StatusOr<SetFunction> f = ParseFunction(j.at("function"), *ground);
    if (!f.ok()) return f.status();
    Instance inst{*std::move(f), std::nullopt, {}};
    if (j.contains("constraint")) {
      absl::StatusOr<Constraint> c = ParseConstraint(j.at("constraint"), ground->size());
      if (!c.ok()) return c.status();
      inst.constraint = *std::move(c);
    }
    if (j.contains("options")) {
      const Json& o = j.at("options");
      if (o.contains("mode")) inst.options.mode = o.at("mode").get<std::string>();
      if (o.contains("seed")) inst.options.seed = o.at("seed").get<std::uint64_t>();
      if (o.contains("samples")) inst.options.samples = o.at("samples").get<std::int64_t>();
      if (o.contains("epsilon")) inst.options.epsilon = o.at("epsilon").get<double>();
      if (o.contains("precision")) inst.options.precision = o.at("precision").get<std::string>();
    }
    return inst;
  });
}

absl::StatusOr<Instance> ParseInstanceText(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  return ParseInstance(j);
}

}  // namespace wsub::io
