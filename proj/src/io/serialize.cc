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

#include "wsub/io/serialize.h"

#include <cmath>

namespace wsub::io {
namespace {

// JSON has no infinities; non-finite values become null.
Json Number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json ToJson(const Subset& s) { return s.Elements(); }

Json ToJson(const CheckMode& mode) {
  if (const auto* sampled = std::get_if<Sampled>(&mode)) {
    return {{"kind", "sampled"}, {"samples", sampled->samples}, {"seed", sampled->seed}};
  }
  return {{"kind", "exhaustive"}};
}

Json ToJson(const ViolationWitness& w) {
  Json j = {{"kind", PropertyName(w.kind)}, {"S", ToJson(w.s)}};
  if (w.t) j["T"] = ToJson(*w.t);
  j["lhs"] = Number(w.lhs);
  j["rhs"] = Number(w.rhs);
  if (w.cardinalities) j["abc"] = *w.cardinalities;
  return j;
}

Json ToJson(const CheckReport& r) {
  Json j = {{"property", PropertyName(r.property)},
            {"mode", ToJson(r.mode)},
            {"pairs_checked", r.pairs_checked},
            {"passed", r.passed}};
  j["witness"] = r.witness ? ToJson(*r.witness) : Json(nullptr);
  return j;
}

Json ToJson(const SolveResult& r) {
  Json trace = Json::array();
  for (const TraceStep& t : r.trace) {
    trace.push_back({{"step", t.step}, {"chosen", t.chosen}, {"value", Number(t.value)}});
  }
  Json params = Json::object();
  for (const auto& [k, v] : r.certificate.params) params[k] = v;
  return {{"selected", ToJson(r.selected)},
          {"value", Number(r.value)},
          {"iterations", r.iterations},
          {"hit_iteration_limit", r.hit_iteration_limit},
          {"trace", trace},
          {"certificate",
           {{"algorithm", r.certificate.algorithm}, {"params", params}, {"note", r.certificate.note}}}};
}

Json ToJson(const OptResult& r) {
  return {{"optimum", ToJson(r.optimum)}, {"value", Number(r.value)}, {"enumerated", r.enumerated}};
}

Json ToJson(const ExchangeMap& g) {
  Json pairs = Json::array();
  for (const auto& [x, y] : g.pairs) pairs.push_back({x, y});
  return {{"X", ToJson(g.x)}, {"Y", ToJson(g.y)}, {"pairs", pairs}};
}

Json ToJson(const bounds::RatioTable& t) {
  Json rows = Json::array();
  for (const bounds::RatioRow& r : t.rows) {
    rows.push_back(
        {{"param", r.param}, {"bound", Number(r.bound)}, {"mode", bounds::ArithmeticName(r.mode)}});
  }
  return {{"kind", t.kind == bounds::BoundKind::kGreedy ? "greedy" : "local"},
          {"precision", t.precision},
          {"formula_version", t.formula_version},
          {"rows", rows}};
}

Json WithLabels(Json witness, const GroundSet& ground) {
  for (const char* key : {"S", "T"}) {
    if (!witness.contains(key)) continue;
    Json labels = Json::array();
    for (int e : witness[key]) labels.push_back(ground.label(e));
    witness[std::string(key) + "_labels"] = labels;
  }
  return witness;
}

}  // namespace wsub::io
