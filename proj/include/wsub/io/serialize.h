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

#ifndef WSUB_IO_SERIALIZE_H_
#define WSUB_IO_SERIALIZE_H_

#include "json.hpp"
#include "wsub/bounds/bounds.h"
#include "wsub/core/checks.h"
#include "wsub/core/ground_set.h"
#include "wsub/matroid/matroid.h"
#include "wsub/solve/solve.h"

namespace wsub::io {

using Json = nlohmann::json;

// Subsets are written as sorted index arrays.
Json ToJson(const Subset& s);
Json ToJson(const CheckMode& mode);
Json ToJson(const ViolationWitness& w);
Json ToJson(const CheckReport& r);
Json ToJson(const SolveResult& r);
Json ToJson(const OptResult& r);
Json ToJson(const ExchangeMap& g);
Json ToJson(const bounds::RatioTable& t);

// Adds "S_labels"/"T_labels" next to the index arrays of a witness.
Json WithLabels(Json witness, const GroundSet& ground);

}  // namespace wsub::io

#endif  // WSUB_IO_SERIALIZE_H_
