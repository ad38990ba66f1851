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

#ifndef WSUB_MATROID_MATROID_H_
#define WSUB_MATROID_MATROID_H_

#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "wsub/core/checks.h"
#include "wsub/core/subset.h"

namespace wsub {

enum class MatroidKind { kUniform, kPartition, kExplicit };

// An independence oracle over {0..n-1}. Uniform and partition matroids are
// matroids by construction; explicit families are stored as a 2^n table and
// must pass ValidateExchangeAxiom before the solvers accept them.
class Matroid {
 public:
  static constexpr int kMaxExplicitSize = 20;

  // Independent iff |S| <= rank.
  static absl::StatusOr<Matroid> Uniform(int n, int rank);
  // `blocks` must partition {0..n-1}; independent iff |S n block_b| <= caps[b].
  static absl::StatusOr<Matroid> Partition(int n, std::vector<std::vector<int>> blocks,
                                           std::vector<int> caps);
  // Exactly the listed sets are independent. No axioms are checked here.
  static absl::StatusOr<Matroid> Explicit(int n, std::span<const Mask> independent_sets);

  MatroidKind kind() const { return kind_; }
  int n() const { return n_; }
  // Size of the largest independent set.
  int rank() const { return rank_; }

  bool IsIndependent(Mask s) const;
  bool IsIndependent(const Subset& s) const { return IsIndependent(s.mask()); }
  bool IsBasis(Mask s) const;

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }

 private:
  MatroidKind kind_ = MatroidKind::kUniform;
  int n_ = 0;
  int rank_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<Mask> block_masks_;
  std::vector<int> caps_;
  std::vector<char> table_;
};

// Checked independence query.
absl::StatusOr<bool> IsIndependent(const Matroid& m, const Subset& s);

// The same independence family stored explicitly (n <= 20).
absl::StatusOr<Matroid> ToExplicit(const Matroid& m);

// Adds elements in increasing index order while independence is kept.
absl::StatusOr<Subset> ExtendToBasis(const Matroid& m, const Subset& s);

// Scans the family for the matroid axioms: the empty set is independent,
// independence is closed under removal, and for independent A, B with
// |A| < |B| some b in B \ A keeps A + b independent. Given downward closure
// it suffices to test pairs with |B| = |A| + 1. The failing axiom is the
// witness kind (kDownwardClosed or kMatroidExchange); for an exchange
// failure S = A and T = B.
absl::StatusOr<CheckReport> ValidateExchangeAxiom(const Matroid& m, int max_n = 14);

// Ok for uniform and partition matroids; runs ValidateExchangeAxiom for
// explicit families.
absl::Status RequireMatroid(const Matroid& m);

// All bases in increasing mask order.
absl::StatusOr<std::vector<Subset>> EnumerateBases(const Matroid& m, int max_n = 20);

// A bijection X \ Y -> Y \ X with X - x + g(x) independent for every x.
struct ExchangeMap {
  Subset x;
  Subset y;
  // (x, g(x)) pairs sorted by x.
  std::vector<std::pair<int, int>> pairs;
};

// Computes an exchange bijection between bases X and Y by augmenting-path
// bipartite matching on {(x, y) : X - x + y independent}, scanning both sides
// in index order.
absl::StatusOr<ExchangeMap> BrualdiBijection(const Matroid& m, const Subset& x, const Subset& y);

// Bijectivity plus the per-element independence predicate.
bool IsValidExchangeMap(const Matroid& m, const ExchangeMap& g);

}  // namespace wsub

#endif  // WSUB_MATROID_MATROID_H_
