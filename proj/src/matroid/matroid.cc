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

#include "wsub/matroid/matroid.h"

#include <algorithm>
#include <bit>

#include "absl/strings/str_cat.h"

namespace wsub {
namespace {

absl::Status CheckSubset(const Matroid& m, const Subset& s) {
  if (s.universe_size() != m.n()) {
    return absl::InvalidArgumentError(absl::StrCat("subset over a universe of size ",
                                                   s.universe_size(), " passed to a matroid on ",
                                                   m.n(), " elements"));
  }
  return absl::OkStatus();
}

// Kuhn's augmenting path search from left vertex `l`.
bool Augment(int l, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& seen) {
  for (int r : adj[l]) {
    if (seen[r]) continue;
    seen[r] = 1;
    if (match_right[r] < 0 || Augment(match_right[r], adj, match_right, seen)) {
      match_right[r] = l;
      return true;
    }
  }
  return false;
}

}  // namespace

absl::StatusOr<Matroid> Matroid::Uniform(int n, int rank) {
  if (n < 0 || n > kMaxGroundSize) {
    return absl::InvalidArgumentError(absl::StrCat("matroid ground set size ", n, " is invalid"));
  }
  if (rank < 0 || rank > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("uniform matroid rank ", rank, " outside [0, ", n, "]"));
  }
  Matroid m;
  m.kind_ = MatroidKind::kUniform;
  m.n_ = n;
  m.rank_ = rank;
  return m;
}

absl::StatusOr<Matroid> Matroid::Partition(int n, std::vector<std::vector<int>> blocks,
                                           std::vector<int> caps) {
  if (n < 0 || n > kMaxGroundSize) {
    return absl::InvalidArgumentError(absl::StrCat("matroid ground set size ", n, " is invalid"));
  }
  if (blocks.size() != caps.size()) {
    return absl::InvalidArgumentError(absl::StrCat("partition matroid has ", blocks.size(),
                                                   " blocks but ", caps.size(), " caps"));
  }
  Matroid m;
  m.kind_ = MatroidKind::kPartition;
  m.n_ = n;
  Mask seen = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (caps[b] < 0) {
      return absl::InvalidArgumentError(absl::StrCat("block ", b, " has negative cap"));
    }
    Mask bm = 0;
    for (int e : blocks[b]) {
      if (e < 0 || e >= n) {
        return absl::InvalidArgumentError(absl::StrCat("block ", b, " names element ", e,
                                                       " outside the ground set"));
      }
      const Mask bit = Mask{1} << e;
      if (seen & bit) {
        return absl::InvalidArgumentError(
            absl::StrCat("element ", e, " appears in more than one block"));
      }
      seen |= bit;
      bm |= bit;
    }
    std::sort(blocks[b].begin(), blocks[b].end());
    m.block_masks_.push_back(bm);
    m.rank_ += std::min<int>(caps[b], std::popcount(bm));
  }
  if (seen != FullMask(n)) {
    return absl::InvalidArgumentError("partition blocks do not cover the ground set");
  }
  m.blocks_ = std::move(blocks);
  m.caps_ = std::move(caps);
  return m;
}

absl::StatusOr<Matroid> Matroid::Explicit(int n, std::span<const Mask> independent_sets) {
  if (n < 0 || n > kMaxExplicitSize) {
    return absl::InvalidArgumentError(absl::StrCat("explicit matroids need n <= ",
                                                   kMaxExplicitSize, ", got n = ", n));
  }
  Matroid m;
  m.kind_ = MatroidKind::kExplicit;
  m.n_ = n;
  m.table_.assign(std::size_t{1} << n, 0);
  for (Mask s : independent_sets) {
    if ((s & ~FullMask(n)) != 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("independent set ", s, " has elements outside the ground set"));
    }
    m.table_[s] = 1;
    m.rank_ = std::max(m.rank_, std::popcount(s));
  }
  return m;
}

bool Matroid::IsIndependent(Mask s) const {
  switch (kind_) {
    case MatroidKind::kUniform:
      return std::popcount(s) <= rank_;
    case MatroidKind::kPartition:
      for (std::size_t b = 0; b < block_masks_.size(); ++b) {
        if (std::popcount(s & block_masks_[b]) > caps_[b]) return false;
      }
      return true;
    case MatroidKind::kExplicit:
      return table_[s] != 0;
  }
  return false;
}

bool Matroid::IsBasis(Mask s) const { return std::popcount(s) == rank_ && IsIndependent(s); }

absl::StatusOr<bool> IsIndependent(const Matroid& m, const Subset& s) {
  if (auto st = CheckSubset(m, s); !st.ok()) return st;
  return m.IsIndependent(s.mask());
}

absl::StatusOr<Matroid> ToExplicit(const Matroid& m) {
  if (m.n() > Matroid::kMaxExplicitSize) {
    return absl::FailedPreconditionError(absl::StrCat(
        "explicit encoding needs n <= ", Matroid::kMaxExplicitSize, ", got n = ", m.n()));
  }
  std::vector<Mask> sets;
  for (Mask s = 0; s < (Mask{1} << m.n()); ++s) {
    if (m.IsIndependent(s)) sets.push_back(s);
  }
  return Matroid::Explicit(m.n(), sets);
}

absl::StatusOr<Subset> ExtendToBasis(const Matroid& m, const Subset& s) {
  if (auto st = CheckSubset(m, s); !st.ok()) return st;
  if (!m.IsIndependent(s.mask())) {
    return absl::InvalidArgumentError(absl::StrCat(s.ToString(), " is not independent"));
  }
  Mask current = s.mask();
  for (int e = 0; e < m.n(); ++e) {
    const Mask bit = Mask{1} << e;
    if (!(current & bit) && m.IsIndependent(current | bit)) current |= bit;
  }
  if (std::popcount(current) != m.rank()) {
    return absl::InternalError(absl::StrCat("maximal independent set ",
                                            Subset::FromMask(m.n(), current).ToString(),
                                            " has size ", std::popcount(current), " != rank ",
                                            m.rank(), "; the family is not a matroid"));
  }
  return Subset::FromMask(m.n(), current);
}

absl::StatusOr<CheckReport> ValidateExchangeAxiom(const Matroid& m, int max_n) {
  const int n = m.n();
  if (n > max_n) {
    return absl::FailedPreconditionError(
        absl::StrCat("exhaustive matroid validation needs n <= ", max_n, ", got n = ", n));
  }
  CheckReport report{Property::kMatroidExchange, Exhaustive{}, 0, true, std::nullopt};
  auto fail = [&](Property kind, Mask a, std::optional<Mask> b) {
    report.passed = false;
    ViolationWitness w{kind, Subset::FromMask(n, a), std::nullopt, 0.0, 0.0, std::nullopt};
    if (b) {
      w.t = Subset::FromMask(n, *b);
      w.lhs = std::popcount(a);
      w.rhs = std::popcount(*b);
    }
    report.witness = w;
    return report;
  };

  const Mask count = Mask{1} << n;
  ++report.pairs_checked;
  if (!m.IsIndependent(0)) return fail(Property::kDownwardClosed, 0, std::nullopt);

  std::vector<std::vector<Mask>> by_size(n + 1);
  for (Mask s = 0; s < count; ++s) {
    if (!m.IsIndependent(s)) continue;
    by_size[std::popcount(s)].push_back(s);
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      ++report.pairs_checked;
      const Mask smaller = s & ~(rest & (~rest + 1));
      if (!m.IsIndependent(smaller)) return fail(Property::kDownwardClosed, s, smaller);
    }
  }
  for (int k = 0; k < n; ++k) {
    for (Mask a : by_size[k]) {
      for (Mask b : by_size[k + 1]) {
        ++report.pairs_checked;
        bool ok = false;
        for (Mask rest = b & ~a; rest != 0 && !ok; rest &= rest - 1) {
          ok = m.IsIndependent(a | (rest & (~rest + 1)));
        }
        if (!ok) return fail(Property::kMatroidExchange, a, b);
      }
    }
  }
  return report;
}

absl::Status RequireMatroid(const Matroid& m) {
  if (m.kind() != MatroidKind::kExplicit) return absl::OkStatus();
  absl::StatusOr<CheckReport> report = ValidateExchangeAxiom(m);
  if (!report.ok()) return report.status();
  if (!report->passed) {
    const ViolationWitness& w = *report->witness;
    return absl::FailedPreconditionError(absl::StrCat(
        "explicit family is not a matroid: ", PropertyName(w.kind), " fails at ", w.s.ToString(),
        w.t ? absl::StrCat(" / ", w.t->ToString()) : std::string()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Subset>> EnumerateBases(const Matroid& m, int max_n) {
  if (m.n() > max_n) {
    return absl::FailedPreconditionError(
        absl::StrCat("basis enumeration needs n <= ", max_n, ", got n = ", m.n()));
  }
  std::vector<Subset> bases;
  ForEachKSubset(m.n(), m.rank(), [&](Mask s) {
    if (m.IsIndependent(s)) bases.push_back(Subset::FromMask(m.n(), s));
    return true;
  });
  return bases;
}

absl::StatusOr<ExchangeMap> BrualdiBijection(const Matroid& m, const Subset& x,
                                             const Subset& y) {
  if (auto st = CheckSubset(m, x); !st.ok()) return st;
  if (auto st = CheckSubset(m, y); !st.ok()) return st;
  if (!m.IsBasis(x.mask())) return absl::InvalidArgumentError(x.ToString() + " is not a basis");
  if (!m.IsBasis(y.mask())) return absl::InvalidArgumentError(y.ToString() + " is not a basis");

  const std::vector<int> left = (x - y).Elements();
  const std::vector<int> right = (y - x).Elements();
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t l = 0; l < left.size(); ++l) {
    const Mask without = x.mask() & ~(Mask{1} << left[l]);
    for (std::size_t r = 0; r < right.size(); ++r) {
      if (m.IsIndependent(without | (Mask{1} << right[r]))) adj[l].push_back(static_cast<int>(r));
    }
  }
  std::vector<int> match_right(right.size(), -1);
  for (std::size_t l = 0; l < left.size(); ++l) {
    std::vector<char> seen(right.size(), 0);
    if (!Augment(static_cast<int>(l), adj, match_right, seen)) {
      return absl::InternalError(absl::StrCat("no perfect exchange matching between ",
                                              x.ToString(), " and ", y.ToString(),
                                              "; the independence oracle is not a matroid"));
    }
  }
  ExchangeMap g{x, y, {}};
  for (std::size_t r = 0; r < right.size(); ++r) {
    g.pairs.emplace_back(left[match_right[r]], right[r]);
  }
  std::sort(g.pairs.begin(), g.pairs.end());
  if (!IsValidExchangeMap(m, g)) {
    return absl::InternalError("exchange matching failed re-verification");
  }
  return g;
}

bool IsValidExchangeMap(const Matroid& m, const ExchangeMap& g) {
  const Mask from = (g.x - g.y).mask();
  const Mask to = (g.y - g.x).mask();
  Mask used_from = 0;
  Mask used_to = 0;
  for (const auto& [a, b] : g.pairs) {
    const Mask abit = Mask{1} << a;
    const Mask bbit = Mask{1} << b;
    if (!(from & abit) || !(to & bbit) || (used_from & abit) || (used_to & bbit)) return false;
    used_from |= abit;
    used_to |= bbit;
    if (!m.IsIndependent((g.x.mask() & ~abit) | bbit)) return false;
  }
  return used_from == from && used_to == to;
}

}  // namespace wsub
