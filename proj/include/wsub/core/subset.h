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

#ifndef WSUB_CORE_SUBSET_H_
#define WSUB_CORE_SUBSET_H_

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wsub {

// Ground sets are limited to 64 elements so that a subset fits in one word.
inline constexpr int kMaxGroundSize = 64;

using Mask = std::uint64_t;

inline constexpr Mask FullMask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

// A subset of a ground set {0, ..., n-1}, stored as a bitset. The universe
// size travels with the subset so that mixing subsets of different ground
// sets can be detected.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe_size) : n_(universe_size) {
    assert(universe_size >= 0 && universe_size <= kMaxGroundSize);
  }

  static Subset FromMask(int universe_size, Mask bits) {
    Subset s(universe_size);
    assert((bits & ~FullMask(universe_size)) == 0);
    s.bits_ = bits;
    return s;
  }
  static Subset FromIndices(int universe_size, std::span<const int> indices) {
    Subset s(universe_size);
    for (int e : indices) s.Insert(e);
    return s;
  }
  static Subset FromIndices(int universe_size, std::initializer_list<int> indices) {
    return FromIndices(universe_size, std::span<const int>(indices.begin(), indices.size()));
  }
  static Subset Full(int universe_size) {
    return FromMask(universe_size, FullMask(universe_size));
  }

  int universe_size() const { return n_; }
  Mask mask() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool Contains(int e) const {
    assert(e >= 0 && e < n_);
    return (bits_ >> e) & 1;
  }
  void Insert(int e) {
    assert(e >= 0 && e < n_);
    bits_ |= Mask{1} << e;
  }
  void Erase(int e) {
    assert(e >= 0 && e < n_);
    bits_ &= ~(Mask{1} << e);
  }
  Subset With(int e) const {
    Subset s = *this;
    s.Insert(e);
    return s;
  }
  Subset Without(int e) const {
    Subset s = *this;
    s.Erase(e);
    return s;
  }

  bool IsSubsetOf(const Subset& other) const {
    assert(n_ == other.n_);
    return (bits_ & ~other.bits_) == 0;
  }
  Subset Complement() const { return FromMask(n_, ~bits_ & FullMask(n_)); }

  // Elements in increasing index order.
  std::vector<int> Elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    for (int e : Elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    assert(a.n_ == b.n_);
    return FromMask(a.n_, a.bits_ | b.bits_);
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    assert(a.n_ == b.n_);
    return FromMask(a.n_, a.bits_ & b.bits_);
  }
  // Set difference.
  friend Subset operator-(const Subset& a, const Subset& b) {
    assert(a.n_ == b.n_);
    return FromMask(a.n_, a.bits_ & ~b.bits_);
  }
  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int n_ = 0;
  Mask bits_ = 0;
};

// Calls fn(mask) for every k-subset of an n-set in increasing numeric order.
// Returns false early if fn returns false.
template <typename Fn>
bool ForEachKSubset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  if (k == 0) return fn(Mask{0});
  Mask m = FullMask(k);
  const Mask limit = FullMask(n);
  while (true) {
    if (!fn(m)) return false;
    // Gosper's hack.
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    if (r == 0 || (r & ~limit) != 0) break;
    m = (((r ^ m) >> 2) / c) | r;
    if ((m & ~limit) != 0) break;
  }
  return true;
}

}  // namespace wsub

#endif  // WSUB_CORE_SUBSET_H_
