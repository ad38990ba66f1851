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

#ifndef WSUB_ZOO_DATA_H_
#define WSUB_ZOO_DATA_H_

#include <vector>

#include "absl/status/statusor.h"

namespace wsub::zoo {

// A metric on points 0..n-1: symmetric, non-negative, zero diagonal and
// satisfying the triangle inequality (checked exactly for integral
// matrices, to 1e-12 relative otherwise).
class DistanceMatrix {
 public:
  static absl::StatusOr<DistanceMatrix> Create(const std::vector<std::vector<double>>& rows);
  // d(u, v) = 1 for all u != v.
  static DistanceMatrix Unit(int n);

  int n() const { return n_; }
  double operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  const double* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }
  bool integral() const { return integral_; }
  double total() const { return total_; }  // sum over unordered pairs

 private:
  int n_ = 0;
  std::vector<double> d_;
  bool integral_ = true;
  double total_ = 0.0;
};

// An m x n matrix whose rows are items (the ground set) and columns are
// individuals. Every row must have a non-negative sum.
class SegmentationMatrix {
 public:
  static absl::StatusOr<SegmentationMatrix> Create(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const { return m_[static_cast<std::size_t>(i) * cols_ + j]; }
  const double* data() const { return m_.data(); }
  bool integral() const { return integral_; }
  double max_abs_column_sum() const { return max_abs_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> m_;
  bool integral_ = true;
  double max_abs_ = 0.0;  // bound on |sigma(S)|
};

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// Undirected weighted graph without self-loops.
class Graph {
 public:
  static absl::StatusOr<Graph> Create(int vertices, std::vector<Edge> edges);

  int vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool integral() const { return integral_; }

 private:
  int vertices_ = 0;
  std::vector<Edge> edges_;
  bool integral_ = true;
};

// Vertices R = {0..n-1}, s = n, t = n+1, unit edges (s, r) and (r, t) for
// every r in R. Its cut function violates weak submodularity at
// S = R u {s}, T = R u {t}.
Graph StarCounterexample(int n);

bool IsIntegral(double v);

}  // namespace wsub::zoo

#endif  // WSUB_ZOO_DATA_H_
