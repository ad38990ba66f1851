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

#include "wsub/zoo/data.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "wsub/core/set_function.h"
#include "wsub/core/subset.h"

namespace wsub::zoo {

bool IsIntegral(double v) { return std::isfinite(v) && std::trunc(v) == v; }

absl::StatusOr<DistanceMatrix> DistanceMatrix::Create(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxGroundSize) {
    return absl::InvalidArgumentError(absl::StrCat("distance matrix has ", n, " points; limit is ",
                                                   kMaxGroundSize));
  }
  DistanceMatrix m;
  m.n_ = n;
  m.d_.resize(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(rows[u].size()) != n) {
      return absl::InvalidArgumentError(absl::StrCat("distance matrix row ", u, " has ",
                                                     rows[u].size(), " entries, expected ", n));
    }
    for (int v = 0; v < n; ++v) {
      const double d = rows[u][v];
      if (!std::isfinite(d) || d < 0) {
        return absl::InvalidArgumentError(
            absl::StrCat("distance d(", u, ",", v, ") = ", d, " is not a finite non-negative"));
      }
      m.d_[static_cast<std::size_t>(u) * n + v] = d;
      m.integral_ = m.integral_ && IsIntegral(d);
    }
  }
  for (int u = 0; u < n; ++u) {
    if (m(u, u) != 0) {
      return absl::InvalidArgumentError(absl::StrCat("d(", u, ",", u, ") must be 0"));
    }
    for (int v = u + 1; v < n; ++v) {
      if (m(u, v) != m(v, u)) {
        return absl::InvalidArgumentError(absl::StrCat("distance matrix is not symmetric at (", u,
                                                       ",", v, ")"));
      }
      m.total_ += m(u, v);
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        const double direct = m(u, w);
        const double via = m(u, v) + m(v, w);
        const double slack = m.integral_ ? 0.0 : 1e-12 * std::max(1.0, via);
        if (direct > via + slack) {
          return absl::InvalidArgumentError(absl::StrCat("triangle inequality fails: d(", u, ",",
                                                         w, ") > d(", u, ",", v, ") + d(", v, ",",
                                                         w, ")"));
        }
      }
    }
  }
  if (m.integral_ && m.total_ > kExactValueLimit) m.integral_ = false;
  return m;
}

DistanceMatrix DistanceMatrix::Unit(int n) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i) rows[i][i] = 0.0;
  return *Create(rows);
}

absl::StatusOr<SegmentationMatrix> SegmentationMatrix::Create(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return absl::InvalidArgumentError("segmentation matrix has no rows");
  if (rows.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    return absl::InvalidArgumentError(absl::StrCat("segmentation matrix has ", rows.size(),
                                                   " rows; limit is ", kMaxGroundSize));
  }
  SegmentationMatrix m;
  m.rows_ = static_cast<int>(rows.size());
  m.cols_ = static_cast<int>(rows[0].size());
  if (m.cols_ == 0) return absl::InvalidArgumentError("segmentation matrix has no columns");
  m.m_.reserve(static_cast<std::size_t>(m.rows_) * m.cols_);
  std::vector<double> col_abs_max(m.cols_, 0.0);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_) {
      return absl::InvalidArgumentError(absl::StrCat("segmentation row ", i, " has ",
                                                     rows[i].size(), " entries, expected ",
                                                     m.cols_));
    }
    double sum = 0.0;
    for (int j = 0; j < m.cols_; ++j) {
      const double x = rows[i][j];
      if (!std::isfinite(x)) {
        return absl::InvalidArgumentError(absl::StrCat("segmentation entry (", i, ",", j,
                                                       ") is not finite"));
      }
      m.m_.push_back(x);
      sum += x;
      m.integral_ = m.integral_ && IsIntegral(x);
      col_abs_max[j] = std::max(col_abs_max[j], std::fabs(x));
    }
    if (sum < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("segmentation row ", i, " has negative sum ", sum));
    }
  }
  for (double c : col_abs_max) m.max_abs_ += c;
  if (m.integral_ && m.max_abs_ > kExactValueLimit) m.integral_ = false;
  return m;
}

absl::StatusOr<Graph> Graph::Create(int vertices, std::vector<Edge> edges) {
  if (vertices < 0 || vertices > kMaxGroundSize) {
    return absl::InvalidArgumentError(absl::StrCat("graph vertex count ", vertices,
                                                   " outside [0, ", kMaxGroundSize, "]"));
  }
  Graph g;
  g.vertices_ = vertices;
  double total = 0.0;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertices || e.v < 0 || e.v >= vertices) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", e.u, ",", e.v, ") has an endpoint out of range"));
    }
    if (e.u == e.v) return absl::InvalidArgumentError(absl::StrCat("self-loop at ", e.u));
    if (!std::isfinite(e.weight) || e.weight < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", e.u, ",", e.v, ") has invalid weight ", e.weight));
    }
    g.integral_ = g.integral_ && IsIntegral(e.weight);
    total += e.weight;
  }
  if (total > kExactValueLimit) g.integral_ = false;
  g.edges_ = std::move(edges);
  return g;
}

Graph StarCounterexample(int n) {
  std::vector<Edge> edges;
  const int s = n;
  const int t = n + 1;
  for (int r = 0; r < n; ++r) {
    edges.push_back({s, r, 1.0});
    edges.push_back({r, t, 1.0});
  }
  return *Graph::Create(n + 2, std::move(edges));
}

}  // namespace wsub::zoo
