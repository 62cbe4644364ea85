// Copyright 2026 The wtab Authors
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

#pragma once

#include <cstdlib>
#include <map>
#include <vector>

#include "wtab/partition.hpp"

namespace wtab {

/// The symmetric pyramid of an orbit shape with its boxes labelled
/// 1..n, (0,) -n..-1 row by row from the top.  Rows carry the labels
/// 1..r, 0, -r..-1 and box centres sit on even x-coordinates.
class CoordinatePyramid {
 public:
  explicit CoordinatePyramid(const OrbitShape& shape) : shape_(shape) {
    const std::vector<int> lens = shape.row_lengths();
    const int rows = static_cast<int>(lens.size());
    const int r = shape.r();
    // Top half and the left part of the middle row get positive labels.
    int next = 1;
    labels_.resize(lens.size());
    for (int k = 0; k < rows; ++k) labels_[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(lens[static_cast<std::size_t>(k)]));
    for (int k = 0; k <= r; ++k) {
      auto& row = labels_[static_cast<std::size_t>(k)];
      const int len = static_cast<int>(row.size());
      const int limit = k < r ? len : len / 2;
      for (int j = 0; j < limit; ++j) row[static_cast<std::size_t>(j)] = next++;
    }
    if (shape.p0 % 2 == 1) labels_[static_cast<std::size_t>(r)][static_cast<std::size_t>(shape.p0 / 2)] = 0;
    // Everything else is the negated point reflection.
    for (int k = 0; k < rows; ++k) {
      const int mk = rows - 1 - k;
      const int len = lens[static_cast<std::size_t>(k)];
      for (int j = 0; j < len; ++j) {
        const bool upper = k < r || (k == r && j < len / 2);
        if (upper) labels_[static_cast<std::size_t>(mk)][static_cast<std::size_t>(len - 1 - j)] = -labels_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
    }
    for (int k = 0; k < rows; ++k) {
      const int len = lens[static_cast<std::size_t>(k)];
      const int rowlabel = k < r ? k + 1 : (k == r ? 0 : -(rows - k));
      for (int j = 0; j < len; ++j) {
        const int lab = labels_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        col_[lab] = -(len - 1) + 2 * j;
        row_[lab] = rowlabel;
      }
    }
  }

  const OrbitShape& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  bool has_zero() const { return shape_.gtype == GType::B; }
  int dim() const { return has_zero() ? 2 * n() + 1 : 2 * n(); }

  /// Labels of each row, top to bottom.
  const std::vector<std::vector<int>>& rows() const { return labels_; }

  /// Labels of the row carrying row label rho in {1..r, 0, -r..-1}.
  const std::vector<int>& row_with_label(int rho) const {
    const int rows = static_cast<int>(labels_.size());
    const int k = rho > 0 ? rho - 1 : (rho == 0 ? shape_.r() : rows + rho);
    return labels_[static_cast<std::size_t>(k)];
  }

  int col(int label) const { return col_.at(label); }
  int row(int label) const { return row_.at(label); }

  /// Position of a label in the basis order 1..n, (0,) -n..-1.
  int index(int label) const {
    if (label > 0) return label - 1;
    if (label == 0) return n();
    return dim() + label;
  }

  /// Inverse of index().
  int label_at(int idx) const {
    if (idx < n()) return idx + 1;
    if (has_zero() && idx == n()) return 0;
    return idx - dim();
  }

 private:
  OrbitShape shape_;
  std::vector<std::vector<int>> labels_;
  std::map<int, int> col_;
  std::map<int, int> row_;
};

}  // namespace wtab
