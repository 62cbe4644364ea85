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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wtab/error.hpp"

namespace wtab {

enum class GType { B, C };

inline char gtype_char(GType g) { return g == GType::B ? 'B' : 'C'; }

inline GType parse_gtype(const std::string& s) {
  if (s == "B" || s == "b") return GType::B;
  if (s == "C" || s == "c") return GType::C;
  throw Error(ErrorCode::kParse, "group type must be B or C, got '" + s + "'");
}

/// Integer partition, stored weakly decreasing without zero parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }
  Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::vector<int> ascending() const { return {parts_.rbegin(), parts_.rend()}; }

  /// Ascending parts with a leading zero added when the part count is even.
  std::vector<int> ascending_odd_padded() const {
    std::vector<int> asc = ascending();
    if (asc.size() % 2 == 0) asc.insert(asc.begin(), 0);
    return asc;
  }

  /// prefix_sum(k) = p_1 + ... + p_k (missing parts count as zero).
  int prefix_sum(std::size_t k) const {
    int s = 0;
    for (std::size_t i = 0; i < k && i < parts_.size(); ++i) s += parts_[i];
    return s;
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

 private:
  void normalize() {
    for (int p : parts_) {
      if (p < 0) throw Error(ErrorCode::kInvalidArgument, "negative partition part");
    }
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  std::vector<int> parts_;
};

inline Partition transpose(const Partition& p) {
  std::vector<int> cols;
  const int width = p.empty() ? 0 : p[0];
  for (int j = 1; j <= width; ++j) {
    int c = 0;
    for (int part : p.parts()) c += part >= j;
    cols.push_back(c);
  }
  return Partition(std::move(cols));
}

/// The two halves of the content: values q_i + (i-1) that are even give s,
/// odd ones give t.
struct ContentSplit {
  std::vector<int> s;  // from even shifted parts 2s
  std::vector<int> t;  // from odd shifted parts 2t+1
};

inline ContentSplit content_split(const Partition& p) {
  ContentSplit out;
  const std::vector<int> asc = p.ascending_odd_padded();
  for (std::size_t i = 0; i < asc.size(); ++i) {
    const int v = asc[i] + static_cast<int>(i);
    if (v % 2 == 0) {
      out.s.push_back(v / 2);
    } else {
      out.t.push_back((v - 1) / 2);
    }
  }
  return out;
}

/// Sorted multiset s ∪ t.
inline std::vector<int> content(const Partition& p) {
  ContentSplit cs = content_split(p);
  std::vector<int> all = cs.s;
  all.insert(all.end(), cs.t.begin(), cs.t.end());
  std::sort(all.begin(), all.end());
  return all;
}

namespace detail {

// Cells of a Young diagram as (row from bottom, column from left), 1-based.
inline std::vector<std::vector<bool>> diagram_grid(const Partition& p) {
  std::vector<std::vector<bool>> grid;
  for (int len : p.parts()) grid.emplace_back(static_cast<std::size_t>(len), true);
  return grid;
}

inline bool tile_search(std::vector<std::vector<bool>>& open) {
  for (std::size_t i = 0; i < open.size(); ++i) {
    for (std::size_t j = 0; j < open[i].size(); ++j) {
      if (!open[i][j]) continue;
      open[i][j] = false;
      if (j + 1 < open[i].size() && open[i][j + 1]) {
        open[i][j + 1] = false;
        if (tile_search(open)) return true;
        open[i][j + 1] = true;
      }
      if (i + 1 < open.size() && j < open[i + 1].size() && open[i + 1][j]) {
        open[i + 1][j] = false;
        if (tile_search(open)) return true;
        open[i + 1][j] = true;
      }
      open[i][j] = true;
      return false;  // the first open cell cannot be covered
    }
  }
  return true;
}

}  // namespace detail

/// Reference test: exhaustive domino tiling of the diagram, with the corner
/// cell removed when the box count is odd.
inline bool is_domino_shape_search(const Partition& p) {
  auto open = detail::diagram_grid(p);
  if (p.total() % 2 == 1) open[0][0] = false;
  return detail::tile_search(open);
}

/// Colour count: #cells with i+j even minus #cells with i+j odd.
inline int colour_balance(const Partition& p) {
  int diff = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) diff += ((static_cast<int>(i) + j) % 2 == 0) ? 1 : -1;
  }
  return diff;
}

/// Closed form: balanced colouring, or one surplus corner-coloured cell when
/// the box count is odd.
inline bool is_domino_shape_balance(const Partition& p) {
  const int diff = colour_balance(p);
  return p.total() % 2 == 0 ? diff == 0 : diff == 1;
}

inline bool is_domino_shape(const Partition& p) { return is_domino_shape_balance(p); }

/// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

enum class Dominance { kLess, kEqual, kGreater, kIncomparable };

inline const char* dominance_name(Dominance d) {
  switch (d) {
    case Dominance::kLess: return "less";
    case Dominance::kEqual: return "equal";
    case Dominance::kGreater: return "greater";
    case Dominance::kIncomparable: return "incomparable";
  }
  return "?";
}

/// Dominance order; partitions of different totals are incomparable.
inline Dominance dominance_compare(const Partition& p, const Partition& q) {
  if (p.total() != q.total()) return Dominance::kIncomparable;
  bool le = true;
  bool ge = true;
  const std::size_t len = std::max(p.size(), q.size());
  for (std::size_t k = 1; k <= len; ++k) {
    const int a = p.prefix_sum(k);
    const int b = q.prefix_sum(k);
    le = le && a <= b;
    ge = ge && a >= b;
  }
  if (le && ge) return Dominance::kEqual;
  if (le) return Dominance::kLess;
  if (ge) return Dominance::kGreater;
  return Dominance::kIncomparable;
}

/// A partition of the shape handled here: one part of odd multiplicity, the
/// rest in pairs.  `pairs` is p_1 <= ... <= p_r, with p_{d-1} < p_0 <= p_d.
struct OrbitShape {
  GType gtype = GType::C;
  Partition bp;
  int p0 = 0;
  std::vector<int> pairs;  // p_1..p_r
  int d = 1;               // first index with p_d >= p0
  int r() const { return static_cast<int>(pairs.size()); }
  int n() const { return bp.total() / 2; }

  /// p_i for i in 0..r.
  int p(int i) const { return i == 0 ? p0 : pairs[static_cast<std::size_t>(i - 1)]; }

  /// Row lengths top to bottom: p_1..p_r, p_0, p_r..p_1.
  std::vector<int> row_lengths() const {
    std::vector<int> rows(pairs.begin(), pairs.end());
    rows.push_back(p0);
    rows.insert(rows.end(), pairs.rbegin(), pairs.rend());
    return rows;
  }

  bool operator==(const OrbitShape&) const = default;
};

inline OrbitShape validate_orbit_partition(const Partition& bp, GType g) {
  if (bp.empty()) throw Error(ErrorCode::kInvalidArgument, "empty partition");
  std::map<int, int> mult;
  for (int part : bp.parts()) ++mult[part];
  for (auto [part, m] : mult) {
    const bool bad = g == GType::C ? (part % 2 == 1 && m % 2 == 1) : (part % 2 == 0 && m % 2 == 1);
    if (bad) {
      throw Error(ErrorCode::kNotSymplecticOrOrthogonal,
                  bp.str() + " is not a " + (g == GType::C ? "symplectic" : "orthogonal") +
                      " Jordan type");
    }
  }
  int p0 = -1;
  int odd_count = 0;
  for (auto [part, m] : mult) {
    if (m % 2 == 1) {
      p0 = part;
      ++odd_count;
    }
  }
  if (odd_count != 1) {
    throw Error(ErrorCode::kNotOddMultiplicityShape,
                bp.str() + " does not have exactly one part of odd multiplicity");
  }
  OrbitShape out;
  out.gtype = g;
  out.bp = bp;
  out.p0 = p0;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m / 2; ++k) out.pairs.push_back(part);
  }
  out.d = 1;
  while (out.d <= out.r() && out.pairs[static_cast<std::size_t>(out.d - 1)] < p0) ++out.d;
  for (int i = 1; i <= out.r(); ++i) {
    const int pi = out.p(i);
    const bool ok = g == GType::C ? (i >= out.d || pi % 2 == 0) : (i < out.d || pi % 2 == 1);
    if (!ok) {
      throw Error(ErrorCode::kNotStandardLeviSpecial,
                  bp.str() + ": part " + std::to_string(pi) + " has the wrong parity");
    }
  }
  const bool p0_ok = g == GType::C ? p0 % 2 == 0 : p0 % 2 == 1;
  if (!p0_ok) {
    throw Error(ErrorCode::kNotStandardLeviSpecial, bp.str() + ": odd-multiplicity part has the wrong parity");
  }
  return out;
}

/// True when validate_orbit_partition accepts the partition.
inline bool is_orbit_partition(const Partition& bp, GType g) {
  try {
    validate_orbit_partition(bp, g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace wtab
