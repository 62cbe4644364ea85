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
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "wtab/error.hpp"
#include "wtab/half_int.hpp"
#include "wtab/partition.hpp"
#include "wtab/pyramid.hpp"
#include "wtab/word.hpp"

namespace wtab {

/// Entries either all in Z or all in 1/2 + Z.
enum class Parity { kInteger, kHalfInteger };

inline const char* parity_name(Parity p) { return p == Parity::kInteger ? "integer" : "half-integer"; }

/// Skew-symmetric filling, rows listed top to bottom.  Row k is the negated
/// reverse of row R-1-k; the table need not come from an orbit frame (the
/// four-row tables of the symplectic construction do not).
struct STable {
  GType gtype = GType::C;
  std::vector<Word> rows;

  std::size_t row_count() const { return rows.size(); }
  std::vector<int> row_lengths() const {
    std::vector<int> out;
    for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
    return out;
  }
  bool operator==(const STable&) const = default;
  auto operator<=>(const STable&) const = default;
};

inline STable make_stable(GType g, std::initializer_list<std::initializer_list<int>> rows) {
  STable t{g, {}};
  for (const auto& r : rows) {
    Word w;
    for (int v : r) w.emplace_back(v);
    t.rows.push_back(std::move(w));
  }
  return t;
}

inline std::string stable_str(const STable& t) {
  std::string out = "[";
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    if (k) out += ",";
    out += "[";
    for (std::size_t j = 0; j < t.rows[k].size(); ++j) {
      if (j) out += ",";
      out += t.rows[k][j].str();
    }
    out += "]";
  }
  return out + "]";
}

/// Row-major reading from the top row down.
inline Word word_of(const STable& t) {
  Word w;
  for (const auto& r : t.rows) w.insert(w.end(), r.begin(), r.end());
  return w;
}

inline bool rows_sorted(const STable& t) {
  for (const auto& r : t.rows) {
    if (!std::is_sorted(r.begin(), r.end())) return false;
  }
  return true;
}

/// Canonical member of the row-equivalence class: every row sorted.
inline STable sort_rows(STable t) {
  for (auto& r : t.rows) std::sort(r.begin(), r.end());
  return t;
}

/// Skew-symmetry, the centre-box rule and the parity rule.
inline std::optional<std::string> stable_violation(const STable& t) {
  const std::size_t rc = t.rows.size();
  for (std::size_t k = 0; k < rc; ++k) {
    const Word& a = t.rows[k];
    const Word& b = t.rows[rc - 1 - k];
    if (a.size() != b.size()) return "row lengths are not centrally symmetric";
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] != -b[b.size() - 1 - j]) return "filling is not skew-symmetric";
    }
  }
  std::optional<bool> integral;
  for (std::size_t k = 0; k < rc; ++k) {
    const Word& row = t.rows[k];
    for (std::size_t j = 0; j < row.size(); ++j) {
      const bool centre = rc % 2 == 1 && k == rc / 2 && row.size() % 2 == 1 && j == row.size() / 2;
      if (centre) continue;  // always 0 by skew-symmetry
      const bool is_int = row[j].is_integer();
      if (t.gtype == GType::C && !is_int) return "symplectic tables must have integer entries";
      if (integral && *integral != is_int) return "entries mix integers and half-integers";
      integral = is_int;
    }
  }
  return std::nullopt;
}

inline void require_valid(const STable& t) {
  if (auto v = stable_violation(t)) {
    throw Error(v->find("mix") != std::string::npos ? ErrorCode::kParityMixed : ErrorCode::kInvalidArgument,
                *v + ": " + stable_str(t));
  }
}

/// Parity class of a table's non-central entries (integer for all-zero tables).
inline Parity parity_of(const STable& t) {
  for (const auto& r : t.rows) {
    for (HalfInt x : r) {
      if (!x.is_integer()) return Parity::kHalfInteger;
    }
  }
  return Parity::kInteger;
}

/// A symmetric pyramid with its rows permuted: rows carry labels from
/// {1..r, 0, -r..-1} (listed top to bottom), the identity frame being
/// 1, ..., r, 0, -r, ..., -1.
struct SFrame {
  OrbitShape shape;
  std::vector<int> row_labels;

  static SFrame identity(const OrbitShape& s) {
    SFrame f{s, {}};
    for (int i = 1; i <= s.r(); ++i) f.row_labels.push_back(i);
    f.row_labels.push_back(0);
    for (int i = s.r(); i >= 1; --i) f.row_labels.push_back(-i);
    return f;
  }

  std::vector<int> row_lengths() const {
    std::vector<int> out;
    for (int rho : row_labels) out.push_back(shape.p(rho < 0 ? -rho : rho));
    return out;
  }

  /// Exchange the rows at top positions i and i+1 (1-based) and their mirrors.
  SFrame swapped(int i) const {
    SFrame f = *this;
    const auto rc = f.row_labels.size();
    const auto a = static_cast<std::size_t>(i - 1);
    std::swap(f.row_labels[a], f.row_labels[a + 1]);
    std::swap(f.row_labels[rc - 1 - a], f.row_labels[rc - 2 - a]);
    return f;
  }

  bool operator==(const SFrame&) const = default;
};

/// K-labels of every box of the frame, top to bottom.
inline std::vector<std::vector<int>> frame_labels(const SFrame& f) {
  const CoordinatePyramid k(f.shape);
  std::vector<std::vector<int>> out;
  for (int rho : f.row_labels) out.push_back(k.row_with_label(rho));
  return out;
}

using Weight = std::vector<HalfInt>;

/// a_i = entry of A in the box carrying label i.
inline Weight weight_of(const STable& a, const SFrame& f) {
  const auto labels = frame_labels(f);
  if (labels.size() != a.rows.size()) throw Error(ErrorCode::kInvalidArgument, "table does not fit the frame");
  Weight mu(static_cast<std::size_t>(f.shape.n()));
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k].size() != a.rows[k].size()) throw Error(ErrorCode::kInvalidArgument, "table does not fit the frame");
    for (std::size_t j = 0; j < labels[k].size(); ++j) {
      if (labels[k][j] > 0) mu[static_cast<std::size_t>(labels[k][j] - 1)] = a.rows[k][j];
    }
  }
  return mu;
}

inline Weight weight_of(const STable& a, const OrbitShape& s) { return weight_of(a, SFrame::identity(s)); }

inline void require_uniform_parity(const Weight& mu, GType g) {
  for (HalfInt x : mu) {
    if (g == GType::C && !x.is_integer()) {
      throw Error(ErrorCode::kParityMixed, "symplectic weights must be integral");
    }
    if (x.is_integer() != mu.front().is_integer()) {
      throw Error(ErrorCode::kParityMixed, "weight mixes integers and half-integers");
    }
  }
}

/// Filling of the frame by a weight, rows kept in box order (may be unsorted).
inline STable fill_frame(const Weight& mu, const SFrame& f) {
  if (static_cast<int>(mu.size()) != f.shape.n()) throw Error(ErrorCode::kInvalidArgument, "weight has the wrong length");
  if (!mu.empty()) require_uniform_parity(mu, f.shape.gtype);
  STable t{f.shape.gtype, {}};
  for (const auto& row : frame_labels(f)) {
    Word w;
    for (int lab : row) {
      w.push_back(lab > 0 ? mu[static_cast<std::size_t>(lab - 1)]
                          : (lab < 0 ? -mu[static_cast<std::size_t>(-lab - 1)] : HalfInt(0)));
    }
    t.rows.push_back(std::move(w));
  }
  return t;
}

/// The table with weight mu if its rows are weakly increasing; nullopt means
/// the filling is not row sorted (sort_rows(fill_frame(..)) is the canonical
/// representative in that case).
inline std::optional<STable> table_from_weight(const Weight& mu, const SFrame& f) {
  STable t = fill_frame(mu, f);
  if (!rows_sorted(t)) return std::nullopt;
  return t;
}

/// Search for a rearrangement of each left-justified row that makes every
/// column strictly decreasing downwards, gaps included.  Rows are given top
/// to bottom and may have any lengths.
class ColumnStrictSearch {
 public:
  explicit ColumnStrictSearch(const std::vector<Word>& rows) : rows_(rows) {
    std::size_t total = 0;
    for (auto& r : rows_) {
      std::sort(r.begin(), r.end());
      total += r.size();
      width_ = std::max(width_, r.size());
    }
    if (total > 64) throw Error(ErrorCode::kCapExceeded, "column-strict search is limited to 64 boxes");
    std::size_t shift = 0;
    for (const auto& r : rows_) {
      offset_.push_back(shift);
      shift += r.size();
    }
  }

  bool run() {
    used_ = 0;
    failed_.clear();
    return fill_column(0);
  }

 private:
  bool fill_column(std::size_t col) {
    if (col == width_) return true;
    if (failed_.count(used_)) return false;
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k].size() > col) members.push_back(k);
    }
    if (choose(col, members, 0, std::nullopt)) return true;
    failed_.insert(used_);
    return false;
  }

  bool choose(std::size_t col, const std::vector<std::size_t>& members, std::size_t m, std::optional<HalfInt> above) {
    if (m == members.size()) return fill_column(col + 1);
    const std::size_t k = members[m];
    const Word& row = rows_[k];
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::uint64_t bit = std::uint64_t{1} << (offset_[k] + j);
      if (used_ & bit) continue;
      if (j > 0 && row[j] == row[j - 1] && !(used_ & (bit >> 1))) continue;  // same value, earlier copy free
      if (above && !(row[j] < *above)) break;  // sorted: later entries only larger
      used_ |= bit;
      if (choose(col, members, m + 1, row[j])) return true;
      used_ &= ~bit;
    }
    return false;
  }

  std::vector<Word> rows_;
  std::size_t width_ = 0;
  std::vector<std::size_t> offset_;
  std::uint64_t used_ = 0;
  std::unordered_set<std::uint64_t> failed_;
};

inline bool row_equivalent_column_strict(const std::vector<Word>& rows) { return ColumnStrictSearch(rows).run(); }

/// Reference decision by explicit column assignment.
inline bool is_cc_search(const STable& a) { return row_equivalent_column_strict(a.rows); }

/// Justified row equivalent to column strict.  When the row lengths are the
/// identity frame of an orbit shape the verdict is cross-checked against the
/// shape of the insertion tableau of the row-sorted word.
inline bool is_cc(const STable& a, const OrbitShape* shape = nullptr) {
  const bool by_search = is_cc_search(a);
  if (shape != nullptr && a.row_lengths() == shape->row_lengths()) {
    const bool by_rs = rs_shape(word_of(sort_rows(a))) == shape->bp;
    if (by_rs != by_search) {
      throw Error(ErrorCode::kCrossCheckMismatch, "column search and insertion shape disagree on " + stable_str(a));
    }
  }
  return by_search;
}

/// Values of the given parity class with |v| <= bound, ascending.
inline std::vector<HalfInt> value_range(HalfInt bound, Parity parity) {
  std::vector<HalfInt> out;
  const int b = bound.doubled();
  for (int d = -b; d <= b; ++d) {
    const bool is_int = d % 2 == 0;
    if (is_int == (parity == Parity::kInteger)) out.push_back(HalfInt::from_doubled(d));
  }
  return out;
}

/// Pull-based enumeration of the row-sorted tables on a frame with entries
/// bounded by `bound` in one parity class, in lexicographic order of the
/// weight.  Shard s of c only visits first entries with index = s mod c.
class StableEnumerator {
 public:
  StableEnumerator(const SFrame& frame, HalfInt bound, Parity parity, int shard = 0, int shard_count = 1)
      : frame_(frame), values_(value_range(bound, parity)), shard_(shard), shard_count_(shard_count) {
    if (frame.shape.gtype == GType::C && parity == Parity::kHalfInteger) {
      throw Error(ErrorCode::kParityMixed, "symplectic tables are integral");
    }
    if (shard_count < 1 || shard < 0 || shard >= shard_count) throw Error(ErrorCode::kInvalidArgument, "bad shard");
    n_ = frame.shape.n();
    checks_.resize(static_cast<std::size_t>(n_));
    for (const auto& row : frame_labels(frame)) {
      for (std::size_t j = 0; j + 1 < row.size(); ++j) {
        const int depth = std::max(std::abs(row[j]), std::abs(row[j + 1]));
        if (depth == 0) continue;
        checks_[static_cast<std::size_t>(depth - 1)].push_back({row[j], row[j + 1]});
      }
    }
    choice_.assign(static_cast<std::size_t>(n_), -1);
    mu_.resize(static_cast<std::size_t>(n_));
  }

  /// The next table, or nullopt when exhausted.
  std::optional<STable> next() {
    if (done_) return std::nullopt;
    if (n_ == 0) {
      done_ = true;
      return fill_frame(mu_, frame_);
    }
    int depth = started_ ? n_ - 1 : 0;
    started_ = true;
    while (depth >= 0) {
      if (advance(depth)) {
        if (depth == n_ - 1) return fill_frame(mu_, frame_);
        ++depth;
        choice_[static_cast<std::size_t>(depth)] = -1;
      } else {
        --depth;
      }
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  struct Check {
    int left;
    int right;
  };

  HalfInt value(int label) const {
    if (label == 0) return HalfInt(0);
    return label > 0 ? mu_[static_cast<std::size_t>(label - 1)] : -mu_[static_cast<std::size_t>(-label - 1)];
  }

  // Move the choice at `depth` to its next admissible value.
  bool advance(int depth) {
    auto& c = choice_[static_cast<std::size_t>(depth)];
    const int step = depth == 0 ? shard_count_ : 1;
    c = c < 0 ? (depth == 0 ? shard_ : 0) : c + step;
    for (; c < static_cast<int>(values_.size()); c += step) {
      mu_[static_cast<std::size_t>(depth)] = values_[static_cast<std::size_t>(c)];
      bool ok = true;
      for (const Check& ch : checks_[static_cast<std::size_t>(depth)]) {
        if (value(ch.right) < value(ch.left)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  SFrame frame_;
  std::vector<HalfInt> values_;
  int shard_;
  int shard_count_;
  int n_ = 0;
  std::vector<std::vector<Check>> checks_;
  std::vector<int> choice_;
  Weight mu_;
  bool started_ = false;
  bool done_ = false;
};

inline std::vector<STable> enumerate_stab_le(const SFrame& frame, HalfInt bound, Parity parity) {
  std::vector<STable> out;
  StableEnumerator en(frame, bound, parity);
  while (auto t = en.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace wtab
