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
#include <map>
#include <optional>
#include <vector>

#include "wtab/error.hpp"
#include "wtab/half_int.hpp"
#include "wtab/stable.hpp"
#include "wtab/word.hpp"

namespace wtab {

enum class FitSide { kLongAbove, kLongBelow };

/// Column-strict pairing of a shorter row against a longer one.
struct Pairing {
  std::vector<std::size_t> partner;  // partner[j] = index into the long row for short[j]
  Word paired;                       // long-row entries that received a partner, sorted
  Word unpaired;                     // the remaining long-row entries, sorted
};

/// Closest-fit greedy pairing; both rows must be sorted ascending.
///   long above: short row left to right, each takes the smallest unused
///               long entry strictly greater;
///   long below: short row right to left, each takes the largest unused
///               long entry strictly smaller.
/// nullopt when some short entry finds no partner.
inline std::optional<Pairing> best_fit(const Word& longer, const Word& shorter, FitSide side) {
  if (longer.size() < shorter.size()) throw Error(ErrorCode::kInvalidArgument, "best fit needs the longer row first");
  std::vector<bool> used(longer.size(), false);
  Pairing p;
  p.partner.assign(shorter.size(), 0);
  if (side == FitSide::kLongAbove) {
    for (std::size_t j = 0; j < shorter.size(); ++j) {
      std::optional<std::size_t> pick;
      for (std::size_t t = 0; t < longer.size(); ++t) {
        if (!used[t] && shorter[j] < longer[t]) {
          pick = t;
          break;
        }
      }
      if (!pick) return std::nullopt;
      used[*pick] = true;
      p.partner[j] = *pick;
    }
  } else {
    for (std::size_t j = shorter.size(); j-- > 0;) {
      std::optional<std::size_t> pick;
      for (std::size_t t = longer.size(); t-- > 0;) {
        if (!used[t] && longer[t] < shorter[j]) {
          pick = t;
          break;
        }
      }
      if (!pick) return std::nullopt;
      used[*pick] = true;
      p.partner[j] = *pick;
    }
  }
  for (std::size_t t = 0; t < longer.size(); ++t) (used[t] ? p.paired : p.unpaired).push_back(longer[t]);
  return p;
}

/// Rows `upper` (drawn above) and `lower` after exchanging their lengths.
/// Entries of the longer row that find a partner stay; the others move to
/// the shorter row.  Equal lengths: unchanged if already column-strict
/// pairable, otherwise undefined.
inline std::optional<std::pair<Word, Word>> swap_row_pair(Word upper, Word lower) {
  std::sort(upper.begin(), upper.end());
  std::sort(lower.begin(), lower.end());
  if (upper.size() == lower.size()) {
    for (std::size_t j = 0; j < upper.size(); ++j) {
      if (!(lower[j] < upper[j])) return std::nullopt;
    }
    return std::pair{upper, lower};
  }
  if (upper.size() > lower.size()) {
    auto fit = best_fit(upper, lower, FitSide::kLongAbove);
    if (!fit) return std::nullopt;
    Word new_lower = lower;
    new_lower.insert(new_lower.end(), fit->unpaired.begin(), fit->unpaired.end());
    std::sort(new_lower.begin(), new_lower.end());
    return std::pair{fit->paired, new_lower};
  }
  auto fit = best_fit(lower, upper, FitSide::kLongBelow);
  if (!fit) return std::nullopt;
  Word new_upper = upper;
  new_upper.insert(new_upper.end(), fit->unpaired.begin(), fit->unpaired.end());
  std::sort(new_upper.begin(), new_upper.end());
  return std::pair{new_upper, fit->paired};
}

/// Plain table (rows top to bottom, 1-based i): exchange rows i and i+1.
inline std::optional<std::vector<Word>> swap_rows_table(std::vector<Word> rows, int i) {
  if (i < 1 || i + 1 > static_cast<int>(rows.size())) throw Error(ErrorCode::kInvalidArgument, "row index out of range");
  const auto a = static_cast<std::size_t>(i - 1);
  auto res = swap_row_pair(rows[a], rows[a + 1]);
  if (!res) return std::nullopt;
  rows[a] = std::move(res->first);
  rows[a + 1] = std::move(res->second);
  return rows;
}

/// Apply table swaps in the order listed (first element first).
inline std::optional<std::vector<Word>> apply_table_swaps(std::vector<Word> rows, const std::vector<int>& seq) {
  for (int i : seq) {
    auto next = swap_rows_table(std::move(rows), i);
    if (!next) return std::nullopt;
    rows = std::move(*next);
  }
  return rows;
}

/// Mirrored swap on an s-table: rows i, i+1 from the top (1-based) and the
/// mirror rows at the bottom, keeping the filling skew-symmetric.
inline std::optional<STable> swap_rows_stable(const STable& a, int i) {
  const int rc = static_cast<int>(a.rows.size());
  if (i < 1 || i + 1 > rc / 2) throw Error(ErrorCode::kInvalidArgument, "swap index must stay in the upper half");
  auto res = swap_row_pair(a.rows[static_cast<std::size_t>(i - 1)], a.rows[static_cast<std::size_t>(i)]);
  if (!res) return std::nullopt;
  STable out = a;
  auto mirror = [](const Word& w) {
    Word m(w.rbegin(), w.rend());
    for (auto& x : m) x = -x;
    return m;
  };
  out.rows[static_cast<std::size_t>(i - 1)] = res->first;
  out.rows[static_cast<std::size_t>(i)] = res->second;
  out.rows[static_cast<std::size_t>(rc - i)] = mirror(res->first);
  out.rows[static_cast<std::size_t>(rc - 1 - i)] = mirror(res->second);
  return out;
}

/// Apply s-table swaps in the order listed (first element first).
inline std::optional<STable> apply_swap_word(STable a, const std::vector<int>& seq) {
  for (int i : seq) {
    auto next = swap_rows_stable(a, i);
    if (!next) return std::nullopt;
    a = std::move(*next);
  }
  return a;
}

/// Every table tau * A for tau in the symmetric group on the top r rows,
/// reached by breadth-first search over adjacent swaps.  nullopt as soon as
/// one element acts undefined.
inline std::optional<std::vector<STable>> swap_orbit(const STable& a, int r) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::map<std::vector<int>, STable> seen{{perm, a}};
  std::vector<std::vector<int>> queue{perm};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto cur = queue[head];
    for (int i = 1; i < r; ++i) {
      auto next = cur;
      std::swap(next[static_cast<std::size_t>(i - 1)], next[static_cast<std::size_t>(i)]);
      if (seen.count(next)) continue;
      auto t = swap_rows_stable(seen.at(cur), i);
      if (!t) return std::nullopt;
      seen.emplace(next, std::move(*t));
      queue.push_back(next);
    }
  }
  std::vector<STable> out;
  for (auto& [k, t] : seen) out.push_back(t);
  return out;
}

}  // namespace wtab
