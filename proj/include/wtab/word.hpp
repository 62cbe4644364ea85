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
#include <climits>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "wtab/error.hpp"
#include "wtab/half_int.hpp"
#include "wtab/partition.hpp"

namespace wtab {

using Word = std::vector<HalfInt>;

inline Word make_word(std::initializer_list<int> values) {
  Word w;
  for (int v : values) w.emplace_back(v);
  return w;
}

inline Word make_word(const std::vector<int>& values) {
  Word w;
  for (int v : values) w.emplace_back(v);
  return w;
}

inline std::string word_str(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i].str();
  }
  return out + ")";
}

/// Semistandard tableau, rows listed bottom (longest) first.  Rows weakly
/// increase; each column strictly increases going up.
struct Tableau {
  std::vector<Word> rows;

  Partition shape() const {
    std::vector<int> lens;
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
  }
  std::size_t box_count() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
  }
  bool operator==(const Tableau&) const = default;

  bool is_valid() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) return false;
      if (!std::is_sorted(rows[i].begin(), rows[i].end())) return false;
      if (i > 0) {
        if (rows[i].size() > rows[i - 1].size()) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          if (!(rows[i - 1][j] < rows[i][j])) return false;
        }
      }
    }
    return true;
  }
};

/// Row insertion of a single value; each displaced entry moves one row up.
inline void rs_insert_one(Tableau& t, HalfInt x) {
  for (auto& row : t.rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
  t.rows.push_back(Word{x});
}

inline Tableau rs_insert(const Word& w) {
  Tableau t;
  for (HalfInt x : w) rs_insert_one(t, x);
  return t;
}

inline Partition rs_shape(const Word& w) { return rs_insert(w).shape(); }

enum class Direction { kIncreasing, kDecreasing };

/// Exhaustive oracle for the maximal total length of k disjoint weakly
/// increasing (or strictly decreasing) subsequences.  Values can be pushed
/// and popped so that a depth-first sweep over words shares prefix work.
class GreeneOracle {
 public:
  static constexpr std::size_t kMaxLength = 12;

  GreeneOracle(std::size_t k, Direction dir) : k_(k), dir_(dir) {
    if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
    const int empty = dir == Direction::kIncreasing ? INT_MIN : INT_MAX;
    layers_.push_back({{std::vector<int>(k, empty), 0}});
  }

  void push(HalfInt x) {
    if (layers_.size() > kMaxLength) {
      throw Error(ErrorCode::kCapExceeded, "Greene oracle is capped at length 12");
    }
    const int v = x.doubled();
    const Layer& cur = layers_.back();
    Layer next;
    next.reserve(cur.size() * 2);
    auto relax = [&](const std::vector<int>& state, int score) {
      auto [it, inserted] = next.try_emplace(state, score);
      if (!inserted && it->second < score) it->second = score;
    };
    for (const auto& [state, score] : cur) {
      relax(state, score);  // skip x
      for (std::size_t i = 0; i < state.size(); ++i) {
        if (i > 0 && state[i] == state[i - 1]) continue;  // identical slot
        const bool fits = dir_ == Direction::kIncreasing ? state[i] <= v : state[i] > v;
        if (!fits) continue;
        std::vector<int> s = state;
        s[i] = v;
        std::sort(s.begin(), s.end());
        relax(s, score + 1);
      }
    }
    layers_.push_back(std::move(next));
  }

  void pop() { layers_.pop_back(); }

  int value() const {
    int best = 0;
    for (const auto& [state, score] : layers_.back()) best = std::max(best, score);
    return best;
  }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (int x : v) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 1099511628211ULL;
      return h;
    }
  };
  using Layer = std::unordered_map<std::vector<int>, int, VecHash>;

  std::size_t k_;
  Direction dir_;
  std::vector<Layer> layers_;
};

inline int greene_stats(const Word& w, std::size_t k, Direction dir) {
  if (w.size() > GreeneOracle::kMaxLength) {
    throw Error(ErrorCode::kCapExceeded, "Greene oracle is capped at length 12");
  }
  GreeneOracle oracle(k, dir);
  for (HalfInt x : w) oracle.push(x);
  return oracle.value();
}

/// Words one elementary Knuth move away from w.
inline std::vector<Word> knuth_moves(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const HalfInt a = w[i], b = w[i + 1], c = w[i + 2];
    // y z x <-> y x z  (x < y <= z)
    if ((c < a && a <= b) || (b < a && a <= c)) {
      Word v = w;
      std::swap(v[i + 1], v[i + 2]);
      out.push_back(std::move(v));
    }
    // x z y <-> z x y  (x <= y < z)
    if ((a <= c && c < b) || (b <= c && c < a)) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

inline bool knuth_equivalent(const Word& u, const Word& w) { return rs_insert(u) == rs_insert(w); }

}  // namespace wtab
