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
#include <random>
#include <string>
#include <vector>

#include "wtab/component_action.hpp"
#include "wtab/tau.hpp"
#include "wtab/word.hpp"

namespace wtab {

// Random instances for the flattening, LT and zero-swap lemmas.  Every
// generator draws from a caller-owned engine and returns nullopt when the
// draw misses the preconditions, so callers loop until they have enough.
// Entries lie in -9..9 and lists have at most 8 entries.

using LemmaRng = std::mt19937_64;

namespace detail {

inline int uniform(LemmaRng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// n distinct values from lo..hi, ascending.
inline Word strict_run(LemmaRng& rng, int n, int lo, int hi) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(n));
  std::sort(pool.begin(), pool.end());
  return make_word(pool);
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word negated_reversed(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

/// (h, 0, -reverse h).
inline Word skew_word(const Word& half) {
  Word w = half;
  w.emplace_back(0);
  return concat(w, negated_reversed(half));
}

}  // namespace detail

struct FlatInstance {
  Word lhs;  // (a, b_1..b_m)
  Word rhs;  // (b_1..b_m, -a)
};

/// a > 0, b strictly increasing and negative, -a < b_m.
inline std::optional<FlatInstance> draw_flat1(LemmaRng& rng) {
  const int m = detail::uniform(rng, 1, 7);
  const Word b = detail::strict_run(rng, m, -8, -1);
  const int a = detail::uniform(rng, -b.back().as_int() + 1, 9);
  if (a > 9) return std::nullopt;
  return FlatInstance{detail::concat({HalfInt(a)}, b), detail::concat(b, {HalfInt(-a)})};
}

struct LtInstance {
  int k = 0;
  int m = 0;
  Word list;   // (a_1..a_l, b_1..b_m)
  Word image;  // LT_{k,m}(list)
};

/// A list on which LT_{k,m} is defined and whose a-entries from a_{l-2k+2}
/// on increase, as they do when the list comes from a row of an s-table.
inline std::optional<LtInstance> draw_lt(LemmaRng& rng) {
  const int k = detail::uniform(rng, 1, 4);
  const int m = detail::uniform(rng, k, 7);
  const int l = detail::uniform(rng, 2 * k - 1, 7);
  if (l + m > 8) return std::nullopt;
  Word prefix;
  for (int i = 0; i < l - 2 * k + 1; ++i) prefix.emplace_back(detail::uniform(rng, -9, 9));
  const Word run = detail::strict_run(rng, 2 * k - 1, -9, 9);
  const Word b = detail::strict_run(rng, m, -9, -1);
  Word list = detail::concat(detail::concat(prefix, run), b);
  auto image = lt(k, m, list);
  if (!image) return std::nullopt;
  return LtInstance{k, m, std::move(list), std::move(*image)};
}

struct ZeroSwapInstance {
  Word half;         // (a, b, c) as the first half of the skew word
  Word flipped;      // the same with c replaced by -c reversed
  Word word;         // skew word of half
  Word swapped;      // (a, b, -c reversed, 0, c, -b reversed, -a reversed)
};

/// a increasing (l entries), b and c increasing and negative, -c_k > a_l and
/// the insertion shape of (a, b, c) equal to (m, l, k), k <= l <= m.
inline std::optional<ZeroSwapInstance> draw_lt_knuth(LemmaRng& rng) {
  const int k = detail::uniform(rng, 1, 2);
  const int l = detail::uniform(rng, k, 3);
  const int m = detail::uniform(rng, l, 6);
  if (k + l + m > 8) return std::nullopt;
  const Word a = detail::strict_run(rng, l, -9, 9);
  const Word b = detail::strict_run(rng, m, -9, -1);
  const Word c = detail::strict_run(rng, k, -9, -1);
  if (!(-c.back() > a.back())) return std::nullopt;
  const Word ab = detail::concat(a, b);
  const Word half = detail::concat(ab, c);
  if (rs_shape(half) != Partition({m, l, k})) return std::nullopt;
  const Word nc = detail::negated_reversed(c);
  Word swapped = detail::concat(ab, nc);
  swapped.emplace_back(0);
  swapped = detail::concat(detail::concat(swapped, c), detail::negated_reversed(ab));
  return ZeroSwapInstance{half, detail::concat(ab, nc), detail::skew_word(half), std::move(swapped)};
}

/// The single-entry version: (a, b_1..b_m, c) with insertion shape (m,1,1),
/// b increasing and negative, c < 0 and -c > a.
inline std::optional<ZeroSwapInstance> draw_tech(LemmaRng& rng) {
  const int m = detail::uniform(rng, 1, 6);
  const Word b = detail::strict_run(rng, m, -9, -1);
  const int a = detail::uniform(rng, -9, 9);
  const int c = detail::uniform(rng, -9, -1);
  if (!(-c > a)) return std::nullopt;
  const Word ab = detail::concat({HalfInt(a)}, b);
  const Word half = detail::concat(ab, {HalfInt(c)});
  if (rs_shape(half) != Partition({m, 1, 1})) return std::nullopt;
  Word swapped = ab;
  swapped.emplace_back(-c);
  swapped.emplace_back(0);
  swapped.emplace_back(c);
  swapped = detail::concat(swapped, detail::negated_reversed(ab));
  return ZeroSwapInstance{half, detail::concat(ab, {HalfInt(-c)}), detail::skew_word(half), std::move(swapped)};
}

struct LemmaTally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t draws = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

/// Draws until `count` instances are checked or `max_draws` is reached.
template <class Draw, class Check>
LemmaTally run_lemma(LemmaRng& rng, std::size_t count, Draw draw, Check check, std::size_t max_draws = 1'000'000) {
  LemmaTally t;
  while (t.instances < count && t.draws < max_draws) {
    ++t.draws;
    if (auto inst = draw(rng)) check(*inst, t);
  }
  return t;
}

}  // namespace wtab
