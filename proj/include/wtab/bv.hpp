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
#include <vector>

#include "wtab/partition.hpp"
#include "wtab/stable.hpp"
#include "wtab/word.hpp"

namespace wtab {

/// Which parity pattern the odd/even positions of the sorted content take
/// in the last step: orthogonal (2s+1, 2t) or symplectic (2s, 2t+1).
enum class BvVariant { kOrthogonal, kSymplectic };

inline BvVariant bv_variant(GType g) { return g == GType::B ? BvVariant::kOrthogonal : BvVariant::kSymplectic; }

/// Every intermediate list of one run, for display and testing.
struct BvTrace {
  Word doubled;            // the word fed to insertion
  Partition q;             // its insertion shape
  std::vector<int> u;      // sorted content of q
  std::vector<int> s;      // u_1, u_3, ...
  std::vector<int> t;      // u_2, u_4, ...
  std::vector<int> v;      // the rebuilt list, sorted
  Partition result;
};

/// (a_1..a_n, [0,] -a_n..-a_1)
inline Word doubled_word(const Weight& mu, bool with_zero) {
  Word w = mu;
  if (with_zero) w.emplace_back(0);
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) w.push_back(-*it);
  return w;
}

inline BvTrace bv_trace(const Weight& mu, bool with_zero, BvVariant variant) {
  BvTrace tr;
  tr.doubled = doubled_word(mu, with_zero);
  tr.q = rs_shape(tr.doubled);
  tr.u = content(tr.q);
  for (std::size_t i = 0; i < tr.u.size(); ++i) (i % 2 == 0 ? tr.s : tr.t).push_back(tr.u[i]);
  const int odd_on_s = variant == BvVariant::kOrthogonal ? 1 : 0;
  for (int x : tr.s) tr.v.push_back(2 * x + odd_on_s);
  for (int x : tr.t) tr.v.push_back(2 * x + 1 - odd_on_s);
  std::sort(tr.v.begin(), tr.v.end());
  std::vector<int> parts;
  for (std::size_t i = 0; i < tr.v.size(); ++i) parts.push_back(tr.v[i] - static_cast<int>(i));
  tr.result = Partition(parts);
  return tr;
}

/// Insertion of the doubled word without a middle zero.
inline Partition bv_raw(const Weight& mu, BvVariant variant) { return bv_trace(mu, false, variant).result; }

/// Insertion of the doubled word with a 0 in the middle.
inline Partition bv_prime(const Weight& mu, BvVariant variant) { return bv_trace(mu, true, variant).result; }

/// The dispatch used for classification: plain doubling for C, the
/// zero-inserted word for B.
inline Partition bv(const Weight& mu, GType g) {
  if (!mu.empty()) require_uniform_parity(mu, g);
  return g == GType::C ? bv_raw(mu, BvVariant::kSymplectic) : bv_prime(mu, BvVariant::kOrthogonal);
}

inline BvTrace bv_trace(const Weight& mu, GType g) {
  if (!mu.empty()) require_uniform_parity(mu, g);
  return bv_trace(mu, g == GType::B, bv_variant(g));
}

}  // namespace wtab
