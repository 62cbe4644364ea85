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
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wtab/error.hpp"
#include "wtab/half_int.hpp"
#include "wtab/stable.hpp"
#include "wtab/word.hpp"

namespace wtab {

inline constexpr std::size_t kDefaultTauCap = 5'000'000;

/// Compact byte key of a weight (one byte per entry while the doubled
/// values fit, four otherwise).
inline std::string weight_key(const Weight& mu) {
  bool small = true;
  for (HalfInt x : mu) small = small && x.doubled() >= -127 && x.doubled() <= 127;
  std::string key;
  if (small) {
    key.reserve(mu.size());
    for (HalfInt x : mu) key.push_back(static_cast<char>(static_cast<std::int8_t>(x.doubled())));
  } else {
    key.push_back('\x80');  // marker: never produced by the one-byte form
    for (HalfInt x : mu) {
      const auto v = static_cast<std::uint32_t>(x.doubled());
      for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
    }
  }
  return key;
}

inline Weight weight_from_key(const std::string& key) {
  Weight mu;
  if (!key.empty() && key[0] == '\x80') {
    for (std::size_t i = 1; i + 3 < key.size(); i += 4) {
      std::uint32_t v = 0;
      for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(key[i + static_cast<std::size_t>(b)])) << (8 * b);
      mu.push_back(HalfInt::from_doubled(static_cast<std::int32_t>(v)));
    }
    return mu;
  }
  for (char c : key) mu.push_back(HalfInt::from_doubled(static_cast<std::int8_t>(c)));
  return mu;
}

/// Tail sign flip: last entry negated when |a_{n-1}| < |a_n|.
inline std::optional<Weight> tail_flip(const Weight& mu) {
  const std::size_t n = mu.size();
  if (n < 2) throw Error(ErrorCode::kTooShort, "tail relations need at least two entries");
  if (!(mu[n - 2].abs() < mu[n - 1].abs())) return std::nullopt;
  Weight out = mu;
  out[n - 1] = -out[n - 1];
  return out;
}

/// Tail swap: last two entries exchanged when they have opposite signs.
inline std::optional<Weight> tail_swap(const Weight& mu) {
  const std::size_t n = mu.size();
  if (n < 2) throw Error(ErrorCode::kTooShort, "tail relations need at least two entries");
  if (mu[n - 2].sign() * mu[n - 1].sign() >= 0) return std::nullopt;
  Weight out = mu;
  std::swap(out[n - 2], out[n - 1]);
  return out;
}

/// One-step neighbours: elementary Knuth moves at every position plus the
/// two tail relations.
inline std::vector<Weight> tau_neighbors(const Weight& mu) {
  std::vector<Weight> out = knuth_moves(mu);
  if (auto f = tail_flip(mu)) out.push_back(std::move(*f));
  if (auto s = tail_swap(mu)) out.push_back(std::move(*s));
  return out;
}

/// Knuth neighbours found the slow way: every distinct rearrangement with the
/// same insertion tableau.
inline std::vector<Weight> knuth_class_by_filter(const Weight& mu) {
  Weight perm = mu;
  std::sort(perm.begin(), perm.end());
  const Tableau target = rs_insert(mu);
  std::vector<Weight> out;
  do {
    if (rs_insert(perm) == target) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct TauClass {
  Weight seed;
  std::vector<Weight> members;  // sorted lexicographically
  Weight fingerprint;           // the smallest member
  bool non_regular = false;     // some |entry| repeats or vanishes

  bool contains(const Weight& mu) const { return std::binary_search(members.begin(), members.end(), mu); }
};

inline bool is_non_regular(const Weight& mu) {
  std::set<HalfInt> seen;
  for (HalfInt x : mu) {
    if (x == HalfInt(0) || !seen.insert(x.abs()).second) return true;
  }
  return false;
}

/// Breadth-first closure of mu under the relations.
inline TauClass tau_class(const Weight& mu, std::size_t cap = kDefaultTauCap) {
  if (mu.size() < 2) throw Error(ErrorCode::kTooShort, "tau-equivalence needs at least two entries");
  std::unordered_set<std::string> seen{weight_key(mu)};
  std::deque<Weight> queue{mu};
  TauClass cls;
  cls.seed = mu;
  cls.non_regular = is_non_regular(mu);
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (Weight& nb : tau_neighbors(cur)) {
      if (seen.insert(weight_key(nb)).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::kCapExceeded,
                      "tau class exceeded " + std::to_string(cap) + " members (partial size " +
                          std::to_string(seen.size()) + ")");
        }
        queue.push_back(std::move(nb));
      }
    }
    cls.members.push_back(std::move(cur));
  }
  std::sort(cls.members.begin(), cls.members.end());
  cls.fingerprint = cls.members.front();
  return cls;
}

inline bool tau_equivalent(const Weight& a, const Weight& b, std::size_t cap = kDefaultTauCap) {
  if (a == b) return true;
  return tau_class(a, cap).contains(b);
}

/// Moves a weight off every wall it lies on.  Entries sharing an absolute
/// value v are spread over v*S + 1..v*S + k (S = 4n + 4, doubled units):
/// read left to right, a +v entry takes the lowest free slot and a -v entry
/// the highest.  Zeros become -z, ..., -1 in order.  This is the
/// perturbation that insertion already applies to ties, so bv is unchanged;
/// the R1-R3 closure of the result decides equality of primitive ideals for
/// singular weights, where the closure of the weight itself is too fine.
inline Weight regularize(const Weight& mu) {
  const int scale = 4 * static_cast<int>(mu.size()) + 4;
  std::map<int, std::pair<int, int>> slots;  // v -> (next low, next high)
  int zeros = 0;
  for (HalfInt x : mu) {
    if (x.doubled() == 0) {
      ++zeros;
    } else {
      auto& s = slots[std::abs(x.doubled())];
      s.first = 1;
      ++s.second;
    }
  }
  Weight out;
  out.reserve(mu.size());
  for (HalfInt x : mu) {
    const int d = x.doubled();
    if (d == 0) {
      out.push_back(HalfInt::from_doubled(-zeros--));
      continue;
    }
    auto& s = slots[std::abs(d)];
    const int rank = d > 0 ? s.first++ : s.second--;
    const int mag = std::abs(d) * scale + rank;
    out.push_back(HalfInt::from_doubled(d > 0 ? mag : -mag));
  }
  return out;
}

/// Inverse of regularize on its image.
inline Weight deregularize(const Weight& m) {
  const int scale = 4 * static_cast<int>(m.size()) + 4;
  Weight out;
  out.reserve(m.size());
  for (HalfInt x : m) {
    const int d = x.doubled();
    const int v = std::abs(d) / scale;
    out.push_back(HalfInt::from_doubled(d < 0 ? -v : v));
  }
  return out;
}

/// The weights whose primitive ideal equals that of mu: the closure itself
/// for regular mu, otherwise the closure of regularize(mu) read back.
inline std::vector<Weight> ideal_class_members(const Weight& mu, std::size_t cap = kDefaultTauCap) {
  if (!is_non_regular(mu)) return tau_class(mu, cap).members;
  std::vector<Weight> out;
  for (const Weight& m : tau_class(regularize(mu), cap).members) {
    Weight nu = deregularize(m);
    if (regularize(nu) == m) out.push_back(std::move(nu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Thread-safe memo of fingerprints: every member of every computed class
/// maps to the class fingerprint.  Concurrent computation of the same class
/// inserts identical values, which is harmless.
class TauIndex {
 public:
  explicit TauIndex(std::size_t cap = kDefaultTauCap) : cap_(cap) {}

  Weight fingerprint(const Weight& mu) {
    const std::string key = weight_key(mu);
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return weight_from_key(*it->second);
    }
    TauClass cls = tau_class(mu, cap_);
    auto fp = std::make_shared<const std::string>(weight_key(cls.fingerprint));
    std::unique_lock lock(mutex_);
    for (const Weight& m : cls.members) map_.try_emplace(weight_key(m), fp);
    ++classes_;
    return cls.fingerprint;
  }

  bool equivalent(const Weight& a, const Weight& b) { return fingerprint(a) == fingerprint(b); }

  /// Fingerprint of an already computed class, without computing anything.
  std::optional<Weight> cached_fingerprint(const Weight& mu) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(weight_key(mu));
    if (it == map_.end()) return std::nullopt;
    return weight_from_key(*it->second);
  }

  /// Fingerprint of the primitive ideal: the closure fingerprint, taken
  /// after regularization for singular weights.
  Weight ideal_fingerprint(const Weight& mu) { return fingerprint(is_non_regular(mu) ? regularize(mu) : mu); }

  std::optional<Weight> cached_ideal_fingerprint(const Weight& mu) const {
    return cached_fingerprint(is_non_regular(mu) ? regularize(mu) : mu);
  }

  std::size_t cached_members() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }
  std::size_t classes_computed() const {
    std::shared_lock lock(mutex_);
    return classes_;
  }

 private:
  std::size_t cap_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const std::string>> map_;
  std::size_t classes_ = 0;
};

}  // namespace wtab
