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

#include <gtest/gtest.h>

#include <random>

#include "wtab/bv.hpp"
#include "wtab/tau.hpp"

namespace wtab {
namespace {

bool contains(const std::vector<Weight>& v, const Weight& w) { return std::find(v.begin(), v.end(), w) != v.end(); }

TEST(TauNeighbors, TailRules) {
  const auto nbs = tau_neighbors(make_word({1, -2}));
  EXPECT_TRUE(contains(nbs, make_word({1, 2})));
  EXPECT_TRUE(contains(nbs, make_word({-2, 1})));
  EXPECT_FALSE(tail_flip(make_word({3, -2})));
  EXPECT_FALSE(tail_swap(make_word({3, 2})));
  EXPECT_FALSE(tail_swap(make_word({0, 2})));
}

TEST(TauNeighbors, SingleEntryIsTooShort) {
  try {
    tau_neighbors(make_word({5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooShort);
  }
  EXPECT_THROW(tau_class(make_word({5})), Error);
}

TEST(TauClass, SymplecticExamplePartners) {
  const TauClass cls = tau_class(make_word({2, 3, 4, 5, -1}));
  EXPECT_TRUE(cls.contains(make_word({-5, 2, 3, 4, -1})));
  EXPECT_EQ(cls.fingerprint, cls.members.front());
}

TEST(TauClass, SeedIndependence) {
  const TauClass a = tau_class(make_word({2, -1, 3}));
  for (const Weight& m : a.members) {
    EXPECT_EQ(tau_class(m).fingerprint, a.fingerprint);
    EXPECT_EQ(tau_class(m).members, a.members);
  }
}

TEST(TauClass, AbsoluteValuesConserved) {
  auto abs_sorted = [](Weight w) {
    for (auto& x : w) x = x.abs();
    std::sort(w.begin(), w.end());
    return w;
  };
  const Weight seed = make_word({3, -1, 4, -2});
  for (const Weight& m : tau_class(seed).members) EXPECT_EQ(abs_sorted(m), abs_sorted(seed));
}

TEST(TauClass, FlatLemmaEndpoint) {
  // a > 0, b increasing negative, -a < b_m
  const Weight start = make_word({3, -5, -4, -2});
  EXPECT_TRUE(tau_class(start).contains(make_word({-5, -4, -2, -3})));
}

TEST(TauClass, CapIsEnforced) {
  try {
    tau_class(make_word({1, 2, 3, 4, 5, 6}), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(TauClass, NonRegularFlag) {
  EXPECT_TRUE(tau_class(make_word({1, -1})).non_regular);
  EXPECT_TRUE(tau_class(make_word({0, 2})).non_regular);
  EXPECT_FALSE(tau_class(make_word({1, -2})).non_regular);
}

TEST(Knuth, MoveClosureMatchesPermutationFilter) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    Weight w;
    for (int i = 0; i < 6; ++i) w.emplace_back(val(rng));
    std::vector<Weight> by_moves{w};
    std::set<Weight> seen{w};
    for (std::size_t i = 0; i < by_moves.size(); ++i) {
      for (Weight& v : knuth_moves(by_moves[i])) {
        if (seen.insert(v).second) by_moves.push_back(v);
      }
    }
    auto by_filter = knuth_class_by_filter(w);
    std::sort(by_moves.begin(), by_moves.end());
    EXPECT_EQ(by_moves, by_filter) << word_str(w);
  }
}

TEST(TauIndex, FingerprintsAndCaching) {
  TauIndex index;
  const Weight a = make_word({2, 3, 4, 5, -1});
  const Weight b = make_word({-5, 2, 3, 4, -1});
  EXPECT_TRUE(index.equivalent(a, b));
  EXPECT_EQ(index.classes_computed(), 1u);
  EXPECT_FALSE(index.equivalent(a, make_word({2, 3, 4, 5, 1})));
  EXPECT_EQ(index.fingerprint(a), tau_class(a).fingerprint);
}

TEST(WeightKey, RoundTrip) {
  const Weight small = make_word({-3, 0, 7});
  EXPECT_EQ(weight_from_key(weight_key(small)), small);
  const Weight big = make_word({-300, 1, 200});
  EXPECT_EQ(weight_from_key(weight_key(big)), big);
  EXPECT_NE(weight_key(small), weight_key(big));
}

Weight random_singular(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> v(-3, 3);
  Weight w;
  for (int i = 0; i < n; ++i) w.emplace_back(v(rng));
  return w;
}

TEST(Regularize, ProducesRegularWeightsAndInverts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Weight mu = random_singular(rng, 2 + trial % 6);
    const Weight r = regularize(mu);
    EXPECT_FALSE(is_non_regular(r)) << word_str(mu);
    EXPECT_EQ(deregularize(r), mu);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t j = 0; j < mu.size(); ++j) {
        if (mu[i].abs() < mu[j].abs()) EXPECT_LT(r[i].abs(), r[j].abs()) << word_str(mu);
      }
      if (mu[i] != HalfInt(0)) EXPECT_EQ(mu[i].sign(), r[i].sign());
    }
  }
}

TEST(Regularize, TieBreakOrder) {
  // +v takes the lowest free slot, -v the highest, zeros count down.
  const Weight r = regularize(make_word({2, -2, 0, 2, 0}));
  const int scale = 4 * (4 * 5 + 4);  // doubled 2 times S = 4n + 4
  EXPECT_EQ(r, Weight({HalfInt::from_doubled(scale + 1), HalfInt::from_doubled(-(scale + 3)),
                       HalfInt::from_doubled(-2), HalfInt::from_doubled(scale + 2), HalfInt::from_doubled(-1)}));
}

TEST(Regularize, KeepsInsertionShapeAndBv) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Weight mu = random_singular(rng, 2 + trial % 6);
    const Weight r = regularize(mu);
    EXPECT_EQ(rs_shape(mu), rs_shape(r)) << word_str(mu);
    // bv sees only the insertion shape of the doubled word, with or without 0.
    EXPECT_EQ(rs_shape(doubled_word(mu, false)), rs_shape(doubled_word(r, false))) << word_str(mu);
    EXPECT_EQ(rs_shape(doubled_word(mu, true)), rs_shape(doubled_word(r, true))) << word_str(mu);
  }
}

TEST(IdealClass, ContainsThePlainClosure) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Weight mu = random_singular(rng, 2 + trial % 5);
    const auto ideal = ideal_class_members(mu);
    for (const Weight& w : tau_class(mu).members) {
      EXPECT_TRUE(std::binary_search(ideal.begin(), ideal.end(), w)) << word_str(mu) << " vs " << word_str(w);
    }
  }
}

TEST(IdealClass, RegularWeightsUseTheClosure) {
  const Weight mu = make_word({2, 3, 4, 5, -1});
  EXPECT_EQ(ideal_class_members(mu), tau_class(mu).members);
}

TEST(TauIndex, CachedLookupsNeverCompute) {
  TauIndex index;
  const Weight mu = make_word({2, -2, 1});
  EXPECT_FALSE(index.cached_ideal_fingerprint(mu));
  const Weight fp = index.ideal_fingerprint(mu);
  EXPECT_EQ(index.cached_ideal_fingerprint(mu), fp);
  EXPECT_EQ(index.classes_computed(), 1u);
  EXPECT_FALSE(index.cached_fingerprint(mu));  // only the regularized class is stored
}

}  // namespace
}  // namespace wtab
