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

#include <functional>
#include <set>

#include "wtab/stable.hpp"

namespace wtab {
namespace {

const STable kSymplecticEighteen = make_stable(
    GType::C, {{6, 7}, {2, 4, 5, 8, 9}, {-3, -1, 1, 3}, {-9, -8, -5, -4, -2}, {-7, -6}});
const STable kThreeRowC = make_stable(GType::C, {{2, 3, 4, 5}, {-1, 1}, {-5, -4, -3, -2}});
const STable kThreeRowB = make_stable(GType::B, {{-2, 5, 6}, {-3, -1, 0, 1, 3}, {-6, -5, 2}});

OrbitShape shape_442() { return validate_orbit_partition(Partition{4, 4, 2}, GType::C); }

TEST(STable, ExamplesAreValid) {
  EXPECT_FALSE(stable_violation(kSymplecticEighteen));
  EXPECT_FALSE(stable_violation(kThreeRowC));
  EXPECT_FALSE(stable_violation(kThreeRowB));
  EXPECT_TRUE(stable_violation(make_stable(GType::C, {{1, 2}, {-2, -2}})));
  STable mixed{GType::B, {{HalfInt(1), HalfInt::from_doubled(3)}, {HalfInt::from_doubled(-3), HalfInt(-1)}}};
  EXPECT_THROW(require_valid(mixed), Error);
}

TEST(STable, WordsOfExamples) {
  EXPECT_EQ(word_of(kThreeRowC), make_word({2, 3, 4, 5, -1, 1, -5, -4, -3, -2}));
  const Word wb = word_of(kThreeRowB);
  EXPECT_EQ(wb, make_word({-2, 5, 6, -3, -1, 0, 1, 3, -6, -5, 2}));
  for (const STable* t : {&kSymplecticEighteen, &kThreeRowC, &kThreeRowB}) {
    Word w = word_of(*t);
    Word rev(w.rbegin(), w.rend());
    for (auto& x : rev) x = -x;
    EXPECT_EQ(rev, w);
  }
}

TEST(STable, WeightIsFirstHalfOfWord) {
  EXPECT_EQ(weight_of(kThreeRowC, shape_442()), make_word({2, 3, 4, 5, -1}));
  const OrbitShape b = validate_orbit_partition(Partition{3, 3, 5}, GType::B);
  EXPECT_EQ(weight_of(kThreeRowB, b), make_word({-2, 5, 6, -3, -1}));
}

TEST(STable, TableFromWeight) {
  const SFrame f = SFrame::identity(shape_442());
  auto t = table_from_weight(make_word({2, 3, 4, 5, -1}), f);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, kThreeRowC);
  EXPECT_FALSE(table_from_weight(make_word({3, 2, 4, 5, -1}), f));
  EXPECT_FALSE(table_from_weight(make_word({2, 3, 4, 5, 1}), f));  // middle row 1,-1
  Weight mixed = make_word({2, 3, 4, 5, -1});
  mixed[0] = HalfInt::from_doubled(3);
  EXPECT_THROW(table_from_weight(mixed, f), Error);
}

TEST(STable, IdentificationRoundTrip) {
  for (const auto& [bp, g] : std::vector<std::pair<Partition, GType>>{
           {Partition{4, 4, 2}, GType::C}, {Partition{3, 3, 5}, GType::B}, {Partition{2, 2, 4}, GType::C}}) {
    const SFrame f = SFrame::identity(validate_orbit_partition(bp, g));
    for (Parity par : {Parity::kInteger, Parity::kHalfInteger}) {
      if (g == GType::C && par == Parity::kHalfInteger) continue;
      const auto vals = value_range(HalfInt(2), par);
      Weight mu(static_cast<std::size_t>(f.shape.n()));
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == mu.size()) {
          if (auto t = table_from_weight(mu, f)) EXPECT_EQ(weight_of(*t, f), mu);
          return;
        }
        for (HalfInt v : vals) {
          mu[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
}

TEST(IsCc, Examples) {
  const OrbitShape s18 = validate_orbit_partition(Partition{5, 5, 4, 2, 2}, GType::C);
  EXPECT_TRUE(is_cc(kSymplecticEighteen, &s18));
  EXPECT_EQ(rs_shape(word_of(kSymplecticEighteen)), s18.bp);
  const OrbitShape s = shape_442();
  EXPECT_TRUE(is_cc(kThreeRowC, &s));
  const STable partner = make_stable(GType::C, {{-5, 2, 3, 4}, {-1, 1}, {-4, -3, -2, 5}});
  EXPECT_FALSE(is_cc(partner, &s));
  EXPECT_EQ(rs_shape(word_of(partner)), (Partition{5, 3, 2}));
}

TEST(IsCc, GapRuleApplies) {
  // Column 3 has no middle entry; 5 over -5 passes, 1 over 2 would not.
  EXPECT_TRUE(row_equivalent_column_strict({make_word({1, 2, 5}), make_word({0, 1}), make_word({-5, -2, -1})}));
  EXPECT_FALSE(row_equivalent_column_strict({make_word({1, 1, 1}), make_word({0}), make_word({-1, -1, 2})}));
}

TEST(IsCc, RowOrderIsIrrelevant) {
  const OrbitShape s = shape_442();
  STable shuffled = kThreeRowC;
  std::reverse(shuffled.rows[0].begin(), shuffled.rows[0].end());
  EXPECT_TRUE(is_cc(shuffled, &s));
}

TEST(Enumeration, MatchesNestedLoopFilter) {
  const SFrame f = SFrame::identity(shape_442());
  const auto listed = enumerate_stab_le(f, HalfInt(2), Parity::kInteger);
  std::vector<STable> brute;
  const auto vals = value_range(HalfInt(2), Parity::kInteger);
  for (HalfInt a : vals)
    for (HalfInt b : vals)
      for (HalfInt c : vals)
        for (HalfInt d : vals)
          for (HalfInt e : vals) {
            if (auto t = table_from_weight(Weight{a, b, c, d, e}, f)) brute.push_back(*t);
          }
  EXPECT_EQ(listed, brute);
  EXPECT_FALSE(listed.empty());
  for (const auto& t : listed) {
    EXPECT_FALSE(stable_violation(t));
    EXPECT_TRUE(rows_sorted(t));
  }
}

TEST(Enumeration, HalfIntegerOrthogonal) {
  const SFrame f = SFrame::identity(validate_orbit_partition(Partition{3, 3, 5}, GType::B));
  const auto listed = enumerate_stab_le(f, HalfInt::from_doubled(3), Parity::kHalfInteger);
  std::set<STable> seen(listed.begin(), listed.end());
  EXPECT_EQ(seen.size(), listed.size());
  for (const auto& t : listed) {
    EXPECT_FALSE(stable_violation(t));
    EXPECT_EQ(t.rows[1][2], HalfInt(0));
    EXPECT_FALSE(t.rows[0][0].is_integer());
  }
  EXPECT_THROW(StableEnumerator(SFrame::identity(shape_442()), HalfInt(2), Parity::kHalfInteger), Error);
}

TEST(Enumeration, ShardsPartitionTheStream) {
  const SFrame f = SFrame::identity(shape_442());
  const auto all = enumerate_stab_le(f, HalfInt(3), Parity::kInteger);
  std::multiset<STable> merged;
  for (int s = 0; s < 3; ++s) {
    StableEnumerator en(f, HalfInt(3), Parity::kInteger, s, 3);
    while (auto t = en.next()) merged.insert(*t);
  }
  EXPECT_EQ(merged, std::multiset<STable>(all.begin(), all.end()));
}

TEST(Enumeration, SmallBoundStillYieldsTables) {
  const SFrame f = SFrame::identity(shape_442());
  const auto listed = enumerate_stab_le(f, HalfInt(1), Parity::kInteger);
  EXPECT_FALSE(listed.empty());
  // Rows only need to weakly increase, so even bound 0 gives the zero table.
  EXPECT_EQ(enumerate_stab_le(f, HalfInt(0), Parity::kInteger).size(), 1u);
}

TEST(IsCc, SearchAgreesWithInsertionShapeOnSmallSweep) {
  for (const auto& [bp, g] : std::vector<std::pair<Partition, GType>>{
           {Partition{4, 4, 2}, GType::C}, {Partition{2, 2, 4}, GType::C}, {Partition{3, 3, 5}, GType::B}}) {
    const OrbitShape s = validate_orbit_partition(bp, g);
    for (const auto& t : enumerate_stab_le(SFrame::identity(s), HalfInt(3), Parity::kInteger)) {
      EXPECT_NO_THROW(is_cc(t, &s)) << stable_str(t);
    }
  }
}

}  // namespace
}  // namespace wtab
