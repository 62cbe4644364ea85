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

#include "wtab/rowswap.hpp"
#include "wtab/tau.hpp"

namespace wtab {
namespace {

Word first_half(const STable& t) {
  Word w = word_of(t);
  w.resize(w.size() / 2);
  return w;
}

TEST(BestFit, LongAbove) {
  auto p = best_fit(make_word({2, 3, 4, 5}), make_word({-1}), FitSide::kLongAbove);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->paired, make_word({2}));
  EXPECT_EQ(p->unpaired, make_word({3, 4, 5}));
}

TEST(BestFit, LongBelow) {
  auto p = best_fit(make_word({-6, -5}), make_word({-3}), FitSide::kLongBelow);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->paired, make_word({-5}));
  EXPECT_EQ(p->unpaired, make_word({-6}));
}

TEST(BestFit, NoFit) {
  EXPECT_FALSE(best_fit(make_word({1, 2}), make_word({3}), FitSide::kLongAbove));
  EXPECT_FALSE(best_fit(make_word({4, 5}), make_word({3}), FitSide::kLongBelow));
}

TEST(BestFit, ClosestFitLeavesLargeEntriesFree) {
  auto p = best_fit(make_word({1, 2, 6, 7}), make_word({0, 5}), FitSide::kLongAbove);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->paired, make_word({1, 6}));
  EXPECT_EQ(p->unpaired, make_word({2, 7}));
}

TEST(TableSwap, OrthogonalExampleTrace) {
  const std::vector<Word> a_minus{make_word({-2}), make_word({-3, -1}), make_word({-6, -5})};
  auto step1 = swap_rows_table(a_minus, 2);
  ASSERT_TRUE(step1);
  EXPECT_EQ(*step1, a_minus);  // equal lengths, already column strict
  auto step2 = swap_rows_table(*step1, 1);
  ASSERT_TRUE(step2);
  EXPECT_EQ(*step2, (std::vector<Word>{make_word({-2, -1}), make_word({-3}), make_word({-6, -5})}));
  auto step3 = swap_rows_table(*step2, 2);
  ASSERT_TRUE(step3);
  EXPECT_EQ(*step3, (std::vector<Word>{make_word({-2, -1}), make_word({-6, -3}), make_word({-5})}));
  EXPECT_EQ(apply_table_swaps(a_minus, {2, 1, 2}), step3);
}

TEST(TableSwap, EqualLengthsWithoutPairingIsUndefined) {
  EXPECT_FALSE(swap_rows_table({make_word({1, 2}), make_word({3, 4})}, 1));
}

TEST(STableSwap, SymplecticExampleSteps) {
  const STable a_prime = make_stable(GType::C, {{2, 3, 4, 5}, {-1}, {1}, {-5, -4, -3, -2}});
  auto b = swap_rows_stable(a_prime, 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, make_stable(GType::C, {{2}, {-1, 3, 4, 5}, {-5, -4, -3, 1}, {-2}}));
  const STable after_sharp = make_stable(GType::C, {{2}, {-5, -1, 3, 4}, {-4, -3, 1, 5}, {-2}});
  auto c = swap_rows_stable(after_sharp, 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, make_stable(GType::C, {{-5, 2, 3, 4}, {-1}, {1}, {-4, -3, -2, 5}}));
}

TEST(STableSwap, MirrorRowsSwapTheSameWay) {
  // Swapping the bottom pair directly gives the mirror image of the top pair.
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-6, 6);
  std::uniform_int_distribution<int> len(1, 5);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    Word top, mid;
    for (int i = len(rng); i > 0; --i) top.emplace_back(val(rng));
    for (int i = len(rng); i > 0; --i) mid.emplace_back(val(rng));
    std::sort(top.begin(), top.end());
    std::sort(mid.begin(), mid.end());
    auto neg_rev = [](Word w) {
      std::reverse(w.begin(), w.end());
      for (auto& x : w) x = -x;
      return w;
    };
    const STable t{GType::C, {top, mid, neg_rev(mid), neg_rev(top)}};
    auto via_top = swap_rows_stable(t, 1);
    auto bottom = swap_rows_table({t.rows[2], t.rows[3]}, 1);
    ASSERT_EQ(via_top.has_value(), bottom.has_value());
    if (!via_top) continue;
    ++checked;
    EXPECT_EQ(via_top->rows[2], (*bottom)[0]);
    EXPECT_EQ(via_top->rows[3], (*bottom)[1]);
  }
  EXPECT_GT(checked, 1000);
}

TEST(STableSwap, ReversibleAndTauPreservingOnFiveRowShape) {
  const OrbitShape s = validate_orbit_partition(Partition{5, 5, 4, 2, 2}, GType::C);
  TauIndex index;
  int defined = 0;
  int tau_checked = 0;
  for (const STable& a : enumerate_stab_le(SFrame::identity(s), HalfInt(2), Parity::kInteger)) {
    auto b = swap_rows_stable(a, 1);
    if (!b) continue;
    ++defined;
    EXPECT_TRUE(rows_sorted(*b));
    EXPECT_FALSE(stable_violation(*b));
    EXPECT_EQ(swap_rows_stable(*b, 1), a);
    EXPECT_EQ(b->row_lengths(), SFrame::identity(s).swapped(1).row_lengths());
    if (tau_checked < 400) {
      ++tau_checked;
      EXPECT_TRUE(index.equivalent(first_half(a), first_half(*b))) << stable_str(a);
    }
  }
  EXPECT_GT(defined, 1000);
}

TEST(TableSwap, BraidWordsAgree) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-4, 4);
  std::uniform_int_distribution<int> len(0, 4);
  int both = 0;
  for (int trial = 0; trial < 50000; ++trial) {
    std::vector<Word> rows(3);
    for (auto& r : rows) {
      for (int i = len(rng); i > 0; --i) r.emplace_back(val(rng));
      std::sort(r.begin(), r.end());
    }
    auto a = apply_table_swaps(rows, {1, 2, 1});
    auto b = apply_table_swaps(rows, {2, 1, 2});
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      ++both;
      EXPECT_EQ(*a, *b);
    }
  }
  EXPECT_GT(both, 5000);
}

}  // namespace
}  // namespace wtab
