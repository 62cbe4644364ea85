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

#include <algorithm>
#include <numeric>
#include <set>

#include "wtab/domino.hpp"
#include "wtab/partition.hpp"

namespace wtab {
namespace {

DominoTableau drawn_r() {
  DominoTableau r;
  r.dominos[1] = make_domino({1, 1}, {2, 1});
  r.dominos[2] = make_domino({1, 2}, {2, 2});
  r.dominos[3] = make_domino({1, 3}, {1, 4});
  return r;
}

/// Signed permutations of 1..n as lists of images.
std::vector<std::vector<int>> signed_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    for (int s = 0; s < (1 << n); ++s) {
      std::vector<int> w = p;
      for (int i = 0; i < n; ++i) {
        if (s >> i & 1) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      }
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t involution_count(int n) {
  std::size_t count = 0;
  for (const auto& w : signed_permutations(n)) {
    bool inv = true;
    for (int i = 1; i <= n && inv; ++i) {
      const int img = w[static_cast<std::size_t>(i - 1)];
      const int back = w[static_cast<std::size_t>(std::abs(img) - 1)];
      inv = (img > 0 ? back : -back) == i;
    }
    count += inv ? 1 : 0;
  }
  return count;
}

TEST(Domino, DrawnInsertionExample) {
  const auto t = dt(rs_insert(make_word({-2, -3, 1, 0, -1, 3, 2})));
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->zero_cell);
  EXPECT_EQ(t->dominos.at(1), make_domino({2, 1}, {3, 1}));
  EXPECT_EQ(t->dominos.at(2), make_domino({1, 2}, {1, 3}));
  EXPECT_EQ(t->dominos.at(3), make_domino({2, 2}, {2, 3}));
  EXPECT_EQ(t->shape(), (Partition{3, 3, 1}));
  EXPECT_FALSE(domino_violation(*t));
}

TEST(Domino, UndefinedWhenTheSlideEndsElsewhere) {
  EXPECT_FALSE(dt(rs_insert(make_word({1, 2, -1, -2}))));
  EXPECT_TRUE(dt(rs_insert(make_word({-1, 2, 1, -2}))));
}

TEST(Domino, RejectsNonSignedLabels) {
  EXPECT_THROW(dt(rs_insert(make_word({1, 1, -1}))), Error);
  EXPECT_THROW(dt(Tableau{{Word{HalfInt::from_doubled(1)}}}), Error);
}

TEST(Domino, DrawnCycles) {
  EXPECT_EQ(cycles(drawn_r()), (std::vector<Cycle>{{1}, {2, 3}}));
}

TEST(Domino, DrawnMoveThroughFirstCycle) {
  const DominoTableau m = move_through(drawn_r(), Cycle{1});
  EXPECT_TRUE(m.zero_cell);
  EXPECT_EQ(m.dominos.at(1), make_domino({2, 1}, {3, 1}));
  EXPECT_EQ(m.dominos.at(2), make_domino({1, 2}, {2, 2}));
  EXPECT_EQ(m.dominos.at(3), make_domino({1, 3}, {1, 4}));
  EXPECT_EQ(m.shape(), (Partition{4, 2, 1}));
}

TEST(Domino, DrawnMoveThroughSecondCycle) {
  const DominoTableau m = move_through(drawn_r(), Cycle{2, 3});
  EXPECT_FALSE(m.zero_cell);
  EXPECT_EQ(m.dominos.at(1), make_domino({1, 1}, {2, 1}));
  EXPECT_EQ(m.dominos.at(2), make_domino({1, 2}, {1, 3}));
  EXPECT_EQ(m.dominos.at(3), make_domino({1, 4}, {1, 5}));
  EXPECT_EQ(m.shape(), (Partition{5, 1}));
}

TEST(Domino, MoveThroughPreconditions) {
  try {
    move_through(drawn_r(), Cycle{2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotACycle);
  }
  try {
    move_through(move_through(drawn_r(), Cycle{1}), Cycle{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOddBoxCount);
  }
}

TEST(Domino, SingleDominoCycles) {
  DominoTableau h;
  h.dominos[1] = make_domino({1, 1}, {1, 2});
  EXPECT_EQ(cycles(h), (std::vector<Cycle>{{1}}));
  const DominoTableau m = move_through(h, Cycle{1});
  EXPECT_FALSE(domino_violation(m));
}

// The number of domino tableaux with k dominos equals the number of
// involutions of the signed permutation group on k letters, with or without
// the zero cell.
TEST(Domino, TableauCountsMatchSignedInvolutions) {
  for (bool zero : {false, true}) {
    const auto all = all_domino_tableaux(8 + (zero ? 1 : 0), zero);
    std::map<std::size_t, std::size_t> by_size;
    for (const auto& t : all) {
      EXPECT_FALSE(domino_violation(t));
      ++by_size[t.dominos.size()];
    }
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(by_size[static_cast<std::size_t>(k)], involution_count(k)) << k;
  }
}

TEST(Domino, InsertionImagesCoverEveryTableau) {
  for (int n = 1; n <= 3; ++n) {
    for (GarfinkleVariant v : {GarfinkleVariant::kG0, GarfinkleVariant::kG1}) {
      std::set<DominoTableau> images;
      for (const auto& w : signed_permutations(n)) images.insert(garfinkle(make_word(w), v));
      std::set<DominoTableau> expected;
      const bool zero = v == GarfinkleVariant::kG1;
      for (const auto& t : all_domino_tableaux(2 * n + (zero ? 1 : 0), zero)) {
        if (static_cast<int>(t.dominos.size()) == n) expected.insert(t);
      }
      EXPECT_EQ(images, expected) << n;
    }
  }
}

TEST(Domino, ContentInvariantUnderMoveThrough) {
  for (const auto& r : all_domino_tableaux(6, false)) {
    for (const Cycle& c : cycles(r)) EXPECT_EQ(content(move_through(r, c).shape()), content(r.shape()));
  }
}

TEST(Domino, MoveThroughRemovesAtMostOneBox) {
  for (const auto& r : all_domino_tableaux(8, false)) {
    std::set<Cell> before;
    for (const auto& [c, l] : r.grid()) before.insert(c);
    for (const Cycle& c : cycles(r)) {
      std::set<Cell> after;
      for (const auto& [cell, l] : move_through(r, c).grid()) after.insert(cell);
      std::vector<Cell> gone;
      std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(gone));
      EXPECT_LE(gone.size(), 1u);
    }
  }
}

TEST(Domino, CycleSequenceConnectsBothInsertions) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& w : signed_permutations(n)) {
      const auto g0 = garfinkle(make_word(w), GarfinkleVariant::kG0);
      const auto g1 = garfinkle(make_word(w), GarfinkleVariant::kG1);
      const auto seq = find_cycle_sequence(g0, g1);
      ASSERT_TRUE(seq);
      EXPECT_EQ(move_through(g0, *seq), g1);
    }
  }
}

}  // namespace
}  // namespace wtab
