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
#include <random>
#include <set>

#include "wtab/word.hpp"

namespace wtab {
namespace {

TEST(HalfInt, ParseAndPrint) {
  EXPECT_EQ(HalfInt::parse("-7"), HalfInt(-7));
  EXPECT_EQ(HalfInt::parse("3/2").doubled(), 3);
  EXPECT_EQ(HalfInt::parse("-11/2").doubled(), -11);
  EXPECT_EQ(HalfInt::parse("4/2"), HalfInt(2));
  EXPECT_EQ(HalfInt::from_doubled(-3).str(), "-3/2");
  EXPECT_EQ(HalfInt(5).str(), "5");
  EXPECT_THROW(HalfInt::parse("1/3"), Error);
  EXPECT_THROW(HalfInt::parse("x"), Error);
  EXPECT_THROW(HalfInt::parse(""), Error);
  EXPECT_LT(HalfInt::from_doubled(-1), HalfInt(0));
  EXPECT_EQ(-HalfInt::from_doubled(3), HalfInt::from_doubled(-3));
}

TEST(RobinsonSchensted, SignedPermutationExample) {
  const Tableau t = rs_insert(make_word({-2, -3, 1, 0, -1, 3, 2}));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0], make_word({-3, -1, 2}));
  EXPECT_EQ(t.rows[1], make_word({-2, 0, 3}));
  EXPECT_EQ(t.rows[2], make_word({1}));
  EXPECT_TRUE(t.is_valid());
}

TEST(RobinsonSchensted, EmptyWord) {
  EXPECT_TRUE(rs_insert(Word{}).rows.empty());
  EXPECT_EQ(rs_shape(Word{}), Partition{});
}

TEST(RobinsonSchensted, AllEqualWordIsOneRow) {
  EXPECT_EQ(rs_shape(make_word({0, 0, 0, 0})), Partition{4});
}

TEST(Greene, SmallExamples) {
  EXPECT_EQ(greene_stats(make_word({1, 2, 1, 2}), 1, Direction::kIncreasing), 3);
  EXPECT_EQ(greene_stats(make_word({3, 2, 1}), 1, Direction::kDecreasing), 3);
  EXPECT_EQ(greene_stats(make_word({1, 1}), 1, Direction::kDecreasing), 1);
  EXPECT_EQ(greene_stats(make_word({3, 1, 2}), 2, Direction::kIncreasing), 3);
  EXPECT_THROW(greene_stats(Word(13, HalfInt(0)), 1, Direction::kIncreasing), Error);
}

TEST(Greene, MatchesShapePrefixSumsOnRandomWords) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-7, 7);
  std::uniform_int_distribution<int> len(0, 10);
  for (int trial = 0; trial < 300; ++trial) {
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(HalfInt::from_doubled(val(rng)));
    const Partition q = rs_shape(w);
    const Partition qt = transpose(q);
    for (std::size_t k = 1; k <= w.size(); ++k) {
      EXPECT_EQ(greene_stats(w, k, Direction::kIncreasing), q.prefix_sum(k));
      EXPECT_EQ(greene_stats(w, k, Direction::kDecreasing), qt.prefix_sum(k));
    }
  }
}

TEST(Knuth, Examples) {
  EXPECT_TRUE(knuth_equivalent(make_word({2, 1, 3}), make_word({2, 3, 1})));
  EXPECT_FALSE(knuth_equivalent(make_word({1, 2, 3}), make_word({3, 2, 1})));
}

TEST(Knuth, ElementaryMovesPreserveInsertionTableau) {
  // Every word over {0,1,2} of length 6, and every single move.
  Word w(6);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      for (const Word& v : knuth_moves(w)) EXPECT_TRUE(knuth_equivalent(w, v)) << word_str(w);
      return;
    }
    for (int x = 0; x < 3; ++x) {
      w[i] = HalfInt(x);
      rec(i + 1);
    }
  };
  rec(0);
}

TEST(Knuth, MoveClosureEqualsInsertionClass) {
  // Classes reached by moves coincide with classes of equal insertion tableau.
  const Word seed = make_word({3, 1, 4, 1, 5, 2});
  std::set<Word> seen{seed};
  std::vector<Word> stack{seed};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    for (Word& v : knuth_moves(cur)) {
      if (seen.insert(v).second) stack.push_back(std::move(v));
    }
  }
  Word perm = seed;
  std::sort(perm.begin(), perm.end());
  std::size_t expected = 0;
  do {
    if (knuth_equivalent(perm, seed)) {
      ++expected;
      EXPECT_TRUE(seen.count(perm)) << word_str(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(seen.size(), expected);
}

}  // namespace
}  // namespace wtab
