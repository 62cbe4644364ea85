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

#include "wtab/lemmas.hpp"

namespace wtab {
namespace {

constexpr std::size_t kInstances = 200;

void expect_clean(const LemmaTally& t) {
  EXPECT_EQ(t.instances, kInstances);
  EXPECT_EQ(t.failures, 0u) << t.first_failure;
}

TEST(Lemmas, FlatMoveIsTauEquivalence) {
  LemmaRng rng(1);
  expect_clean(run_lemma(rng, kInstances, draw_flat1, [](const FlatInstance& x, LemmaTally& t) {
    t.record(tau_equivalent(x.lhs, x.rhs), word_str(x.lhs));
  }));
}

TEST(Lemmas, LtIsTauEquivalenceOnIncreasingRuns) {
  LemmaRng rng(2);
  expect_clean(run_lemma(rng, kInstances, draw_lt, [](const LtInstance& x, LemmaTally& t) {
    t.record(tau_equivalent(x.list, x.image), word_str(x.list));
  }));
}

// The stated conditions alone do not force equivalence: here the a-run is
// not increasing.
TEST(Lemmas, LtWithoutIncreasingRunCanLeaveTheClass) {
  const Word xs = make_word({31, 20, 40, -32, -10});
  auto y = lt(2, 2, xs);
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, make_word({31, -32, -10, -40, -20}));
  EXPECT_FALSE(tau_equivalent(xs, *y));
}

TEST(Lemmas, FlippingTheLastBlockKeepsTheClass) {
  LemmaRng rng(3);
  expect_clean(run_lemma(rng, kInstances, draw_lt_knuth, [](const ZeroSwapInstance& x, LemmaTally& t) {
    t.record(tau_equivalent(x.half, x.flipped), word_str(x.half));
  }));
}

TEST(Lemmas, BlockPassesThroughZeroByKnuthMoves) {
  LemmaRng rng(4);
  expect_clean(run_lemma(rng, kInstances, draw_lt_knuth, [](const ZeroSwapInstance& x, LemmaTally& t) {
    t.record(knuth_equivalent(x.word, x.swapped), word_str(x.word));
  }));
}

TEST(Lemmas, SingleEntryPassesThroughZero) {
  LemmaRng rng(5);
  expect_clean(run_lemma(rng, kInstances, draw_tech, [](const ZeroSwapInstance& x, LemmaTally& t) {
    t.record(knuth_equivalent(x.word, x.swapped), word_str(x.word));
  }));
}

TEST(Lemmas, LtInverseRoundTrips) {
  LemmaRng rng(6);
  std::size_t inverted = 0;
  expect_clean(run_lemma(rng, kInstances, draw_lt, [&](const LtInstance& x, LemmaTally& t) {
    auto back = lt_inverse(x.k, x.m, x.image);
    if (back) ++inverted;
    t.record(!back || *back == x.list, word_str(x.list));
  }));
  EXPECT_GT(inverted, 0u);
}

TEST(Lemmas, DrawsAreReproducible) {
  LemmaRng a(9);
  LemmaRng b(9);
  for (int i = 0; i < 50; ++i) {
    auto x = draw_lt(a);
    auto y = draw_lt(b);
    ASSERT_EQ(x.has_value(), y.has_value());
    if (x) EXPECT_EQ(x->list, y->list);
  }
}

TEST(Lemmas, TallyKeepsFirstFailure) {
  LemmaTally t;
  t.record(true, "a");
  t.record(false, "b");
  t.record(false, "c");
  EXPECT_EQ(t.instances, 3u);
  EXPECT_EQ(t.failures, 2u);
  EXPECT_EQ(t.first_failure, "b");
}

TEST(Lemmas, DrawBudgetStopsTheRun) {
  LemmaRng rng(1);
  auto never = [](LemmaRng&) -> std::optional<FlatInstance> { return std::nullopt; };
  const auto t = run_lemma(rng, 10, never, [](const FlatInstance&, LemmaTally&) {}, 100);
  EXPECT_EQ(t.instances, 0u);
  EXPECT_EQ(t.draws, 100u);
}

}  // namespace
}  // namespace wtab
