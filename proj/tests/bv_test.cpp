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

#include "wtab/bv.hpp"

namespace wtab {
namespace {

TEST(BarbaschVogan, CcTablesReturnTheirShape) {
  EXPECT_EQ(bv(make_word({2, 3, 4, 5, -1}), GType::C), (Partition{4, 4, 2}));
  EXPECT_EQ(bv(make_word({-2, 5, 6, -3, -1}), GType::B), (Partition{5, 3, 3}));
  // The five-row symplectic example: first half of its row reading.
  EXPECT_EQ(bv(make_word({6, 7, 2, 4, 5, 8, 9, -3, -1}), GType::C), (Partition{5, 5, 4, 2, 2}));
}

TEST(BarbaschVogan, ZeroWeightRegression) {
  // Doubled word of zeros inserts into a single row (2n); its content is
  // the single value n, which rebuilds the single row again.
  const BvTrace tr = bv_trace(make_word({0, 0, 0}), GType::C);
  EXPECT_EQ(tr.q, Partition{6});
  EXPECT_EQ(tr.u, (std::vector<int>{3}));
  EXPECT_EQ(tr.result, Partition{6});
}

TEST(BarbaschVogan, PartnerOfSymplecticExample) {
  const BvTrace tr = bv_trace(make_word({-5, 2, 3, 4, -1}), GType::C);
  EXPECT_EQ(tr.q, (Partition{5, 3, 2}));
  EXPECT_EQ(tr.result, (Partition{4, 4, 2}));
}

TEST(BarbaschVogan, Dispatch) {
  const Weight c = make_word({1, -2, 0});
  EXPECT_EQ(bv(c, GType::C), bv_raw(c, BvVariant::kSymplectic));
  Weight half{HalfInt::from_doubled(1), HalfInt::from_doubled(-3)};
  EXPECT_EQ(bv(half, GType::B), bv_prime(half, BvVariant::kOrthogonal));
  EXPECT_EQ(bv(c, GType::B), bv_prime(c, BvVariant::kOrthogonal));
  EXPECT_EQ(bv(c, GType::B), bv_raw(c, BvVariant::kOrthogonal));
  EXPECT_THROW(bv(half, GType::C), Error);
}

TEST(BarbaschVogan, OutputSizes) {
  const Weight w = make_word({3, -1, 2, 2});
  EXPECT_EQ(bv(w, GType::C).total(), 8);
  EXPECT_EQ(bv(w, GType::B).total(), 9);
}

TEST(BarbaschVogan, ContentOfOutputMatchesSplit) {
  // Re-running content on the output reproduces Step 2's data up to the
  // staircase shift of the parity pattern.
  std::vector<int> vals{-2, -1, 0, 1, 2};
  for (int a : vals)
    for (int b : vals)
      for (int c : vals) {
        for (GType g : {GType::B, GType::C}) {
          const BvTrace tr = bv_trace(make_word({a, b, c}), g);
          std::vector<int> v_again;
          std::vector<int> asc = tr.result.ascending();
          while (asc.size() < tr.v.size()) asc.insert(asc.begin(), 0);
          for (std::size_t i = 0; i < asc.size(); ++i) v_again.push_back(asc[i] + static_cast<int>(i));
          EXPECT_EQ(v_again, tr.v);
        }
      }
}

TEST(BarbaschVogan, ZeroInsertedAgreesOnSmallWeights) {
  const std::vector<int> vals{-3, -2, -1, 0, 1, 2, 3};
  std::size_t cases = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      Weight w;
      for (auto i : idx) w.emplace_back(vals[i]);
      EXPECT_EQ(bv_raw(w, BvVariant::kOrthogonal), bv_prime(w, BvVariant::kOrthogonal)) << word_str(w);
      ++cases;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == vals.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  EXPECT_EQ(cases, 7u + 49u + 343u);
}

}  // namespace
}  // namespace wtab
