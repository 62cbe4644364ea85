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

// For every signed permutation of 1..3, compares the two domino insertions
// (with and without the middle 0) and prints the cycles that carry one to
// the other.

#include <algorithm>
#include <iostream>

#include "wtab/domino.hpp"

int main() {
  using namespace wtab;
  std::vector<int> perm{1, 2, 3};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Word w;
      for (std::size_t i = 0; i < perm.size(); ++i) w.emplace_back((signs >> i) & 1 ? -perm[i] : perm[i]);
      const DominoTableau g0 = garfinkle(w, GarfinkleVariant::kG0);
      const DominoTableau g1 = garfinkle(w, GarfinkleVariant::kG1);
      const auto seq = find_cycle_sequence(g0, g1);
      std::cout << word_str(w) << ": ";
      if (!seq) {
        std::cout << "no sequence\n";
        continue;
      }
      if (seq->empty()) std::cout << "identical";
      for (const Cycle& c : *seq) {
        std::cout << "{";
        for (auto it = c.begin(); it != c.end(); ++it) std::cout << (it == c.begin() ? "" : ",") << *it;
        std::cout << "} ";
      }
      std::cout << "\n";
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}
