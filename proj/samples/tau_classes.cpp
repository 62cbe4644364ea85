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

// Sizes of tau-equivalence classes for a few weights, and how the class of
// a singular weight compares with the class of its regularization.

#include <iostream>

#include "wtab/bv.hpp"
#include "wtab/tau.hpp"

int main() {
  using namespace wtab;
  for (const Weight& mu : {make_word({2, 3, 4, 5, -1}), make_word({-5, 2, 3, 4, -1}), make_word({1, -1, 2}),
                           make_word({0, 0, 1})}) {
    const TauClass plain = tau_class(mu);
    std::cout << word_str(mu) << ": " << plain.members.size() << " members, fingerprint "
              << word_str(plain.fingerprint) << ", bv " << bv(mu, GType::C).str();
    if (plain.non_regular) {
      std::cout << ", singular; primitive-ideal class has " << ideal_class_members(mu).size() << " members";
    }
    std::cout << "\n";
  }
}
