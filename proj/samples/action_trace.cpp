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

// Walks both three-row component-group actions step by step and checks each
// result against the brute-force partner search.

#include <iostream>

#include "wtab/component_action.hpp"
#include "wtab/io.hpp"

int main() {
  using namespace wtab;

  const OrbitShape c442 = validate_orbit_partition(Partition{4, 4, 2}, GType::C);
  const STable a = make_stable(GType::C, {{2, 3, 4, 5}, {-1, 1}, {-5, -4, -3, -2}});
  TauIndex tau;
  SharpLog log;
  const SymplecticTrace st = symplectic_pipeline(a, c442, {&tau, &log});
  std::cout << render(a) << "A'\n" << render(st.a_prime);
  if (st.s1) std::cout << "after s1\n" << render(*st.s1);
  if (st.sharp) std::cout << "negating " << *st.sharp << "\n";
  if (st.result) std::cout << "result\n" << render(*st.result);
  std::cout << "oracle agrees: " << std::boolalpha << (st.result && *st.result == oracle_partner(a, c442)) << "\n\n";

  const OrbitShape b533 = validate_orbit_partition(Partition{5, 3, 3}, GType::B);
  const STable b = make_stable(GType::B, {{-2, 5, 6}, {-3, -1, 0, 1, 3}, {-6, -5, 2}});
  const OrthogonalTrace ot = orthogonal_pipeline(b);
  std::cout << render(b) << "upper half\n" << render(PlainTableText{ot.l_plus}) << "lower half\n"
            << render(PlainTableText{ot.l_minus});
  if (ot.swapped) std::cout << "after s2 s1 s2\n" << render(PlainTableText{*ot.swapped});
  if (ot.result) std::cout << "result\n" << render(*ot.result);
  std::cout << "oracle agrees: " << (ot.result && *ot.result == oracle_partner(b, b533)) << "\n";
}
