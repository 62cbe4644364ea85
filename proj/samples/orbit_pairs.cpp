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

// Lists the finite-dimensional tables of the symplectic shape (4,4,2) with
// entries bounded by 4 whose orbit under the component group has two
// members, with the cc member first.

#include <iostream>

#include "wtab/classifier.hpp"

int main() {
  using namespace wtab;
  const OrbitShape shape = validate_orbit_partition(Partition{4, 4, 2}, GType::C);
  ClassifyOptions opt;
  opt.method = FdMethod::kBoth;
  const ClassificationReport rep = classify(shape, HalfInt(4), opt);
  std::cout << rep.tables_scanned << " tables, " << rep.finite_dimensional << " finite dimensional, "
            << rep.orbits.size() << " orbits\n";
  for (const OrbitReport& orbit : rep.orbits) {
    if (orbit.members.size() < 2) continue;
    std::cout << stable_str(orbit.cc_representative);
    for (const STable& t : orbit.members) {
      if (t != orbit.cc_representative) std::cout << "  <->  " << stable_str(t);
    }
    std::cout << "\n";
  }
}
