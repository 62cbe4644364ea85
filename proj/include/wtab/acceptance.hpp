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

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wtab/bv.hpp"
#include "wtab/classifier.hpp"
#include "wtab/component_action.hpp"
#include "wtab/domino.hpp"
#include "wtab/lemmas.hpp"
#include "wtab/partition.hpp"
#include "wtab/realization.hpp"
#include "wtab/rowswap.hpp"
#include "wtab/stable.hpp"
#include "wtab/tau.hpp"
#include "wtab/word.hpp"

namespace wtab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct SweepShape {
  GType gtype;
  Partition bp;
  int bound;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20260415;
  int workers = 1;
  /// Bound for the five-row shape in the classifier sweep.  n+1 = 10 is out
  /// of reach (about 1e9 tables); 4 runs in well under a minute in ~1 GB, 5
  /// exhausts 6 GB of memory in closures.
  int five_row_classify_bound = 4;
  /// Bound for the five-row shape in the insertion-only sweep (15.8 million
  /// tables at 6, about a minute).
  int five_row_cc_bound = 6;
  std::size_t lemma_instances = 1000;
  std::set<int> only;  // empty: all twelve
};

/// Fixed shapes of the exhaustive sweeps.  The 3-row shapes use n+1.
inline std::vector<SweepShape> cc_sweep_shapes(const AcceptanceOptions& o) {
  return {{GType::C, Partition{4, 4, 2}, 6}, {GType::B, Partition{5, 3, 3}, 6}, {GType::C, Partition{5, 5, 4, 2, 2}, o.five_row_cc_bound}};
}

inline std::vector<SweepShape> classify_sweep_shapes(const AcceptanceOptions& o) {
  return {{GType::C, Partition{4, 4, 2}, 6},
          {GType::C, Partition{4, 2, 2}, 5},
          {GType::B, Partition{5, 3, 3}, 6},
          {GType::B, Partition{5, 5, 3}, 7},
          {GType::C, Partition{5, 5, 4, 2, 2}, o.five_row_classify_bound}};
}

inline std::string sweep_label(const SweepShape& s) {
  return std::string(1, gtype_char(s.gtype)) + s.bp.str() + "@" + std::to_string(s.bound);
}

namespace acceptance {

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  bool ok() const { return count_ == 0; }
  std::string summary(const std::string& good) const {
    return ok() ? good : good + " | " + std::to_string(count_) + " failure(s): " + notes_;
  }

 private:
  std::size_t count_ = 0;
  std::string notes_;
};

// 1 ------------------------------------------------------------------------
inline CriterionResult symplectic_chain() {
  Failures f;
  const auto s = validate_orbit_partition(Partition{4, 4, 2}, GType::C);
  const STable a = make_stable(GType::C, {{2, 3, 4, 5}, {-1, 1}, {-5, -4, -3, -2}});
  TauIndex tau;
  SharpLog log;
  ActionContext ctx{&tau, &log};
  const SymplecticTrace tr = symplectic_pipeline(a, s, ctx);
  auto expect = [&](const char* step, const std::optional<STable>& got, const STable& want) {
    if (!got) {
      f.add(std::string(step) + " undefined");
    } else if (stable_str(*got) != stable_str(want)) {
      f.add(std::string(step) + " = " + stable_str(*got));
    }
  };
  expect("A'", tr.a_prime, make_stable(GType::C, {{2, 3, 4, 5}, {-1}, {1}, {-5, -4, -3, -2}}));
  expect("s1 A'", tr.s1, make_stable(GType::C, {{2}, {-1, 3, 4, 5}, {-5, -4, -3, 1}, {-2}}));
  expect("c' s1 A'", tr.c_prime, make_stable(GType::C, {{2}, {-5, -1, 3, 4}, {-4, -3, 1, 5}, {-2}}));
  expect("s1 c' s1 A'", tr.s1_c_prime, make_stable(GType::C, {{-5, 2, 3, 4}, {-1}, {1}, {-4, -3, -2, 5}}));
  const STable want = make_stable(GType::C, {{-5, 2, 3, 4}, {-1, 1}, {-4, -3, -2, 5}});
  expect("c.A", tr.result, want);
  if (!tr.sharp || *tr.sharp != HalfInt(5)) f.add("sharp element is not 5");
  if (oracle_partner(a, s) != want) f.add("oracle disagrees");
  return {1, "type C three-row chain", f.ok(), f.summary("A', s1A', c's1A', s1c's1A', c.A match; sharp = 5")};
}

// 2 ------------------------------------------------------------------------
inline CriterionResult orthogonal_chain() {
  Failures f;
  const auto s = validate_orbit_partition(Partition{5, 3, 3}, GType::B);
  const STable a = make_stable(GType::B, {{-2, 5, 6}, {-3, -1, 0, 1, 3}, {-6, -5, 2}});
  const OrthogonalTrace tr = orthogonal_pipeline(a);
  auto rows = [](std::initializer_list<std::initializer_list<int>> r) { return make_stable(GType::B, r).rows; };
  if (tr.l_plus != rows({{-2, 5}, {-3, -1}, {-6}})) f.add("A^{L+} = " + plain_str(tr.l_plus));
  if (tr.l_minus != rows({{-2}, {-3, -1}, {-6, -5}})) f.add("A^{L-} = " + plain_str(tr.l_minus));
  if (tr.which_case != 1) f.add("case " + std::to_string(tr.which_case));
  if (!tr.swapped || *tr.swapped != rows({{-2, -1}, {-6, -3}, {-5}})) f.add("s2s1s2 A^{L-} wrong");
  const STable want = make_stable(GType::B, {{-2, -1, 5}, {-6, -3, 0, 3, 6}, {-5, 1, 2}});
  if (!tr.result || stable_str(*tr.result) != stable_str(want)) f.add("c.A wrong");
  if (oracle_partner(a, s) != want) f.add("oracle disagrees");
  return {2, "type B three-row chain", f.ok(), f.summary("A^{L+}, A^{L-}, s2s1s2A^{L-}, c.A match")};
}

// 3 ------------------------------------------------------------------------
inline CriterionResult domino_goldens() {
  Failures f;
  DominoTableau want_dt;
  want_dt.zero_cell = true;
  want_dt.dominos[1] = make_domino({2, 1}, {3, 1});
  want_dt.dominos[2] = make_domino({1, 2}, {1, 3});
  want_dt.dominos[3] = make_domino({2, 2}, {2, 3});
  const auto got = dt(rs_insert(make_word({-2, -3, 1, 0, -1, 3, 2})));
  if (!got || *got != want_dt) f.add("DT(RS(w)) differs");

  DominoTableau r;
  r.dominos[1] = make_domino({1, 1}, {2, 1});
  r.dominos[2] = make_domino({1, 2}, {2, 2});
  r.dominos[3] = make_domino({1, 3}, {1, 4});
  if (cycles(r) != std::vector<Cycle>{{1}, {2, 3}}) f.add("cycles differ");

  DominoTableau mt1;
  mt1.zero_cell = true;
  mt1.dominos[1] = make_domino({2, 1}, {3, 1});
  mt1.dominos[2] = make_domino({1, 2}, {2, 2});
  mt1.dominos[3] = make_domino({1, 3}, {1, 4});
  if (move_through(r, Cycle{1}) != mt1) f.add("MT(R,{1}) differs");

  DominoTableau mt23;
  mt23.dominos[1] = make_domino({1, 1}, {2, 1});
  mt23.dominos[2] = make_domino({1, 2}, {1, 3});
  mt23.dominos[3] = make_domino({1, 4}, {1, 5});
  if (move_through(r, Cycle{2, 3}) != mt23) f.add("MT(R,{2,3}) differs");
  return {3, "domino goldens", f.ok(), f.summary("DT, cycles {1},{2,3}, both MT results match")};
}

// 4 ------------------------------------------------------------------------
inline CriterionResult bv_equals_bv_prime() {
  Failures f;
  std::size_t cases = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> digits(static_cast<std::size_t>(n), -3);
    while (true) {
      const Word mu = make_word(digits);
      for (BvVariant v : {BvVariant::kSymplectic, BvVariant::kOrthogonal}) {
        ++cases;
        if (bv_raw(mu, v) != bv_prime(mu, v)) f.add(word_str(mu));
      }
      std::size_t i = 0;
      while (i < digits.size() && digits[i] == 3) digits[i++] = -3;
      if (i == digits.size()) break;
      ++digits[i];
    }
  }
  return {4, "BV equals BV'", f.ok(), f.summary(std::to_string(cases) + " weight/variant pairs agree")};
}

// 5 ------------------------------------------------------------------------
inline CriterionResult cc_shape_sweep(const AcceptanceOptions& o) {
  Failures f;
  std::ostringstream info;
  for (const SweepShape& sh : cc_sweep_shapes(o)) {
    const OrbitShape s = validate_orbit_partition(sh.bp, sh.gtype);
    const SFrame frame = SFrame::identity(s);
    std::size_t total = 0;
    std::size_t ccs = 0;
    std::set<Tableau, std::function<bool(const Tableau&, const Tableau&)>> seen(
        [](const Tableau& x, const Tableau& y) { return x.rows < y.rows; });
    for (Parity parity : parities_for(s.gtype)) {
      StableEnumerator en(frame, HalfInt(sh.bound), parity);
      while (auto t = en.next()) {
        ++total;
        const bool by_search = is_cc_search(*t);
        const Tableau ins = rs_insert(word_of(*t));
        const bool by_shape = ins.shape() == s.bp;
        if (by_search != by_shape) f.add(sweep_label(sh) + " " + stable_str(*t));
        if (!by_search) continue;
        ++ccs;
        if (!seen.insert(ins).second) f.add("insertion collision at " + stable_str(*t));
      }
    }
    info << sweep_label(sh) << ": " << total << " tables, " << ccs << " cc; ";
  }
  return {5, "cc iff insertion shape, insertion injective on cc", f.ok(), f.summary(info.str())};
}

// 6 and 11 -----------------------------------------------------------------

struct SweepData {
  SweepShape sweep;
  OrbitShape shape;
  ClassificationReport report;
};

inline bool all_parts_same_parity(const Partition& p) {
  for (int x : p.parts()) {
    if (x % 2 != p[0] % 2) return false;
  }
  return true;
}

/// Insertion shapes a finite-dimensional three-row table may have: bp and bp
/// with the outer pair (l, l) replaced by (l+1, l-1).
inline std::set<Partition> partner_shapes(const OrbitShape& s) {
  std::set<Partition> out{s.bp};
  const int l = s.p(1);
  std::vector<int> parts{l + 1, l - 1, s.p0};
  out.insert(Partition(parts));
  return out;
}

inline CriterionResult classifier_sweep(const AcceptanceOptions& o, std::vector<SweepData>& data, TauIndex& tau) {
  Failures f;
  std::ostringstream info;
  for (const SweepShape& sh : classify_sweep_shapes(o)) {
    SweepData d{sh, validate_orbit_partition(sh.bp, sh.gtype), {}};
    ClassifyOptions co;
    co.method = FdMethod::kBoth;
    co.workers = o.workers;
    try {
      d.report = classify(d.shape, HalfInt(sh.bound), co, &tau);
    } catch (const Error& e) {
      f.add(sweep_label(sh) + ": " + e.what());
      continue;
    }
    ActionContext ctx{&tau, nullptr};
    const OrbitCheck oc = check_orbits(d.report, ActionStrategy::kOracle, ctx);
    if (oc.failures) f.add(sweep_label(sh) + ": " + oc.first_failure);
    std::size_t swaps_bad = 0;
    const auto r = static_cast<std::size_t>(d.shape.r());
    for (const auto& orb : d.report.orbits) {
      for (const auto& a : orb.members) {
        const std::vector<Word> top(a.rows.begin(), a.rows.begin() + static_cast<std::ptrdiff_t>(r));
        if (!row_equivalent_column_strict(top) || !swap_orbit(a, d.shape.r())) {
          if (swaps_bad++ == 0) f.add(sweep_label(sh) + ": swaps fail on " + stable_str(a));
        }
      }
    }
    std::size_t largest = 0;
    for (const auto& orb : d.report.orbits) largest = std::max(largest, orb.members.size());
    info << sweep_label(sh) << ": " << d.report.tables_scanned << " tables, " << d.report.finite_dimensional
         << " finite, " << d.report.orbits.size() << " orbits (max size " << largest << "); ";
    data.push_back(std::move(d));
  }
  return {6, "bv and conjugacy agree, orbits are fibres", f.ok(), f.summary(info.str())};
}

inline CriterionResult action_properties(const std::vector<SweepData>& data, TauIndex& tau) {
  Failures f;
  SharpLog log;
  ActionContext ctx{&tau, &log};
  std::size_t tables = 0;
  std::size_t moved = 0;
  std::size_t plain_closure_misses = 0;
  for (const SweepData& d : data) {
    const OrbitShape& s = d.shape;
    const int gens = static_cast<int>(generator_rows(s).size());
    const bool three_rows = s.r() == 1;
    const bool same_parity = all_parts_same_parity(s.bp);
    const auto partners = partner_shapes(s);
    std::size_t finite_not_cc = 0;
    std::string example;
    for (const auto& orb : d.report.orbits) {
      for (const STable& a : orb.members) {
        ++tables;
        const Weight mu = weight_of(a, s);
        const Partition shape_a = rs_shape(word_of(a));
        const bool cc = is_cc(a, &s);
        if (same_parity && !cc && finite_not_cc++ == 0) example = stable_str(a);
        if (three_rows && !partners.count(shape_a)) f.add("unexpected shape " + shape_a.str() + " for " + stable_str(a));
        for (int k = 1; k <= gens; ++k) {
          std::optional<STable> b;
          try {
            b = c_k_action(a, s, k, three_rows ? ActionStrategy::kBoth : ActionStrategy::kOracle, ctx);
          } catch (const Error& e) {
            f.add(e.what());
            continue;
          }
          if (!b) {
            f.add("c_" + std::to_string(k) + " undefined on " + stable_str(a));
            continue;
          }
          if (*b != a) ++moved;
          auto back = c_k_action(*b, s, k, ActionStrategy::kOracle, ctx);
          if (!back || *back != a) f.add("not an involution at " + stable_str(a));
          const Weight nu = weight_of(*b, s);
          if (tau.ideal_fingerprint(nu) != tau.ideal_fingerprint(mu)) f.add("ideal changed at " + stable_str(a));
          if (tau.fingerprint(nu) != tau.fingerprint(mu)) ++plain_closure_misses;
          if (cc) {
            const Dominance dom = dominance_compare(shape_a, rs_shape(word_of(*b)));
            if (dom != Dominance::kLess && dom != Dominance::kEqual) f.add("shape drops at " + stable_str(a));
          }
        }
      }
    }
    if (finite_not_cc) {
      f.add("all parts of " + sweep_label(d.sweep) + " share a parity but " + std::to_string(finite_not_cc) +
            " finite tables are not cc, e.g. " + example);
    }
  }
  std::ostringstream info;
  info << tables << " finite tables, " << moved << " moved by a generator, " << log.size()
       << " sharp selections logged, " << plain_closure_misses << " pairs outside the unregularized closure";
  return {11, "component action properties", f.ok(), f.summary(info.str())};
}

// 7 ------------------------------------------------------------------------
inline CriterionResult greene_sweep() {
  Failures f;
  constexpr int kMaxLen = 8;
  std::size_t checks = 0;
  for (int k = 1; k <= kMaxLen; ++k) {
    for (Direction dir : {Direction::kIncreasing, Direction::kDecreasing}) {
      GreeneOracle oracle(static_cast<std::size_t>(k), dir);
      std::vector<Tableau> stack{Tableau{}};
      Word w;
      std::function<void()> rec = [&] {
        if (static_cast<int>(w.size()) >= k) {
          Partition sh = stack.back().shape();
          if (dir == Direction::kDecreasing) sh = transpose(sh);
          int want = 0;
          for (int i = 0; i < k && i < static_cast<int>(sh.size()); ++i) want += sh[static_cast<std::size_t>(i)];
          ++checks;
          if (oracle.value() != want) f.add(word_str(w) + " k=" + std::to_string(k));
        }
        if (static_cast<int>(w.size()) == kMaxLen) return;
        for (int x = -2; x <= 2; ++x) {
          w.emplace_back(x);
          oracle.push(HalfInt(x));
          stack.push_back(stack.back());
          rs_insert_one(stack.back(), HalfInt(x));
          rec();
          stack.pop_back();
          oracle.pop();
          w.pop_back();
        }
      };
      rec();
    }
  }
  return {7, "Greene statistics", f.ok(), f.summary(std::to_string(checks) + " (word, k, direction) checks")};
}

// 8 ------------------------------------------------------------------------
inline CriterionResult content_invariance() {
  Failures f;
  std::size_t moves = 0;
  std::size_t tableaux = 0;
  for (const DominoTableau& r : all_domino_tableaux(8, false)) {
    ++tableaux;
    const auto before = content(r.shape());
    for (const Cycle& c : cycles(r)) {
      ++moves;
      if (content(move_through(r, c).shape()) != before) f.add("content changes on a " + r.shape().str() + " tableau");
    }
  }
  std::size_t shapes = 0;
  for (int n = 0; n <= 10; ++n) {
    for (const Partition& p : partitions_of(n)) {
      if (!is_domino_shape_search(p)) continue;
      ++shapes;
      const ContentSplit cs = content_split(p);
      const auto k = cs.s.size();
      const auto l = cs.t.size();
      if (n % 2 == 0 ? k != l + 1 : k + 1 != l) f.add("parity split fails on " + p.str());
    }
  }
  std::ostringstream info;
  info << tableaux << " tableaux, " << moves << " moves; " << shapes << " domino shapes";
  return {8, "content invariance and parity split", f.ok(), f.summary(info.str())};
}

// 9 ------------------------------------------------------------------------
inline CriterionResult cycle_connectivity() {
  Failures f;
  std::size_t cases = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      for (int signs = 0; signs < (1 << n); ++signs) {
        std::vector<int> a(p);
        for (int i = 0; i < n; ++i) {
          if (signs >> i & 1) a[static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(i)];
        }
        ++cases;
        const Word w = make_word(a);
        const auto g0 = garfinkle(w, GarfinkleVariant::kG0);
        const auto g1 = garfinkle(w, GarfinkleVariant::kG1);
        const auto seq = find_cycle_sequence(g0, g1);
        if (!seq || move_through(g0, *seq) != g1) f.add(word_str(w));
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return {9, "cycle connectivity", f.ok(), f.summary(std::to_string(cases) + " signed permutations connected")};
}

// 10 -----------------------------------------------------------------------
inline CriterionResult realization_sanity() {
  Failures f;
  std::size_t shapes = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const Partition& p : partitions_of(n)) {
      for (GType g : {GType::B, GType::C}) {
        if (!is_orbit_partition(p, g)) continue;
        ++shapes;
        const OrbitShape s = validate_orbit_partition(p, g);
        const CoordinatePyramid k(s);
        const IntMatrix e = build_e(k);
        const IntMatrix h = build_h(k);
        const std::string tag = std::string(1, gtype_char(g)) + p.str();
        if (jordan_type(e) != p) f.add(tag + " Jordan type");
        if (commutator(h, e) != e.scaled(2)) f.add(tag + " [h,e]");
        const int count = static_cast<int>(generator_rows(s).size());
        if (count != generator_count_direct(p, g)) f.add(tag + " generator count");
        for (int c = 1; c <= count; ++c) {
          const IntMatrix gen = build_component_generator(k, c);
          if (gen * e != e * gen) f.add(tag + " generator does not commute");
          if (!(gen * gen).is_signed_identity()) f.add(tag + " square not diagonal +-1");
        }
      }
    }
  }
  return {10, "realization sanity", f.ok(), f.summary(std::to_string(shapes) + " shapes")};
}

// 12 -----------------------------------------------------------------------
inline CriterionResult lemma_suite(const AcceptanceOptions& o) {
  Failures f;
  LemmaRng rng(o.seed);
  const std::size_t n = o.lemma_instances;
  std::ostringstream info;
  auto report = [&](const char* name, const LemmaTally& t) {
    info << name << " " << t.instances << "/" << n << "; ";
    if (t.instances < n) f.add(std::string(name) + ": only " + std::to_string(t.instances) + " instances");
    if (t.failures) f.add(std::string(name) + ": " + t.first_failure);
  };
  report("flat1", run_lemma(rng, n, draw_flat1, [](const FlatInstance& x, LemmaTally& t) {
           t.record(tau_equivalent(x.lhs, x.rhs), word_str(x.lhs));
         }));
  report("flat2", run_lemma(rng, n, draw_lt, [](const LtInstance& x, LemmaTally& t) {
           t.record(tau_equivalent(x.list, x.image), word_str(x.list));
         }));
  report("lt-tau", run_lemma(rng, n, draw_lt_knuth, [](const ZeroSwapInstance& x, LemmaTally& t) {
           t.record(tau_equivalent(x.half, x.flipped), word_str(x.half));
         }));
  report("lt-knuth", run_lemma(rng, n, draw_lt_knuth, [](const ZeroSwapInstance& x, LemmaTally& t) {
           t.record(knuth_equivalent(x.word, x.swapped), word_str(x.word));
         }));
  report("zero-swap", run_lemma(rng, n, draw_tech, [](const ZeroSwapInstance& x, LemmaTally& t) {
           t.record(knuth_equivalent(x.word, x.swapped), word_str(x.word));
         }));
  // Round trip on lists where both LT and its inverse are defined.
  auto both_defined = [](LemmaRng& g) -> std::optional<LtInstance> {
    auto x = draw_lt(g);
    if (!x || !lt_inverse(x->k, x->m, x->image)) return std::nullopt;
    return x;
  };
  report("lt-inverse", run_lemma(rng, n, both_defined, [](const LtInstance& x, LemmaTally& t) {
           const auto back = lt_inverse(x.k, x.m, x.image);
           const auto again = back ? lt(x.k, x.m, *back) : std::nullopt;
           t.record(back && *back == x.list && again && *again == x.image, word_str(x.list));
         }));
  info << "seed " << o.seed;
  return {12, "lemma property suite", f.ok(), f.summary(info.str())};
}

}  // namespace acceptance

inline const std::map<int, double>& criterion_limits() {
  static const std::map<int, double> limits{{1, 1},   {2, 1},    {3, 1},   {4, 30},  {5, 1800}, {6, 1800},
                                            {7, 300}, {8, 300},  {9, 600}, {10, 60}, {11, 1800}, {12, 300}};
  return limits;
}

/// Runs the selected criteria in order.  A criterion passes when its checks
/// hold and it stays within its time limit.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o,
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  TauIndex tau;
  std::vector<acceptance::SweepData> sweeps;
  bool swept = false;
  auto wanted = [&](int id) { return o.only.empty() || o.only.count(id) > 0; };
  auto run = [&](int id, const std::function<CriterionResult()>& fn) {
    if (!wanted(id)) return;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.limit_seconds = criterion_limits().at(id);
    if (r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += " (over the time limit)";
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  auto ensure_sweep = [&]() -> CriterionResult {
    swept = true;
    return acceptance::classifier_sweep(o, sweeps, tau);
  };
  run(1, acceptance::symplectic_chain);
  run(2, acceptance::orthogonal_chain);
  run(3, acceptance::domino_goldens);
  run(4, acceptance::bv_equals_bv_prime);
  run(5, [&] { return acceptance::cc_shape_sweep(o); });
  run(6, ensure_sweep);
  run(7, acceptance::greene_sweep);
  run(8, acceptance::content_invariance);
  run(9, acceptance::cycle_connectivity);
  run(10, acceptance::realization_sanity);
  run(11, [&] {
    if (!swept) ensure_sweep();
    return acceptance::action_properties(sweeps, tau);
  });
  run(12, [&] { return acceptance::lemma_suite(o); });
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s, limit "
    << r.limit_seconds << " s): " << r.detail;
  return s.str();
}

}  // namespace wtab
