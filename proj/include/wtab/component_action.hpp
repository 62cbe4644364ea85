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

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtab/bv.hpp"
#include "wtab/error.hpp"
#include "wtab/partition.hpp"
#include "wtab/realization.hpp"
#include "wtab/rowswap.hpp"
#include "wtab/stable.hpp"
#include "wtab/tau.hpp"

namespace wtab {

enum class ActionStrategy { kOracle, kPipeline, kBoth };

inline const char* strategy_name(ActionStrategy s) {
  switch (s) {
    case ActionStrategy::kOracle: return "oracle";
    case ActionStrategy::kPipeline: return "pipeline";
    case ActionStrategy::kBoth: return "both";
  }
  return "?";
}

inline ActionStrategy parse_strategy(const std::string& s) {
  if (s == "oracle") return ActionStrategy::kOracle;
  if (s == "pipeline") return ActionStrategy::kPipeline;
  if (s == "both") return ActionStrategy::kBoth;
  throw Error(ErrorCode::kParse, "unknown strategy '" + s + "'");
}

inline Word negated_reverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

/// One record per sharp-element selection.
struct SharpRecord {
  Word row;         // upper middle row the element was chosen from
  HalfInt element;  // the entry that was negated
};

/// Shared, thread-safe log of sharp selections.
class SharpLog {
 public:
  void record(const Word& row, HalfInt element) {
    std::lock_guard lock(mutex_);
    records_.push_back({row, element});
  }
  std::vector<SharpRecord> records() const {
    std::lock_guard lock(mutex_);
    return records_;
  }
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return records_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::vector<SharpRecord> records_;
};

/// Context shared by the action routines: a fingerprint cache and the
/// sharp log.  Both are safe to share between threads.
struct ActionContext {
  TauIndex* tau = nullptr;
  SharpLog* sharp_log = nullptr;

  Weight fingerprint(const Weight& mu) const {
    if (tau) return tau->ideal_fingerprint(mu);
    return tau_class(is_non_regular(mu) ? regularize(mu) : mu).fingerprint;
  }
};

// ---------------------------------------------------------------------------
// Three-row shapes.

/// Which rule governs the three-row action for the shape (l, m, l).
enum class ThreeRowKind {
  kTrivial,     // c fixes every table (or C itself is trivial)
  kSymplectic,  // type C, l even, l > m
  kOrthogonal,  // type B, l odd, l < m
};

inline ThreeRowKind three_row_kind(const OrbitShape& s) {
  if (s.r() != 1) throw Error(ErrorCode::kInvalidArgument, "three-row action needs a three-row shape");
  const int l = s.p(1);
  const int m = s.p0;
  if (s.gtype == GType::C && l % 2 == 0 && l > m) return ThreeRowKind::kSymplectic;
  if (s.gtype == GType::B && l % 2 == 1 && l < m) return ThreeRowKind::kOrthogonal;
  return ThreeRowKind::kTrivial;
}

inline void require_shape_fit(const STable& a, const OrbitShape& s) {
  if (a.gtype != s.gtype || a.row_lengths() != s.row_lengths()) {
    throw Error(ErrorCode::kInvalidArgument, "table " + stable_str(a) + " does not fit shape " + s.bp.str());
  }
  require_valid(a);
  if (!rows_sorted(a)) throw Error(ErrorCode::kInvalidArgument, "table rows must be weakly increasing");
}

/// Finite dimensionality through the associated variety.
inline bool bv_finite_dimensional(const STable& a, const OrbitShape& s) {
  const Weight mu = weight_of(a, s);
  if (mu.empty()) return true;
  return bv(mu, s.gtype) == s.bp;
}

// ---------------------------------------------------------------------------
// Type C pipeline.

struct SymplecticTrace {
  STable a_prime;
  std::optional<STable> s1;           // s1 A'
  std::optional<STable> c_prime;      // c' s1 A'
  std::optional<STable> s1_c_prime;   // s1 c' s1 A'
  std::optional<STable> result;       // c . A
  std::optional<HalfInt> sharp;
  std::vector<HalfInt> sharp_candidates;  // every entry that survived the filters
};

/// The four-row table with rows a, first half of the middle row, its mirror,
/// and the mirror of a.
inline STable symplectic_a_prime(const STable& a) {
  const Word& top = a.rows[0];
  const Word& mid = a.rows[1];
  Word half(mid.begin(), mid.begin() + static_cast<std::ptrdiff_t>(mid.size() / 2));
  return STable{GType::C, {top, half, negated_reverse(half), negated_reverse(top)}};
}

/// c' with a prescribed element x of the upper middle row.
inline std::optional<STable> c_prime_with(const STable& b, HalfInt x) {
  if (b.rows.size() % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "c' needs an even number of rows");
  const std::size_t up = b.rows.size() / 2 - 1;
  STable out = b;
  Word& row = out.rows[up];
  auto it = std::find(row.begin(), row.end(), x);
  if (it == row.end()) return std::nullopt;
  *it = -*it;
  std::sort(row.begin(), row.end());
  out.rows[up + 1] = negated_reverse(row);
  return out;
}

/// Everything after A': s1, c' at x, s1, then the reassembly.
inline void symplectic_finish(const STable& a, SymplecticTrace& tr, HalfInt x) {
  tr.c_prime = c_prime_with(*tr.s1, x);
  if (!tr.c_prime) return;
  tr.s1_c_prime = swap_rows_stable(*tr.c_prime, 1);
  if (!tr.s1_c_prime) return;
  const Word& d = tr.s1_c_prime->rows[0];
  const Word& e = tr.s1_c_prime->rows[1];
  for (HalfInt v : e) {
    if (!(v < HalfInt(0))) return;
  }
  Word mid = e;
  const Word tail = negated_reverse(e);
  mid.insert(mid.end(), tail.begin(), tail.end());
  tr.result = STable{a.gtype, {d, mid, negated_reverse(d)}};
}

/// Results of the pipeline for every distinct entry of the upper middle row
/// that lets the pipeline finish and keeps the tau class.
inline std::vector<std::pair<HalfInt, STable>> symplectic_candidates(const STable& a, const OrbitShape& s,
                                                                    const ActionContext& ctx) {
  std::vector<std::pair<HalfInt, STable>> out;
  SymplecticTrace base;
  base.a_prime = symplectic_a_prime(a);
  base.s1 = swap_rows_stable(base.a_prime, 1);
  if (!base.s1) return out;
  Word row = base.s1->rows[1];
  row.erase(std::unique(row.begin(), row.end()), row.end());
  std::optional<Weight> fp;
  for (HalfInt x : row) {
    SymplecticTrace tr = base;
    symplectic_finish(a, tr, x);
    if (!tr.result) continue;
    if (!fp) fp = ctx.fingerprint(weight_of(a, s));
    if (ctx.fingerprint(weight_of(*tr.result, s)) != *fp) continue;
    out.emplace_back(x, *tr.result);
  }
  return out;
}

/// Type C pipeline with the sharp element found by constrained search.  The
/// kept entries are those whose result is tau-equivalent to A and whose own
/// candidate set leads back to A.
inline SymplecticTrace symplectic_pipeline(const STable& a, const OrbitShape& s, const ActionContext& ctx) {
  SymplecticTrace tr;
  tr.a_prime = symplectic_a_prime(a);
  tr.s1 = swap_rows_stable(tr.a_prime, 1);
  if (!tr.s1) return tr;
  std::vector<std::pair<HalfInt, STable>> kept;
  for (auto& [x, r] : symplectic_candidates(a, s, ctx)) {
    bool returns = r == a;
    if (!returns) {
      for (const auto& [y, back] : symplectic_candidates(r, s, ctx)) returns = returns || back == a;
    }
    if (returns) kept.emplace_back(x, r);
  }
  for (const auto& [x, r] : kept) tr.sharp_candidates.push_back(x);
  if (kept.empty()) return tr;
  if (kept.size() > 1) {
    std::string list;
    for (const auto& [x, r] : kept) list += " " + x.str() + "->" + stable_str(r);
    throw Error(ErrorCode::kAmbiguousSharp, "several sharp elements for " + stable_str(a) + ":" + list);
  }
  tr.sharp = kept.front().first;
  symplectic_finish(a, tr, *tr.sharp);
  if (ctx.sharp_log) ctx.sharp_log->record(tr.s1->rows[1], *tr.sharp);
  return tr;
}

// ---------------------------------------------------------------------------
// Type B pipeline.

using PlainTable = std::vector<Word>;  // rows top to bottom, left justified

inline std::string plain_str(const PlainTable& t) { return stable_str(STable{GType::C, t}); }

struct OrthogonalTrace {
  PlainTable l_plus;
  PlainTable l_minus;
  int which_case = 3;               // 1, 2 or 3
  std::optional<PlainTable> swapped;  // s2 s1 s2 applied to A^{L-} (case 1) or A^{L+} (case 2)
  std::optional<STable> result;
};

/// A^{L+} and A^{L-} of a row-sorted table with rows (2p+1, 2q+1, 2p+1).
inline std::pair<PlainTable, PlainTable> orthogonal_halves(const STable& a) {
  const Word& top = a.rows[0];
  const Word& mid = a.rows[1];
  const std::size_t l = top.size();
  const std::size_t p = l / 2;
  Word b(mid.begin(), mid.begin() + static_cast<std::ptrdiff_t>(mid.size() / 2));
  const Word bottom = negated_reverse(top);  // -a_l .. -a_1
  auto slice = [](const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
  };
  PlainTable plus{slice(top, 0, p + 1), b, slice(bottom, 0, l - p - 1)};
  PlainTable minus{slice(top, 0, p), b, slice(bottom, 0, l - p)};
  return {plus, minus};
}

/// The table B whose half table (B^{L+} or B^{L-}, by row lengths) is `t`.
/// nullopt unless B is row sorted with a strictly negative middle half.
inline std::optional<STable> orthogonal_assemble(const PlainTable& t, GType g) {
  for (HalfInt v : t[1]) {
    if (!(v < HalfInt(0))) return std::nullopt;
  }
  Word top = t[0];
  const Word tail = negated_reverse(t[2]);
  top.insert(top.end(), tail.begin(), tail.end());
  Word mid = t[1];
  mid.emplace_back(0);
  const Word mt = negated_reverse(t[1]);
  mid.insert(mid.end(), mt.begin(), mt.end());
  STable out{g, {top, mid, negated_reverse(top)}};
  if (!rows_sorted(out)) return std::nullopt;
  return out;
}

inline OrthogonalTrace orthogonal_pipeline(const STable& a) {
  OrthogonalTrace tr;
  std::tie(tr.l_plus, tr.l_minus) = orthogonal_halves(a);
  const std::vector<int> s2s1s2{2, 1, 2};
  if (row_equivalent_column_strict(tr.l_minus)) {
    tr.which_case = 1;
    tr.swapped = apply_table_swaps(tr.l_minus, s2s1s2);
    if (tr.swapped && (*tr.swapped)[0].size() == tr.l_plus[0].size()) {
      tr.result = orthogonal_assemble(*tr.swapped, a.gtype);
    }
  } else if (row_equivalent_column_strict(tr.l_plus)) {
    tr.which_case = 2;
    tr.swapped = apply_table_swaps(tr.l_plus, s2s1s2);
    if (tr.swapped && (*tr.swapped)[0].size() == tr.l_minus[0].size()) {
      tr.result = orthogonal_assemble(*tr.swapped, a.gtype);
    }
  }
  return tr;
}

// ---------------------------------------------------------------------------
// Oracle.

/// The unique other finite-dimensional row-sorted table with the primitive
/// ideal of A, or A itself when there is none.
inline STable oracle_partner(const STable& a, const OrbitShape& s, std::size_t cap = kDefaultTauCap) {
  if (!bv_finite_dimensional(a, s)) {
    throw Error(ErrorCode::kNotFiniteDimensional, stable_str(a) + " is not finite dimensional");
  }
  const Weight mu = weight_of(a, s);
  if (mu.size() < 2) return a;
  const SFrame frame = SFrame::identity(s);
  std::vector<STable> found;
  for (const Weight& m : ideal_class_members(mu, cap)) {
    auto b = table_from_weight(m, frame);
    if (!b || *b == a) continue;
    if (bv(m, s.gtype) != s.bp) continue;
    found.push_back(std::move(*b));
  }
  if (found.size() > 1) {
    std::string list;
    for (const auto& b : found) list += " " + stable_str(b);
    throw Error(ErrorCode::kAmbiguousPartner, "several partners for " + stable_str(a) + ":" + list);
  }
  return found.empty() ? a : found.front();
}

// ---------------------------------------------------------------------------
// The three-row action.

/// Pipeline result for a row-sorted three-row table; nullopt when undefined.
inline std::optional<STable> pipeline_three_row(const STable& a, const OrbitShape& s, const ActionContext& ctx) {
  switch (three_row_kind(s)) {
    case ThreeRowKind::kTrivial: return a;
    case ThreeRowKind::kSymplectic: return symplectic_pipeline(a, s, ctx).result;
    case ThreeRowKind::kOrthogonal: return orthogonal_pipeline(a).result;
  }
  return std::nullopt;
}

inline std::optional<STable> c_three_row(const STable& a, const OrbitShape& s, ActionStrategy strategy,
                                         const ActionContext& ctx = {}) {
  require_shape_fit(a, s);
  if (strategy == ActionStrategy::kPipeline) return pipeline_three_row(a, s, ctx);
  const STable oracle = oracle_partner(a, s);
  if (strategy == ActionStrategy::kOracle) return oracle;
  auto piped = pipeline_three_row(a, s, ctx);
  if (piped && *piped != oracle) {
    throw Error(ErrorCode::kCrossCheckMismatch, "pipeline gives " + stable_str(*piped) + " but the oracle gives " +
                                                    stable_str(oracle) + " for " + stable_str(a));
  }
  return oracle;
}

// ---------------------------------------------------------------------------
// General generators by conjugation.

/// The swap sequence s_{i_k}, ..., s_{r-1} (applied first to last) that
/// carries row i_k to row r.
inline std::vector<int> conjugating_swaps(const OrbitShape& s, int k) {
  const auto rows = generator_rows(s);
  if (k < 1 || k > static_cast<int>(rows.size())) {
    throw Error(ErrorCode::kNoSuchGenerator, "generator index " + std::to_string(k) + " out of range");
  }
  std::vector<int> seq;
  for (int i = rows[static_cast<std::size_t>(k - 1)]; i < s.r(); ++i) seq.push_back(i);
  return seq;
}

/// The three-row shape (l, m, l) seen by generator k after conjugation.
inline OrbitShape generator_subshape(const OrbitShape& s, int k) {
  const int ik = generator_rows(s).at(static_cast<std::size_t>(k - 1));
  const int l = s.p(ik);
  return validate_orbit_partition(Partition({l, l, s.p0}), s.gtype);
}

inline std::optional<STable> c_k_action(const STable& a, const OrbitShape& s, int k, ActionStrategy strategy,
                                        const ActionContext& ctx = {}) {
  require_shape_fit(a, s);
  const std::vector<int> seq = conjugating_swaps(s, k);
  auto moved = apply_swap_word(a, seq);
  if (!moved) return std::nullopt;
  const std::size_t r = static_cast<std::size_t>(s.r());
  STable mid{a.gtype, {moved->rows[r - 1], moved->rows[r], moved->rows[r + 1]}};
  const OrbitShape sub = generator_subshape(s, k);
  std::optional<STable> acted;
  if (strategy == ActionStrategy::kPipeline) {
    acted = c_three_row(mid, sub, strategy, ctx);
  } else {
    // The oracle needs the middle block to be finite dimensional on its own.
    if (!bv_finite_dimensional(mid, sub)) {
      if (strategy == ActionStrategy::kOracle) return std::nullopt;
      acted = c_three_row(mid, sub, ActionStrategy::kPipeline, ctx);
    } else {
      acted = c_three_row(mid, sub, strategy, ctx);
    }
  }
  if (!acted) return std::nullopt;
  STable out = *moved;
  for (std::size_t j = 0; j < 3; ++j) out.rows[r - 1 + j] = acted->rows[j];
  std::vector<int> back(seq.rbegin(), seq.rend());
  return apply_swap_word(out, back);
}

/// Group element as a set of generator indices, applied in increasing order.
inline std::optional<STable> act(const STable& a, const OrbitShape& s, const std::vector<int>& generators,
                                 ActionStrategy strategy, const ActionContext& ctx = {}) {
  std::optional<STable> cur = a;
  for (int k : generators) {
    cur = c_k_action(*cur, s, k, strategy, ctx);
    if (!cur) return std::nullopt;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// LT and its inverse.

/// Rows weakly increasing and the left-justified table row equivalent to
/// column strict.
inline bool increasing_column_strict(const PlainTable& t) {
  for (const Word& row : t) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  return row_equivalent_column_strict(t);
}

/// The table of LT_{k,m} on (a_1..a_l, b_1..b_m): rows a_{l-2k+2}..a_{l-k},
/// b, and -a_l..-a_{l-k+1}.
inline std::optional<PlainTable> lt_table(int k, int m, const Word& xs) {
  const int l = static_cast<int>(xs.size()) - m;
  if (k < 1 || m < k || l < 2 * k - 1) return std::nullopt;
  auto a = [&](int i) { return xs[static_cast<std::size_t>(i - 1)]; };
  auto b = [&](int j) { return xs[static_cast<std::size_t>(l + j - 1)]; };
  if (!(b(m) < HalfInt(0))) return std::nullopt;
  if (l - k >= 1 && !(HalfInt(0) < a(l - k))) return std::nullopt;
  PlainTable t(3);
  for (int i = l - 2 * k + 2; i <= l - k; ++i) t[0].push_back(a(i));
  for (int j = 1; j <= m; ++j) t[1].push_back(b(j));
  for (int i = l; i >= l - k + 1; --i) t[2].push_back(-a(i));
  if (!increasing_column_strict(t)) return std::nullopt;
  return t;
}

inline std::optional<Word> lt(int k, int m, const Word& xs) {
  auto t = lt_table(k, m, xs);
  if (!t) return std::nullopt;
  const int l = static_cast<int>(xs.size()) - m;
  Word out(xs.begin(), xs.begin() + (l - 2 * k + 1));
  for (const Word& row : *t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

/// Inverse on (a_1..a_l, b_1..b_m, c_1..c_k): returns (a, -c_k..-c_1, b).
inline std::optional<Word> lt_inverse(int k, int m, const Word& xs) {
  const int l = static_cast<int>(xs.size()) - m - k;
  if (k < 1 || m < k || l < k - 1) return std::nullopt;
  auto a = [&](int i) { return xs[static_cast<std::size_t>(i - 1)]; };
  auto b = [&](int j) { return xs[static_cast<std::size_t>(l + j - 1)]; };
  auto c = [&](int j) { return xs[static_cast<std::size_t>(l + m + j - 1)]; };
  if (!(c(k) < HalfInt(0)) || !(b(m) < HalfInt(0))) return std::nullopt;
  if (l >= 1 && !(a(l) < -c(k))) return std::nullopt;
  PlainTable t(3);
  for (int i = l - k + 2; i <= l; ++i) t[0].push_back(a(i));
  for (int j = 1; j <= m; ++j) t[1].push_back(b(j));
  for (int j = 1; j <= k; ++j) t[2].push_back(c(j));
  if (!increasing_column_strict(t)) return std::nullopt;
  Word out(xs.begin(), xs.begin() + l);
  for (int j = k; j >= 1; --j) out.push_back(-c(j));
  for (int j = 1; j <= m; ++j) out.push_back(b(j));
  return out;
}

}  // namespace wtab
