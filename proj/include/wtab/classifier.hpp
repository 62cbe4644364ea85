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
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "wtab/bv.hpp"
#include "wtab/component_action.hpp"
#include "wtab/error.hpp"
#include "wtab/partition.hpp"
#include "wtab/realization.hpp"
#include "wtab/rowswap.hpp"
#include "wtab/stable.hpp"
#include "wtab/tau.hpp"

namespace wtab {

enum class FdMethod { kBv, kConjugacy, kBoth };

inline const char* method_name(FdMethod m) {
  switch (m) {
    case FdMethod::kBv: return "bv";
    case FdMethod::kConjugacy: return "conjugacy";
    case FdMethod::kBoth: return "both";
  }
  return "?";
}

inline FdMethod parse_method(const std::string& s) {
  if (s == "bv") return FdMethod::kBv;
  if (s == "conjugacy") return FdMethod::kConjugacy;
  if (s == "both") return FdMethod::kBoth;
  throw Error(ErrorCode::kParse, "unknown method '" + s + "'");
}

/// Whether some row-sorted cc table carries the same primitive ideal as A.
/// Uses no associated-variety computation.
inline bool conjugate_to_cc(const STable& a, const OrbitShape& s, std::size_t cap = kDefaultTauCap) {
  if (is_cc(a, &s)) return true;
  const Weight mu = weight_of(a, s);
  if (mu.size() < 2) return false;
  const SFrame frame = SFrame::identity(s);
  for (const Weight& nu : ideal_class_members(mu, cap)) {
    auto b = table_from_weight(nu, frame);
    if (b && is_cc(*b, &s)) return true;
  }
  return false;
}

inline bool is_finite_dimensional(const STable& a, const OrbitShape& s, FdMethod method = FdMethod::kBv) {
  require_shape_fit(a, s);
  if (method == FdMethod::kBv) return bv_finite_dimensional(a, s);
  if (method == FdMethod::kConjugacy) return conjugate_to_cc(a, s);
  const bool by_bv = bv_finite_dimensional(a, s);
  const bool by_conj = conjugate_to_cc(a, s);
  if (by_bv != by_conj) {
    throw Error(ErrorCode::kMethodDisagreement, stable_str(a) + ": bv says " + (by_bv ? "finite" : "infinite") +
                                                     ", conjugacy says " + (by_conj ? "finite" : "infinite"));
  }
  return by_bv;
}

inline bool bv_says_finite(const Weight& mu, const OrbitShape& s) { return mu.empty() || bv(mu, s.gtype) == s.bp; }

/// Parity classes a shape admits: integers only for C, both for B.
inline std::vector<Parity> parities_for(GType g) {
  if (g == GType::C) return {Parity::kInteger};
  return {Parity::kInteger, Parity::kHalfInteger};
}

struct OrbitReport {
  std::vector<STable> members;  // sorted by weight
  STable cc_representative;
  Weight fingerprint;
};

struct ClassificationReport {
  OrbitShape shape;
  HalfInt bound{0};
  FdMethod method = FdMethod::kBv;
  std::vector<Parity> parities;
  std::size_t tables_scanned = 0;
  std::size_t finite_dimensional = 0;
  std::size_t cc_count = 0;
  std::vector<OrbitReport> orbits;  // ordered by their first member
};

struct ClassifyOptions {
  FdMethod method = FdMethod::kBv;
  std::vector<Parity> parities;  // empty: every admissible class
  int workers = 1;
  std::size_t tau_cap = kDefaultTauCap;
};

namespace detail {

/// Calls visit(shard, table, weight) for every table of one parity, split
/// over `workers` shards running on their own threads.
template <class Visit>
void for_each_table(const OrbitShape& s, HalfInt bound, Parity parity, int workers, Visit visit) {
  const SFrame frame = SFrame::identity(s);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto run = [&](int shard) {
    try {
      StableEnumerator en(frame, bound, parity, shard, workers);
      while (auto t = en.next()) visit(shard, *t, weight_of(*t, frame));
    } catch (...) {
      errors[static_cast<std::size_t>(shard)] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Runs fn(i) for i in [0, n) on `workers` threads.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn fn) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < n; i += static_cast<std::size_t>(workers)) fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::string verdict_mismatch(const STable& t, bool by_bv, bool by_conj) {
  return stable_str(t) + ": bv says " + (by_bv ? "finite" : "infinite") + ", conjugacy says " +
         (by_conj ? "finite" : "infinite");
}

}  // namespace detail

/// Finite-dimensional tables up to the bound, grouped by primitive ideal.
/// Each group is one C-orbit and must contain exactly one cc table.
///
/// Closures are computed only for the classes of cc tables (and, with the
/// bv method, of bv-finite tables).  Every other table is answered by a
/// cache lookup: a table is conjugate to a cc table exactly when its weight
/// lies in one of those classes.
inline ClassificationReport classify(const OrbitShape& s, HalfInt bound, const ClassifyOptions& opt = {},
                                     TauIndex* shared_tau = nullptr) {
  if (opt.workers < 1) throw Error(ErrorCode::kInvalidArgument, "workers must be positive");
  TauIndex local(opt.tau_cap);
  TauIndex& tau = shared_tau ? *shared_tau : local;
  ClassificationReport rep;
  rep.shape = s;
  rep.bound = bound;
  rep.method = opt.method;
  rep.parities = opt.parities.empty() ? parities_for(s.gtype) : opt.parities;
  auto print_of = [&](const Weight& mu) { return mu.size() >= 2 ? tau.ideal_fingerprint(mu) : mu; };
  auto cached_print = [&](const Weight& mu) -> std::optional<Weight> {
    if (mu.size() < 2) return mu;
    return tau.cached_ideal_fingerprint(mu);
  };
  struct Kept {
    STable table;
    Weight weight;
    Weight fingerprint;
    bool cc;
  };
  std::map<Weight, OrbitReport> groups;
  const auto shards = static_cast<std::size_t>(opt.workers);
  for (Parity parity : rep.parities) {
    // Pass 1: closures of the seed classes.
    std::vector<std::vector<std::pair<Weight, bool>>> seeds(shards);
    detail::for_each_table(s, bound, parity, opt.workers, [&](int shard, const STable& t, const Weight& mu) {
      const bool cc = is_cc(t, &s);
      if (cc || (opt.method == FdMethod::kBv && bv_says_finite(mu, s))) {
        seeds[static_cast<std::size_t>(shard)].emplace_back(mu, cc);
      }
    });
    std::vector<std::pair<Weight, bool>> all_seeds;
    for (auto& v : seeds) all_seeds.insert(all_seeds.end(), v.begin(), v.end());
    detail::parallel_for(all_seeds.size(), opt.workers, [&](std::size_t i) { print_of(all_seeds[i].first); });
    std::set<Weight> cc_prints;
    for (const auto& [mu, cc] : all_seeds) {
      if (cc) cc_prints.insert(*cached_print(mu));
    }
    // Pass 2: verdicts by lookup.
    std::vector<std::vector<Kept>> kept(shards);
    std::vector<std::size_t> scanned(shards, 0);
    std::vector<std::size_t> ccs(shards, 0);
    std::vector<std::string> clash(shards);
    detail::for_each_table(s, bound, parity, opt.workers, [&](int shard, const STable& t, const Weight& mu) {
      const auto k = static_cast<std::size_t>(shard);
      ++scanned[k];
      const bool cc = is_cc(t, &s);
      ccs[k] += cc ? 1 : 0;
      const bool by_bv = opt.method != FdMethod::kConjugacy && bv_says_finite(mu, s);
      const auto fp = cached_print(mu);
      const bool by_conj = opt.method != FdMethod::kBv && fp && cc_prints.count(*fp) > 0;
      if (opt.method == FdMethod::kBoth && by_bv != by_conj && clash[k].empty()) {
        clash[k] = detail::verdict_mismatch(t, by_bv, by_conj);
      }
      const bool fd = opt.method == FdMethod::kConjugacy ? by_conj : by_bv;
      if (fd && fp) kept[k].push_back({t, mu, *fp, cc});
    });
    for (const auto& c : clash) {
      if (!c.empty()) throw Error(ErrorCode::kMethodDisagreement, c);
    }
    std::vector<Kept> all;
    for (std::size_t k = 0; k < shards; ++k) {
      rep.tables_scanned += scanned[k];
      rep.cc_count += ccs[k];
      for (auto& x : kept[k]) all.push_back(std::move(x));
    }
    std::sort(all.begin(), all.end(), [](const Kept& x, const Kept& y) { return x.weight < y.weight; });
    for (auto& x : all) {
      ++rep.finite_dimensional;
      auto& g = groups[x.fingerprint];
      g.fingerprint = x.fingerprint;
      if (x.cc) g.cc_representative = x.table;
      g.members.push_back(std::move(x.table));
    }
  }
  for (auto& [fp, g] : groups) {
    std::size_t ccs = 0;
    for (const auto& m : g.members) ccs += is_cc(m, &s) ? 1 : 0;
    if (ccs != 1) {
      throw Error(ErrorCode::kMethodDisagreement, "orbit of " + stable_str(g.members.front()) + " holds " +
                                                      std::to_string(ccs) + " cc tables");
    }
    rep.orbits.push_back(std::move(g));
  }
  std::sort(rep.orbits.begin(), rep.orbits.end(), [&](const OrbitReport& x, const OrbitReport& y) {
    return weight_of(x.members.front(), s) < weight_of(y.members.front(), s);
  });
  return rep;
}

/// Closure of {A} under every generator c_k.  nullopt when some action is
/// undefined along the way.
inline std::optional<std::vector<STable>> c_orbit(const STable& a, const OrbitShape& s,
                                                  ActionStrategy strategy = ActionStrategy::kOracle,
                                                  const ActionContext& ctx = {}) {
  const int gens = static_cast<int>(generator_rows(s).size());
  std::vector<STable> orbit{a};
  std::set<STable> seen{a};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int k = 1; k <= gens; ++k) {
      auto b = c_k_action(orbit[head], s, k, strategy, ctx);
      if (!b) return std::nullopt;
      if (seen.insert(*b).second) orbit.push_back(std::move(*b));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

struct OrbitCheck {
  std::size_t tables = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Compares each fingerprint fibre of the report with the C-orbit of each of
/// its members.
inline OrbitCheck check_orbits(const ClassificationReport& rep, ActionStrategy strategy = ActionStrategy::kOracle,
                               const ActionContext& ctx = {}) {
  OrbitCheck out;
  for (const auto& o : rep.orbits) {
    std::vector<STable> fibre = o.members;
    std::sort(fibre.begin(), fibre.end());
    for (const auto& m : o.members) {
      ++out.tables;
      auto orb = c_orbit(m, rep.shape, strategy, ctx);
      if (orb && *orb == fibre) continue;
      if (out.failures++ == 0) {
        out.first_failure = stable_str(m) + (orb ? ": C-orbit differs from its fibre" : ": action undefined");
      }
    }
  }
  return out;
}

struct IdealFingerprint {
  STable cc_table;
  Weight fingerprint;
};

/// One fingerprint per row-sorted cc table; they are pairwise distinct.
inline std::vector<IdealFingerprint> primitive_ideal_fingerprints(const OrbitShape& s, HalfInt bound,
                                                                  TauIndex* shared_tau = nullptr) {
  TauIndex local;
  TauIndex& tau = shared_tau ? *shared_tau : local;
  std::vector<IdealFingerprint> out;
  std::set<Weight> seen;
  const SFrame frame = SFrame::identity(s);
  for (Parity parity : parities_for(s.gtype)) {
    StableEnumerator en(frame, bound, parity);
    while (auto t = en.next()) {
      if (!is_cc(*t, &s)) continue;
      const Weight mu = weight_of(*t, frame);
      Weight fp = mu.size() >= 2 ? tau.ideal_fingerprint(mu) : mu;
      if (!seen.insert(fp).second) {
        throw Error(ErrorCode::kCrossCheckMismatch, "two cc tables share the ideal of " + stable_str(*t));
      }
      out.push_back({std::move(*t), std::move(fp)});
    }
  }
  return out;
}

}  // namespace wtab
