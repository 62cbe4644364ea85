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
#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wtab/error.hpp"
#include "wtab/partition.hpp"
#include "wtab/word.hpp"

namespace wtab {

/// (row counted from the bottom, column counted from the left), 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

using Domino = std::pair<Cell, Cell>;  // first < second

inline Domino make_domino(Cell a, Cell b) { return a < b ? Domino{a, b} : Domino{b, a}; }

inline bool cells_adjacent(Cell a, Cell b) { return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1; }

/// Labelled domino tiling of a Young diagram, optionally with a 0-cell at (1,1).
struct DominoTableau {
  bool zero_cell = false;
  std::map<int, Domino> dominos;

  bool operator==(const DominoTableau&) const = default;
  auto operator<=>(const DominoTableau&) const = default;

  int box_count() const { return static_cast<int>(2 * dominos.size()) + (zero_cell ? 1 : 0); }

  /// Cell -> label (0 for the zero cell).
  std::map<Cell, int> grid() const {
    std::map<Cell, int> g;
    if (zero_cell) g[{1, 1}] = 0;
    for (const auto& [lab, d] : dominos) {
      g[d.first] = lab;
      g[d.second] = lab;
    }
    return g;
  }

  /// Row lengths (bottom row first) as a partition.
  Partition shape() const {
    std::map<int, int> rows;
    for (const auto& [cell, lab] : grid()) rows[cell.row]++;
    std::vector<int> lens;
    for (const auto& [r, len] : rows) lens.push_back(len);
    return Partition(lens);
  }
};

/// Whether a set of cells is a Young diagram anchored at (1,1).
inline bool is_young_diagram(const std::set<Cell>& cells) {
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1) return false;
    if (c.row > 1 && !cells.count({c.row - 1, c.col})) return false;
    if (c.col > 1 && !cells.count({c.row, c.col - 1})) return false;
  }
  return true;
}

/// Structural check: adjacent distinct cells, a Young diagram, the zero
/// cell in the corner, and labels increasing rightwards and upwards.
inline std::optional<std::string> domino_violation(const DominoTableau& t) {
  std::set<Cell> cells;
  if (t.zero_cell) cells.insert({1, 1});
  for (const auto& [lab, d] : t.dominos) {
    if (lab <= 0) return "domino labels must be positive";
    if (!cells_adjacent(d.first, d.second)) return "domino cells are not adjacent";
    if (!cells.insert(d.first).second || !cells.insert(d.second).second) return "dominos overlap";
  }
  if (!is_young_diagram(cells)) return "cells do not form a Young diagram";
  const auto g = t.grid();
  for (const auto& [c, lab] : g) {
    auto right = g.find({c.row, c.col + 1});
    if (right != g.end() && right->second != lab && right->second < lab) return "row labels must increase";
    auto up = g.find({c.row + 1, c.col});
    if (up != g.end() && up->second != lab && up->second < lab) return "column labels must increase upwards";
  }
  return std::nullopt;
}

/// Slide each -k (k = n..1) through its smaller upper/right neighbour and
/// pair it with k.  nullopt when some -k does not end next to k.
inline std::optional<DominoTableau> dt(const Tableau& t) {
  std::map<Cell, int> g;
  int n = 0;
  bool has_zero = false;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      const HalfInt v = t.rows[i][j];
      if (!v.is_integer()) throw Error(ErrorCode::kInvalidArgument, "domino algorithm needs integer labels");
      g[{static_cast<int>(i) + 1, static_cast<int>(j) + 1}] = v.as_int();
      n = std::max(n, std::abs(v.as_int()));
      has_zero = has_zero || v.as_int() == 0;
    }
  }
  // The labels must be exactly +-1..+-n (and possibly 0).
  std::set<int> seen;
  for (const auto& [c, v] : g) {
    if (!seen.insert(v).second) throw Error(ErrorCode::kInvalidArgument, "repeated label in tableau");
  }
  if (static_cast<int>(seen.size()) != 2 * n + (has_zero ? 1 : 0)) {
    throw Error(ErrorCode::kInvalidArgument, "tableau labels must be -n..n");
  }
  DominoTableau out;
  for (int k = n; k >= 1; --k) {
    Cell pos{};
    for (const auto& [c, v] : g) {
      if (v == -k) pos = c;
    }
    std::optional<int> last;
    while (true) {
      std::optional<Cell> best;
      for (Cell nb : {Cell{pos.row + 1, pos.col}, Cell{pos.row, pos.col + 1}}) {
        auto it = g.find(nb);
        if (it == g.end()) continue;
        if (!best || it->second < g.at(*best)) best = nb;
      }
      if (!best) break;
      last = g.at(*best);
      g[pos] = *last;
      g[*best] = -k;
      pos = *best;
    }
    if (last != k) return std::nullopt;
    Cell partner{};
    for (const auto& [c, v] : g) {
      if (v == k) partner = c;
    }
    g.erase(pos);
    g.erase(partner);
    out.dominos[k] = make_domino(pos, partner);
  }
  if (has_zero) {
    if (g.size() != 1 || g.begin()->first != Cell{1, 1}) return std::nullopt;
    out.zero_cell = true;
  }
  return out;
}

/// Fixed squares: i+j odd on even diagrams, i+j even on odd diagrams.
inline bool is_fixed_square(Cell c, int box_count) {
  const bool odd_sum = (c.row + c.col) % 2 == 1;
  return box_count % 2 == 0 ? odd_sum : !odd_sum;
}

inline constexpr int kInfiniteLabel = INT_MAX;

/// D'(k) together with the square E and its label m (-1 on the axes,
/// kInfiniteLabel outside the diagram).
struct DPrime {
  Domino domino;
  Cell fixed;
  Cell e;
  int e_label = 0;
};

inline DPrime d_prime(const DominoTableau& r, int k) {
  auto it = r.dominos.find(k);
  if (it == r.dominos.end()) throw Error(ErrorCode::kInvalidArgument, "no domino labelled " + std::to_string(k));
  const Domino d = it->second;
  const int boxes = r.box_count();
  const bool first_fixed = is_fixed_square(d.first, boxes);
  if (first_fixed == is_fixed_square(d.second, boxes)) {
    throw Error(ErrorCode::kInvalidArgument, "domino does not contain exactly one fixed square");
  }
  const Cell f = first_fixed ? d.first : d.second;
  const Cell other = first_fixed ? d.second : d.first;
  // Lower or right fixed square: E is below-right; otherwise above-left.
  const bool lower_or_right = other.row > f.row || other.col < f.col;
  DPrime out;
  out.fixed = f;
  out.e = lower_or_right ? Cell{f.row - 1, f.col + 1} : Cell{f.row + 1, f.col - 1};
  const auto g = r.grid();
  if (out.e.row == 0 || out.e.col == 0) {
    out.e_label = -1;
  } else if (auto ge = g.find(out.e); ge != g.end()) {
    out.e_label = ge->second;
  } else {
    out.e_label = kInfiniteLabel;
  }
  const bool e_smaller = out.e_label < k;
  Cell second;
  if (lower_or_right) {
    second = e_smaller ? Cell{f.row, f.col + 1} : Cell{f.row - 1, f.col};
  } else {
    second = e_smaller ? Cell{f.row + 1, f.col} : Cell{f.row, f.col - 1};
  }
  out.domino = make_domino(f, second);
  return out;
}

using Cycle = std::set<int>;

/// Classes of the relation generated by: i ~ j when D'(i) meets D(j).
inline std::vector<Cycle> cycles(const DominoTableau& r) {
  std::vector<int> labels;
  for (const auto& [lab, d] : r.dominos) labels.push_back(lab);
  std::map<int, int> parent;
  for (int l : labels) parent[l] = l;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  const auto g = r.grid();
  for (int i : labels) {
    const Domino dp = d_prime(r, i).domino;
    for (Cell c : {dp.first, dp.second}) {
      auto it = g.find(c);
      if (it != g.end() && it->second > 0) parent[find(i)] = find(it->second);
    }
  }
  std::map<int, Cycle> classes;
  for (int l : labels) classes[find(l)].insert(l);
  std::vector<Cycle> out;
  for (auto& [root, c] : classes) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

/// Move through a cycle: every D(k), k in c, becomes D'(k); a vacated corner
/// receives the zero cell.
inline DominoTableau move_through(const DominoTableau& r, const Cycle& c) {
  if (r.box_count() % 2 != 0) throw Error(ErrorCode::kOddBoxCount, "moving through needs an even number of boxes");
  const auto all = cycles(r);
  if (std::find(all.begin(), all.end(), c) == all.end()) throw Error(ErrorCode::kNotACycle, "not a cycle of the tableau");
  DominoTableau out = r;
  for (int k : c) out.dominos[k] = d_prime(r, k).domino;
  std::set<Cell> covered;
  for (const auto& [lab, d] : out.dominos) {
    covered.insert(d.first);
    covered.insert(d.second);
  }
  if (!covered.count({1, 1})) out.zero_cell = true;
  return out;
}

inline DominoTableau move_through(const DominoTableau& r, const std::vector<Cycle>& seq) {
  DominoTableau cur = r;
  for (const Cycle& c : seq) cur = move_through(cur, c);
  return cur;
}

/// Signed permutation to domino tableau through insertion then DT:
/// G0 reads (a, -reverse a), G1 reads (a, 0, -reverse a).
enum class GarfinkleVariant { kG0, kG1 };

inline DominoTableau garfinkle(const Word& a, GarfinkleVariant v) {
  Word w = a;
  if (v == GarfinkleVariant::kG1) w.emplace_back(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) w.push_back(-*it);
  auto res = dt(rs_insert(w));
  if (!res) throw Error(ErrorCode::kInvalidArgument, "domino algorithm undefined on " + word_str(w));
  return *res;
}

/// Breadth-first search for cycles c_1..c_m with MT(from, c_1..c_m) = to.
/// Odd tableaux are terminal; cycles are recomputed at every step.
inline std::optional<std::vector<Cycle>> find_cycle_sequence(const DominoTableau& from, const DominoTableau& to,
                                                             std::size_t max_states = 1'000'000) {
  if (from == to) return std::vector<Cycle>{};
  std::map<DominoTableau, std::pair<DominoTableau, Cycle>> came_from;
  std::deque<DominoTableau> queue{from};
  std::set<DominoTableau> seen{from};
  while (!queue.empty()) {
    DominoTableau cur = queue.front();
    queue.pop_front();
    if (cur.box_count() % 2 != 0) continue;
    for (const Cycle& c : cycles(cur)) {
      DominoTableau nxt = move_through(cur, c);
      if (!seen.insert(nxt).second) continue;
      came_from.emplace(nxt, std::pair{cur, c});
      if (nxt == to) {
        std::vector<Cycle> path;
        DominoTableau at = nxt;
        while (!(at == from)) {
          const auto& [prev, cyc] = came_from.at(at);
          path.push_back(cyc);
          at = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (seen.size() > max_states) throw Error(ErrorCode::kCapExceeded, "cycle search state cap reached");
      queue.push_back(std::move(nxt));
    }
  }
  return std::nullopt;
}

/// Every domino tableau whose labels are 1..k with total box count at most
/// `max_boxes`, with or without the zero cell, built one domino at a time.
inline std::vector<DominoTableau> all_domino_tableaux(int max_boxes, bool with_zero) {
  std::vector<DominoTableau> out;
  DominoTableau start;
  start.zero_cell = with_zero;
  std::set<Cell> cells;
  if (with_zero) cells.insert({1, 1});
  std::function<void(DominoTableau&, std::set<Cell>&)> rec = [&](DominoTableau& t, std::set<Cell>& occ) {
    if (t.box_count() > max_boxes) return;
    out.push_back(t);
    const int label = static_cast<int>(t.dominos.size()) + 1;
    // Candidate first cells: outer corners of the current diagram.
    std::set<Cell> corners;
    if (occ.empty()) corners.insert({1, 1});
    for (const Cell& c : occ) {
      for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row, c.col + 1}}) {
        if (!occ.count(nb)) corners.insert(nb);
      }
    }
    for (const Cell& a : corners) {
      for (Cell b : {Cell{a.row + 1, a.col}, Cell{a.row, a.col + 1}}) {
        if (occ.count(b)) continue;
        occ.insert(a);
        occ.insert(b);
        if (is_young_diagram(occ)) {
          t.dominos[label] = make_domino(a, b);
          rec(t, occ);
          t.dominos.erase(label);
        }
        occ.erase(a);
        occ.erase(b);
      }
    }
  };
  rec(start, cells);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wtab
