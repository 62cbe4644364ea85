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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wtab/error.hpp"
#include "wtab/partition.hpp"
#include "wtab/pyramid.hpp"

namespace wtab {

/// Dense square matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  IntMatrix operator*(const IntMatrix& o) const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        const std::int64_t x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n_; ++j) out(i, j) += x * o(k, j);
      }
    }
    return out;
  }
  IntMatrix operator+(const IntMatrix& o) const {
    IntMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
  }
  IntMatrix operator-(const IntMatrix& o) const {
    IntMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
  }
  IntMatrix scaled(std::int64_t c) const {
    IntMatrix out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
  }
  IntMatrix transposed() const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }
  bool is_zero() const {
    for (auto x : a_) {
      if (x != 0) return false;
    }
    return true;
  }
  bool is_diagonal() const {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j && (*this)(i, j) != 0) return false;
      }
    }
    return true;
  }
  bool is_signed_identity() const {
    if (!is_diagonal()) return false;
    for (int i = 0; i < n_; ++i) {
      if ((*this)(i, i) != 1 && (*this)(i, i) != -1) return false;
    }
    return true;
  }

  /// Rows of the matrix, for serialization.
  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) rows[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    }
    return rows;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

inline IntMatrix commutator(const IntMatrix& x, const IntMatrix& y) { return x * y - y * x; }

/// Exact rank by fraction-free (Bareiss) elimination.
inline int matrix_rank(const IntMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<__int128>> a(static_cast<std::size_t>(n), std::vector<__int128>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  int rank = 0;
  __int128 prev = 1;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int i = rank; i < n; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
    const auto& pr = a[static_cast<std::size_t>(rank)];
    for (int i = rank + 1; i < n; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      for (int j = c + 1; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = (pr[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)] -
                                            row[static_cast<std::size_t>(c)] * pr[static_cast<std::size_t>(j)]) / prev;
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = pr[static_cast<std::size_t>(c)];
    ++rank;
  }
  return rank;
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
inline Partition jordan_type(const IntMatrix& m) {
  const int n = m.size();
  std::vector<int> ranks{n};
  IntMatrix power = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * m;
    ranks.push_back(matrix_rank(power));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw Error(ErrorCode::kNotNilpotent, "matrix is not nilpotent");
  // ranks[k-1] - ranks[k] = number of blocks of size >= k.
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  return transpose(Partition(at_least));
}

inline int sign_of(int x) { return (x > 0) - (x < 0); }

/// Matrix of the form: delta_{i,-j} (type B) or sign(i) delta_{i,-j} (type C).
inline IntMatrix bilinear_form(const CoordinatePyramid& k) {
  IntMatrix j(k.dim());
  const GType g = k.shape().gtype;
  for (int idx = 0; idx < k.dim(); ++idx) {
    const int a = k.label_at(idx);
    j(idx, k.index(-a)) = g == GType::B ? 1 : sign_of(a);
  }
  return j;
}

/// x preserves the form infinitesimally: x^T J + J x = 0.
inline bool in_lie_algebra(const IntMatrix& x, const IntMatrix& form) {
  return (x.transposed() * form + form * x).is_zero();
}

/// Basis element f_{i,j} of the orthogonal or symplectic algebra.
inline IntMatrix basis_element(const CoordinatePyramid& k, int i, int j) {
  IntMatrix f(k.dim());
  f(k.index(i), k.index(j)) += 1;
  const int coeff = k.shape().gtype == GType::B ? 1 : sign_of(i) * sign_of(j);
  f(k.index(-j), k.index(-i)) -= coeff;
  return f;
}

/// Whether f_{i,j} is one of the chosen basis elements.
inline bool is_basis_index(GType g, int i, int j) { return g == GType::B ? i + j > 0 : i + j >= 0; }

/// Sum of f_{i,j} over horizontally adjacent boxes [i j] of the pyramid,
/// keeping one of each mirror pair (the other one is its negative).
inline IntMatrix build_e(const CoordinatePyramid& k) {
  IntMatrix e(k.dim());
  const GType g = k.shape().gtype;
  for (const auto& row : k.rows()) {
    for (std::size_t t = 0; t + 1 < row.size(); ++t) {
      if (is_basis_index(g, row[t], row[t + 1])) e = e + basis_element(k, row[t], row[t + 1]);
    }
  }
  return e;
}

inline IntMatrix build_h(const CoordinatePyramid& k) {
  IntMatrix h(k.dim());
  for (int idx = 0; idx < k.dim(); ++idx) h(idx, idx) = -k.col(k.label_at(idx));
  return h;
}

/// Row indices i_k carrying the component group generators: for each
/// distinct part of the right parity other than p_0, the last row with it.
inline std::vector<int> generator_rows(const OrbitShape& s) {
  std::vector<int> rows;
  const int want = s.gtype == GType::B ? 1 : 0;
  for (int i = 1; i <= s.r(); ++i) {
    const int pi = s.p(i);
    if (pi == s.p0 || pi % 2 != want) continue;
    if (i < s.r() && s.p(i + 1) == pi) continue;
    rows.push_back(i);
  }
  return rows;
}

/// Generator count computed without reindexing: distinct parts of the right
/// parity, minus the odd-multiplicity one.
inline int generator_count_direct(const Partition& bp, GType g) {
  std::set<int> distinct;
  for (int p : bp.parts()) {
    if (p % 2 == (g == GType::B ? 1 : 0)) distinct.insert(p);
  }
  return static_cast<int>(distinct.size()) - 1;
}

/// Sign attached to the box pair in column c when exchanging rows i_k and
/// -i_k.  kSignOfColumn is sign(c) (with +1 at c = 0).  kAlternating flips
/// the sign from one column to the next and agrees with sign(c) whenever
/// |c| <= 1; it is the choice that centralizes e on rows longer than 2.
enum class GeneratorSigns { kAlternating, kSignOfColumn };

inline int generator_sign(int col, GeneratorSigns rule) {
  if (rule == GeneratorSigns::kSignOfColumn) return col < 0 ? -1 : 1;
  // Odd columns: (-1)^((c-1)/2); even columns: (-1)^(c/2).
  const int half = col % 2 != 0 ? (col - 1) / 2 : col / 2;
  return half % 2 == 0 ? 1 : -1;
}

/// The matrix c_k (1-based k) exchanging rows i_k and -i_k column by column.
inline IntMatrix build_component_generator(const CoordinatePyramid& k, int which,
                                           GeneratorSigns rule = GeneratorSigns::kAlternating) {
  const std::vector<int> gens = generator_rows(k.shape());
  if (which < 1 || which > static_cast<int>(gens.size())) {
    throw Error(ErrorCode::kNoSuchGenerator, "generator index " + std::to_string(which) + " out of range");
  }
  const int ik = gens[static_cast<std::size_t>(which - 1)];
  IntMatrix c(k.dim());
  const auto& top = k.row_with_label(ik);
  const auto& bottom = k.row_with_label(-ik);
  for (int idx = 0; idx < k.dim(); ++idx) {
    const int lab = k.label_at(idx);
    if (k.row(lab) != ik && k.row(lab) != -ik) c(idx, idx) = 1;
  }
  for (int i : top) {
    for (int j : bottom) {
      if (k.col(i) != k.col(j)) continue;
      const int sgn = generator_sign(k.col(i), rule);
      c(k.index(i), k.index(j)) += sgn;
      c(k.index(j), k.index(i)) += sgn;
    }
  }
  return c;
}

}  // namespace wtab
