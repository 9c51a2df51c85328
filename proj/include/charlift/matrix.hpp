/*
   Copyright 2026 the charlift authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <vector>

#include "charlift/cyclotomic.hpp"
#include "charlift/finite_field.hpp"
#include "charlift/rational.hpp"

namespace charlift {

// Dense row-major matrices over an exact field, parameterized by a small ops
// object so the same routines serve Q, Q(zeta) and F_q coefficients.

template <class T>
using DenseMat = std::vector<std::vector<T>>;

struct RatOps {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Rat(1) / a; }
};

struct CycOps {
  using Elem = Cyclotomic;
  Elem zero() const { return Cyclotomic(); }
  Elem one() const { return Cyclotomic(Rat(1)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
};

struct FqOps {
  using Elem = FqElem;
  const FqField* F;
  explicit FqOps(const FqField* f) : F(f) {}
  Elem zero() const { return F->zero(); }
  Elem one() const { return F->one(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
};

template <class Ops>
DenseMat<typename Ops::Elem> mat_identity(size_t n, const Ops& ops) {
  DenseMat<typename Ops::Elem> m(n, std::vector<typename Ops::Elem>(n, ops.zero()));
  for (size_t i = 0; i < n; ++i) m[i][i] = ops.one();
  return m;
}

template <class Ops>
DenseMat<typename Ops::Elem> mat_mul(const DenseMat<typename Ops::Elem>& a,
                                     const DenseMat<typename Ops::Elem>& b, const Ops& ops) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  DenseMat<typename Ops::Elem> r(n, std::vector<typename Ops::Elem>(m, ops.zero()));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (ops.is_zero(a[i][t])) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] = ops.add(r[i][j], ops.mul(a[i][t], b[t][j]));
    }
  return r;
}

template <class Ops>
std::vector<typename Ops::Elem> mat_vec(const DenseMat<typename Ops::Elem>& a,
                                        const std::vector<typename Ops::Elem>& v, const Ops& ops) {
  std::vector<typename Ops::Elem> r(a.size(), ops.zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!ops.is_zero(a[i][j])) r[i] = ops.add(r[i], ops.mul(a[i][j], v[j]));
  return r;
}

// Row reduction in place; returns the rank and records pivot columns.
template <class Ops>
size_t rref_in_place(DenseMat<typename Ops::Elem>& a, const Ops& ops,
                     std::vector<size_t>* pivot_cols = nullptr) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size(), rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pr = rank;
    while (pr < rows && ops.is_zero(a[pr][col])) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[rank]);
    typename Ops::Elem inv = ops.inv(a[rank][col]);
    for (size_t j = col; j < cols; ++j) a[rank][j] = ops.mul(a[rank][j], inv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || ops.is_zero(a[r][col])) continue;
      typename Ops::Elem f = a[r][col];
      for (size_t j = col; j < cols; ++j) a[r][j] = ops.sub(a[r][j], ops.mul(f, a[rank][j]));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class Ops>
size_t mat_rank(DenseMat<typename Ops::Elem> a, const Ops& ops) {
  return rref_in_place(a, ops);
}

// Basis of the right kernel: vectors v with A v = 0.
template <class Ops>
DenseMat<typename Ops::Elem> kernel_basis(DenseMat<typename Ops::Elem> a, const Ops& ops) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  std::vector<size_t> piv;
  rref_in_place(a, ops, &piv);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  DenseMat<typename Ops::Elem> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_piv[free_col]) continue;
    std::vector<typename Ops::Elem> v(cols, ops.zero());
    v[free_col] = ops.one();
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = ops.neg(a[r][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve A x = b; nullopt when inconsistent.  Free variables are set to zero.
template <class Ops>
std::optional<std::vector<typename Ops::Elem>> mat_solve(DenseMat<typename Ops::Elem> a,
                                                         const std::vector<typename Ops::Elem>& b,
                                                         const Ops& ops) {
  size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<size_t> piv;
  size_t rank = rref_in_place(a, ops, &piv);
  // pivot in the augmented column means inconsistency
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  for (size_t r = rank; r < rows; ++r)
    if (!ops.is_zero(a[r][cols])) return std::nullopt;
  std::vector<typename Ops::Elem> x(cols, ops.zero());
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

template <class Ops>
typename Ops::Elem mat_det(DenseMat<typename Ops::Elem> a, const Ops& ops) {
  size_t n = a.size();
  typename Ops::Elem det = ops.one();
  for (size_t col = 0; col < n; ++col) {
    size_t pr = col;
    while (pr < n && ops.is_zero(a[pr][col])) ++pr;
    if (pr == n) return ops.zero();
    if (pr != col) {
      std::swap(a[pr], a[col]);
      det = ops.neg(det);
    }
    det = ops.mul(det, a[col][col]);
    typename Ops::Elem inv = ops.inv(a[col][col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (ops.is_zero(a[r][col])) continue;
      typename Ops::Elem f = ops.mul(a[r][col], inv);
      for (size_t j = col; j < n; ++j) a[r][j] = ops.sub(a[r][j], ops.mul(f, a[col][j]));
    }
  }
  return det;
}

// Characteristic polynomial det(x I - A), coefficients low -> high, monic.
// Hessenberg reduction followed by the standard recurrence.
template <class Ops>
std::vector<typename Ops::Elem> charpoly(DenseMat<typename Ops::Elem> a, const Ops& ops) {
  using E = typename Ops::Elem;
  size_t n = a.size();
  // reduce to upper Hessenberg form by similarity
  for (size_t col = 0; n > 2 && col < n - 2; ++col) {
    size_t pr = col + 1;
    while (pr < n && ops.is_zero(a[pr][col])) ++pr;
    if (pr == n) continue;
    if (pr != col + 1) {
      std::swap(a[pr], a[col + 1]);
      for (size_t i = 0; i < n; ++i) std::swap(a[i][pr], a[i][col + 1]);
    }
    E inv = ops.inv(a[col + 1][col]);
    for (size_t r = col + 2; r < n; ++r) {
      if (ops.is_zero(a[r][col])) continue;
      E f = ops.mul(a[r][col], inv);
      for (size_t j = 0; j < n; ++j) a[r][j] = ops.sub(a[r][j], ops.mul(f, a[col + 1][j]));
      for (size_t i = 0; i < n; ++i) a[i][col + 1] = ops.add(a[i][col + 1], ops.mul(f, a[i][r]));
    }
  }
  // p_0 = 1, p_m = (x - h_mm) p_{m-1} - sum_i h_{i m} (prod subdiag) p_{i-1}
  std::vector<std::vector<E>> p(n + 1);
  p[0] = {ops.one()};
  for (size_t m = 1; m <= n; ++m) {
    const E& hmm = a[m - 1][m - 1];
    std::vector<E> cur(p[m - 1].size() + 1, ops.zero());
    for (size_t i = 0; i < p[m - 1].size(); ++i) {
      cur[i + 1] = ops.add(cur[i + 1], p[m - 1][i]);
      cur[i] = ops.sub(cur[i], ops.mul(hmm, p[m - 1][i]));
    }
    E prod = ops.one();
    for (size_t i = m - 1; i >= 1; --i) {
      prod = ops.mul(prod, a[i][i - 1]);
      E coef = ops.mul(a[i - 1][m - 1], prod);
      if (!ops.is_zero(coef)) {
        for (size_t j = 0; j < p[i - 1].size(); ++j) cur[j] = ops.sub(cur[j], ops.mul(coef, p[i - 1][j]));
      }
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

template <class Ops>
typename Ops::Elem mat_trace(const DenseMat<typename Ops::Elem>& a, const Ops& ops) {
  typename Ops::Elem t = ops.zero();
  for (size_t i = 0; i < a.size(); ++i) t = ops.add(t, a[i][i]);
  return t;
}

}  // namespace charlift
