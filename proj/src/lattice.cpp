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

#include "charlift/lattice.hpp"

#include <algorithm>

namespace charlift {

Rat residue_mod_p_power(const Rat& x, uint32_t p, long a) {
  if (x == 0) return Rat(0);
  // split denominator into p-power and prime-to-p parts
  BigInt den = denominator(x);
  long v = 0;
  BigInt dp = 1;
  while (den % p == 0) {
    den /= p;
    dp *= p;
    ++v;
  }
  if (a + v <= 0) return Rat(0);
  BigInt mod = pow_int(p, static_cast<unsigned>(a + v));
  // x = num / (den * p^v); invert the prime-to-p part mod p^{a+v}
  BigInt num = numerator(x) % mod;
  if (num < 0) num += mod;
  if (den != 1) {
    BigInt inv = BigInt(mod_reduce(Rat(1, den), static_cast<uint64_t>(mod)));
    num = (num * inv) % mod;
  }
  return Rat(num, dp);
}

namespace {

// Column-style Hermite reduction over Z_(p): returns the canonical d x d
// upper-triangular basis from a d x m full-row-rank matrix of columns.
DenseMat<Rat> hnf_columns(uint32_t p, DenseMat<Rat> a) {
  size_t d = a.size();
  size_t m = a[0].size();
  // process rows bottom-up, selecting the minimal-valuation pivot
  size_t next_col = m;  // columns [next_col, m) are finished pivots
  for (size_t row = d; row-- > 0;) {
    size_t limit = next_col;
    long best_val = 0;
    size_t best = SIZE_MAX;
    for (size_t j = 0; j < limit; ++j) {
      if (a[row][j] == 0) continue;
      long v = val_p(a[row][j], p);
      if (best == SIZE_MAX || v < best_val) {
        best = j;
        best_val = v;
      }
    }
    if (best == SIZE_MAX) throw std::domain_error("Lattice: basis does not have full rank");
    --next_col;
    // move pivot column into place
    for (size_t i = 0; i < d; ++i) std::swap(a[i][best], a[i][next_col]);
    // normalize pivot to p^v by dividing the column by its unit part
    Rat unit = a[row][next_col] / pow_rat(Rat(p), best_val);
    for (size_t i = 0; i < d; ++i) a[i][next_col] /= unit;
    // clear this row in the remaining columns
    for (size_t j = 0; j < next_col; ++j) {
      if (a[row][j] == 0) continue;
      Rat f = a[row][j] / a[row][next_col];  // valuation >= 0
      for (size_t i = 0; i < d; ++i) a[i][j] -= f * a[i][next_col];
    }
  }
  // keep the last d columns, now upper triangular with pivot rows matching
  DenseMat<Rat> h(d, std::vector<Rat>(d, Rat(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) h[i][j] = a[i][next_col + j];
  // reduce entries right of each pivot modulo the pivot, bottom-up so the
  // column operations only disturb rows that are reduced later
  for (size_t i = d; i-- > 0;) {
    long piv_val = val_p(h[i][i], p);
    for (size_t j = i + 1; j < d; ++j) {
      if (h[i][j] == 0) continue;
      Rat r = residue_mod_p_power(h[i][j], p, piv_val);
      Rat f = (h[i][j] - r) / h[i][i];  // in Z_(p)
      for (size_t t = 0; t <= i; ++t) h[t][j] -= f * h[t][i];
    }
  }
  return h;
}

}  // namespace

Lattice::Lattice(uint32_t p, DenseMat<Rat> basis_columns) : p_(p), d_(static_cast<uint32_t>(basis_columns.size())) {
  if (d_ == 0) throw std::domain_error("Lattice: empty basis");
  h_ = hnf_columns(p, std::move(basis_columns));
  det_val_ = 0;
  for (uint32_t i = 0; i < d_; ++i) det_val_ += val_p(h_[i][i], p_);
}

Lattice Lattice::standard(uint32_t p, uint32_t d) {
  RatOps ops;
  return Lattice(p, mat_identity(d, ops));
}

Lattice Lattice::scaled_standard(uint32_t p, uint32_t d, long e) {
  DenseMat<Rat> b(d, std::vector<Rat>(d, Rat(0)));
  Rat s = pow_rat(Rat(p), e);
  for (uint32_t i = 0; i < d; ++i) b[i][i] = s;
  return Lattice(p, std::move(b));
}

bool Lattice::contains(const std::vector<Rat>& x) const {
  // back-substitution against the upper-triangular basis
  std::vector<Rat> y = x;
  for (size_t i = d_; i-- > 0;) {
    Rat c = y[i] / h_[i][i];
    if (c != 0 && val_p(c, p_) < 0) return false;
    for (size_t t = 0; t < i; ++t) y[t] -= c * h_[t][i];
  }
  return true;
}

bool Lattice::contains_lattice(const Lattice& o) const {
  for (uint32_t j = 0; j < d_; ++j) {
    std::vector<Rat> col(d_);
    for (uint32_t i = 0; i < d_; ++i) col[i] = o.h_[i][j];
    if (!contains(col)) return false;
  }
  return true;
}

Lattice Lattice::scaled(long e) const {
  DenseMat<Rat> b = h_;
  Rat s = pow_rat(Rat(p_), e);
  for (auto& row : b)
    for (auto& x : row) x *= s;
  return Lattice(p_, std::move(b));
}

Lattice Lattice::sum(const Lattice& a, const Lattice& b) {
  if (a.p_ != b.p_ || a.d_ != b.d_) throw std::domain_error("Lattice::sum: mismatched ambient spaces");
  DenseMat<Rat> m(a.d_, std::vector<Rat>(2 * a.d_));
  for (uint32_t i = 0; i < a.d_; ++i) {
    for (uint32_t j = 0; j < a.d_; ++j) {
      m[i][j] = a.h_[i][j];
      m[i][a.d_ + j] = b.h_[i][j];
    }
  }
  return Lattice(a.p_, std::move(m));
}

Lattice Lattice::with_vector(const std::vector<Rat>& x) const {
  DenseMat<Rat> m(d_, std::vector<Rat>(d_ + 1));
  for (uint32_t i = 0; i < d_; ++i) {
    for (uint32_t j = 0; j < d_; ++j) m[i][j] = h_[i][j];
    m[i][d_] = x[i];
  }
  return Lattice(p_, std::move(m));
}

DenseMat<Rat> rat_mat_transpose(const DenseMat<Rat>& a) {
  DenseMat<Rat> t(a[0].size(), std::vector<Rat>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

DenseMat<Rat> rat_mat_inverse(const DenseMat<Rat>& a) {
  size_t n = a.size();
  RatOps ops;
  DenseMat<Rat> aug(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  size_t rank = rref_in_place(aug, ops);
  if (rank != n) throw std::domain_error("rat_mat_inverse: singular matrix");
  DenseMat<Rat> inv(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Lattice Lattice::dual(const DenseMat<Rat>& pairing, long c) const {
  // { X : B^T P^T X in p^c Z^d }  =>  X in p^c (B^T P^T)^{-1} Z^d
  DenseMat<Rat> bt = rat_mat_transpose(h_);
  DenseMat<Rat> pt = rat_mat_transpose(pairing);
  RatOps ops;
  DenseMat<Rat> m = mat_mul(bt, pt, ops);
  DenseMat<Rat> mi = rat_mat_inverse(m);
  Rat s = pow_rat(Rat(p_), c);
  for (auto& row : mi)
    for (auto& x : row) x *= s;
  return Lattice(p_, std::move(mi));
}

Lattice Lattice::intersect(const Lattice& a, const Lattice& b) {
  RatOps ops;
  DenseMat<Rat> id = mat_identity(a.d_, ops);
  Lattice da = a.dual(id, 0), db = b.dual(id, 0);
  return Lattice::sum(da, db).dual(id, 0);
}

uint64_t Lattice::index_in(const Lattice& super) const {
  long diff = det_val_ - super.det_val_;
  if (diff < 0) throw std::domain_error("index_in: not a sublattice by determinant");
  uint64_t idx = 1;
  for (long i = 0; i < diff; ++i) idx *= p_;
  return idx;
}

std::vector<std::vector<Rat>> Lattice::quotient_transversal(const Lattice& sub, uint64_t cap) const {
  if (!contains_lattice(sub)) throw std::domain_error("quotient_transversal: not a sublattice");
  uint64_t idx = sub.index_in(*this);
  if (idx > cap) throw std::length_error("quotient_transversal: index exceeds cap");
  // M = H^{-1} * H_sub has entries in Z_(p); Smith reduction M = L^{-1} D C
  RatOps ops;
  DenseMat<Rat> m = mat_mul(rat_mat_inverse(h_), sub.h_, ops);
  size_t n = d_;
  DenseMat<Rat> linv = mat_identity(n, ops);
  // invariant: original M = linv * current m * (column ops absorbed)
  for (size_t k = 0; k < n; ++k) {
    while (true) {
      // find min valuation entry in the trailing block
      size_t bi = SIZE_MAX, bj = SIZE_MAX;
      long bv = 0;
      for (size_t i = k; i < n; ++i)
        for (size_t j = k; j < n; ++j) {
          if (m[i][j] == 0) continue;
          long v = val_p(m[i][j], p_);
          if (bi == SIZE_MAX || v < bv) {
            bi = i;
            bj = j;
            bv = v;
          }
        }
      if (bi == SIZE_MAX) throw std::domain_error("quotient_transversal: singular index matrix");
      if (bi != k) {
        std::swap(m[bi], m[k]);
        for (size_t i = 0; i < n; ++i) std::swap(linv[i][bi], linv[i][k]);
      }
      if (bj != k)
        for (size_t i = 0; i < n; ++i) std::swap(m[i][bj], m[i][k]);
      // scale the pivot row to make the pivot exactly p^bv
      Rat unit = m[k][k] / pow_rat(Rat(p_), bv);
      for (size_t j = k; j < n; ++j) m[k][j] /= unit;
      for (size_t i = 0; i < n; ++i) linv[i][k] *= unit;
      // clear column below and row to the right
      bool clean = true;
      for (size_t i = k + 1; i < n; ++i) {
        if (m[i][k] == 0) continue;
        Rat f = m[i][k] / m[k][k];
        for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        for (size_t t = 0; t < n; ++t) linv[t][k] += f * linv[t][i];
      }
      for (size_t j = k + 1; j < n; ++j) {
        if (m[k][j] == 0) continue;
        Rat f = m[k][j] / m[k][k];
        for (size_t i = k; i < n; ++i) m[i][j] -= f * m[i][k];
      }
      // pivot must divide the rest of the block for Smith form
      for (size_t i = k + 1; i < n && clean; ++i)
        for (size_t j = k + 1; j < n && clean; ++j)
          if (m[i][j] != 0 && val_p(m[i][j], p_) < bv) clean = false;
      if (clean) break;
    }
  }
  // diagonal p-powers; enumerate residues
  std::vector<uint64_t> diag(n);
  for (size_t i = 0; i < n; ++i) {
    long v = val_p(m[i][i], p_);
    uint64_t q = 1;
    for (long t = 0; t < v; ++t) q *= p_;
    diag[i] = q;
  }
  std::vector<std::vector<Rat>> reps;
  reps.reserve(idx);
  std::vector<uint64_t> counter(n, 0);
  while (true) {
    std::vector<Rat> coord(n, Rat(0));
    for (size_t i = 0; i < n; ++i) coord[i] = Rat(counter[i]);
    // x = H * linv * coord
    std::vector<Rat> mid = mat_vec(linv, coord, ops);
    std::vector<Rat> x = mat_vec(h_, mid, ops);
    reps.push_back(std::move(x));
    size_t i = 0;
    while (i < n && ++counter[i] == diag[i]) {
      counter[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return reps;
}

std::vector<Rat> Lattice::reduce_point(const std::vector<Rat>& x) const {
  // coordinates z = H^{-1} x, canonical p-adic fractional part per entry by
  // back substitution, then map forward again
  std::vector<Rat> y = x;
  std::vector<Rat> z(d_, Rat(0));
  for (size_t i = d_; i-- > 0;) {
    Rat c = y[i] / h_[i][i];
    z[i] = c;
    for (size_t t = 0; t < i; ++t) y[t] -= c * h_[t][i];
  }
  std::vector<Rat> frac(d_);
  for (size_t i = 0; i < d_; ++i) {
    Rat r = z[i];
    // canonical representative of r mod Z_(p): p-power-denominator residue
    if (r == 0 || val_p(r, p_) >= 0) {
      frac[i] = 0;
    } else {
      long v = -val_p(r, p_);
      frac[i] = residue_mod_p_power(r, p_, 0);
      (void)v;
    }
  }
  RatOps ops;
  return mat_vec(h_, frac, ops);
}

}  // namespace charlift
