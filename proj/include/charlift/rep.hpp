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

#include <map>

#include "charlift/group.hpp"
#include "charlift/matrix.hpp"
#include "charlift/reduction.hpp"

namespace charlift {

// Matrix representation of an enumerated finite subgroup quotient, with the
// whole multiplication table verified at construction.  Instantiated over
// F_q (mod-ell models) and over Q(zeta) (characteristic-zero companions).
template <class Ops>
class FiniteRep {
 public:
  using Elem = typename Ops::Elem;

  FiniteRep(Ops ops, Subgroup domain, std::vector<DenseMat<Elem>> gen_mats, uint64_t verify_cap = 600);

  const Subgroup& domain() const { return domain_; }
  const Ops& ops() const { return ops_; }
  uint32_t dim() const { return dim_; }

  const DenseMat<Elem>& at(const Mat2& g) const;
  Elem trace(const Mat2& g) const;

  bool fully_verified() const { return fully_verified_; }

 private:
  Ops ops_;
  Subgroup domain_;
  uint32_t dim_;
  std::map<uint64_t, DenseMat<Elem>> mats_;
  bool fully_verified_ = false;
};

using FqRep = FiniteRep<FqOps>;
using CycRep = FiniteRep<CycOps>;

// Brauer character value: sum of Teichmuller lifts of the eigenvalues of a
// matrix of finite multiplicative order dividing order_bound.
Cyclotomic brauer_value(const DenseMat<FqElem>& m, uint64_t order_bound, const ReductionContext& ctx);

// Class-function table of the Brauer character of rho (domain must be an
// ell'-group at its congruence depth).
struct LiftedCharacter {
  std::vector<std::pair<Mat2, Cyclotomic>> values;  // class representative -> value
  uint32_t dim = 0;
};

LiftedCharacter brauer_character(const FqRep& rho, const ReductionContext& ctx);

// Standard induced representation from an enumerated subgroup of finite
// index; dimension [J : H] * dim sigma.
template <class Ops>
FiniteRep<Ops> induce(const FiniteRep<Ops>& sigma, const Subgroup& target, uint64_t index_cap = 4096);

// Dimension of the H-fixed subspace: rank of the averaging idempotent when
// |H| is invertible in the coefficient field, kernel intersection otherwise.
template <class Ops>
uint64_t fixed_dim(const FiniteRep<Ops>& rho, const Subgroup& h);

// Kernel-intersection fixed dimension from explicit operator matrices.
template <class Ops>
uint64_t fixed_dim_kernel(const std::vector<DenseMat<typename Ops::Elem>>& mats, const Ops& ops);

// ---- template implementations ----

template <class Ops>
FiniteRep<Ops>::FiniteRep(Ops ops, Subgroup domain, std::vector<DenseMat<Elem>> gen_mats, uint64_t verify_cap)
    : ops_(ops), domain_(std::move(domain)) {
  const auto& gens = domain_.gens();
  if (gen_mats.size() != gens.size()) throw std::domain_error("FiniteRep: generator matrix count mismatch");
  if (gen_mats.empty()) throw std::domain_error("FiniteRep: no generators");
  dim_ = static_cast<uint32_t>(gen_mats[0].size());
  const LevelGroup& G = domain_.group();
  // breadth-first assignment of matrices along the closure
  std::map<uint64_t, DenseMat<Elem>> mats;
  mats[pack_mat(G.id())] = mat_identity(dim_, ops_);
  std::vector<Mat2> queue = {G.id()};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Mat2 cur = queue[qi];
    const DenseMat<Elem>& mcur = mats.at(pack_mat(cur));
    for (size_t t = 0; t < gens.size(); ++t) {
      Mat2 nxt = G.mul(cur, gens[t]);
      if (mats.count(pack_mat(nxt))) continue;
      mats[pack_mat(nxt)] = mat_mul(mcur, gen_mats[t], ops_);
      queue.push_back(nxt);
    }
  }
  // the multiplication-table check: rho(x) rho(y) = rho(xy) for all pairs.
  // This makes the BFS assignment well defined and a homomorphism.
  if (queue.size() <= verify_cap) {
    for (const Mat2& x : queue) {
      const auto& mx = mats.at(pack_mat(x));
      for (const Mat2& y : queue) {
        Mat2 xy = G.mul(x, y);
        DenseMat<Elem> prod = mat_mul(mx, mats.at(pack_mat(y)), ops_);
        if (prod != mats.at(pack_mat(xy)))
          throw std::domain_error("FiniteRep: generator matrices do not satisfy the group relations");
      }
    }
    fully_verified_ = true;
  } else {
    // sampled verification on a deterministic subset of pairs
    size_t stride = queue.size() / 23 + 1;
    for (size_t i = 0; i < queue.size(); i += stride) {
      for (size_t j = 0; j < queue.size(); j += stride) {
        Mat2 xy = G.mul(queue[i], queue[j]);
        DenseMat<Elem> prod = mat_mul(mats.at(pack_mat(queue[i])), mats.at(pack_mat(queue[j])), ops_);
        if (prod != mats.at(pack_mat(xy)))
          throw std::domain_error("FiniteRep: generator matrices do not satisfy the group relations");
      }
    }
  }
  mats_ = std::move(mats);
}

template <class Ops>
const DenseMat<typename Ops::Elem>& FiniteRep<Ops>::at(const Mat2& g) const {
  auto it = mats_.find(pack_mat(g));
  if (it == mats_.end()) throw std::domain_error("FiniteRep::at: element outside the domain");
  return it->second;
}

template <class Ops>
typename Ops::Elem FiniteRep<Ops>::trace(const Mat2& g) const {
  return mat_trace(at(g), ops_);
}

template <class Ops>
FiniteRep<Ops> induce(const FiniteRep<Ops>& sigma, const Subgroup& target, uint64_t index_cap) {
  const Subgroup& h = sigma.domain();
  const LevelGroup& G = target.group();
  if (&G != &h.group()) throw std::domain_error("induce: level mismatch");
  const auto& elems = target.elements();
  // right coset decomposition H\J: reps x with H x
  std::vector<Mat2> reps;
  std::map<uint64_t, size_t> coset_of;
  for (const Mat2& x : elems) {
    bool found = false;
    for (size_t i = 0; i < reps.size() && !found; ++i) {
      // x in H reps[i] <=> x reps[i]^{-1} in H
      if (h.contains(G.mul(x, G.inv(reps[i])))) {
        coset_of[pack_mat(x)] = i;
        found = true;
      }
    }
    if (!found) {
      if (reps.size() >= index_cap) throw std::length_error("induce: index exceeds cap");
      coset_of[pack_mat(x)] = reps.size();
      reps.push_back(x);
    }
  }
  size_t nc = reps.size();
  uint32_t ds = sigma.dim();
  const Ops& ops = sigma.ops();
  // matrix of each generator of the target in the basis {(coset i, e_j)}
  std::vector<DenseMat<typename Ops::Elem>> gen_mats;
  for (const Mat2& gen : target.gens()) {
    DenseMat<typename Ops::Elem> m(nc * ds, std::vector<typename Ops::Elem>(nc * ds, ops.zero()));
    for (size_t i = 0; i < nc; ++i) {
      // basis function h_{i,j} supported on H reps[i], (gen . h)(x) = h(x gen)
      // lands at coset q with reps[q] = reps[i] gen^{-1} H-shifted
      Mat2 target_pt = G.mul(reps[i], G.inv(gen));
      size_t q = coset_of.at(pack_mat(target_pt));
      // cocycle a = reps[q] gen reps[i]^{-1} in H
      Mat2 a = G.mul(G.mul(reps[q], gen), G.inv(reps[i]));
      const DenseMat<typename Ops::Elem>& block = sigma.at(a);
      for (uint32_t r = 0; r < ds; ++r)
        for (uint32_t c = 0; c < ds; ++c) m[q * ds + r][i * ds + c] = block[r][c];
    }
    gen_mats.push_back(std::move(m));
  }
  return FiniteRep<Ops>(ops, target, std::move(gen_mats));
}

template <class Ops>
uint64_t fixed_dim_kernel(const std::vector<DenseMat<typename Ops::Elem>>& mats, const Ops& ops) {
  if (mats.empty()) throw std::domain_error("fixed_dim_kernel: no operators");
  size_t n = mats[0].size();
  // stack (rho(h) - 1) for all generators and compute the kernel rank
  DenseMat<typename Ops::Elem> stacked;
  for (const auto& m : mats) {
    for (size_t r = 0; r < n; ++r) {
      std::vector<typename Ops::Elem> row = m[r];
      row[r] = ops.sub(row[r], ops.one());
      stacked.push_back(std::move(row));
    }
  }
  size_t rank = mat_rank(std::move(stacked), ops);
  return n - rank;
}

template <class Ops>
uint64_t fixed_dim(const FiniteRep<Ops>& rho, const Subgroup& h) {
  const auto& elems = h.elements();
  // averaging idempotent path when |H| is invertible in the field
  bool invertible = true;
  if constexpr (std::is_same_v<Ops, FqOps>) {
    invertible = (BigInt(elems.size()) % rho.ops().F->ell()) != 0;
  }
  if (invertible) {
    const Ops& ops = rho.ops();
    size_t n = rho.dim();
    DenseMat<typename Ops::Elem> avg(n, std::vector<typename Ops::Elem>(n, ops.zero()));
    for (const Mat2& x : elems) {
      const auto& m = rho.at(x);
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) avg[r][c] = ops.add(avg[r][c], m[r][c]);
    }
    typename Ops::Elem inv_order = ops.inv([&] {
      typename Ops::Elem e = ops.zero();
      for (size_t i = 0; i < elems.size(); ++i) e = ops.add(e, ops.one());
      return e;
    }());
    for (auto& row : avg)
      for (auto& x : row) x = ops.mul(x, inv_order);
    return mat_rank(std::move(avg), ops);
  }
  std::vector<DenseMat<typename Ops::Elem>> mats;
  for (const Mat2& g : h.gens()) mats.push_back(rho.at(g));
  return fixed_dim_kernel<Ops>(mats, rho.ops());
}

}  // namespace charlift
