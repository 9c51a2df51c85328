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

#include "charlift/weil.hpp"

#include <algorithm>

namespace charlift {

uint32_t least_nonresidue(uint32_t p) {
  for (uint32_t e = 2; e < p; ++e) {
    bool sq = false;
    for (uint32_t x = 1; x < p; ++x)
      if (x * x % p == e) {
        sq = true;
        break;
      }
    if (!sq) return e;
  }
  throw std::domain_error("least_nonresidue: p must be an odd prime");
}

namespace {

// F_{p^2} = F_p[s]/(s^2 - eps)
struct E2 {
  uint32_t x0 = 0, x1 = 0;
  bool operator==(const E2& o) const { return x0 == o.x0 && x1 == o.x1; }
};

struct E2Field {
  uint32_t p, eps;
  E2 mul(const E2& a, const E2& b) const {
    return E2{static_cast<uint32_t>((uint64_t(a.x0) * b.x0 + uint64_t(eps) * a.x1 % p * b.x1) % p),
              static_cast<uint32_t>((uint64_t(a.x0) * b.x1 + uint64_t(a.x1) * b.x0) % p)};
  }
  E2 conj(const E2& a) const { return E2{a.x0, static_cast<uint32_t>((p - a.x1) % p)}; }
  uint32_t norm(const E2& a) const {
    return static_cast<uint32_t>((uint64_t(a.x0) * a.x0 % p + uint64_t(p) * p - uint64_t(eps) * a.x1 % p * a.x1 % p) % p);
  }
  uint32_t tr(const E2& a) const { return 2 * a.x0 % p; }
  E2 inv(const E2& a) const {
    uint32_t n = norm(a);
    uint64_t ninv = mod_reduce(Rat(1, static_cast<long>(n)), p);
    E2 c = conj(a);
    return E2{static_cast<uint32_t>(c.x0 * ninv % p), static_cast<uint32_t>(c.x1 * ninv % p)};
  }
};

uint64_t unit_inverse(uint64_t a, uint64_t p) { return mod_reduce(Rat(1, static_cast<long>(a)), p); }

}  // namespace

CuspidalSigma build_cuspidal(uint32_t p, uint64_t theta_order, int half, const ReductionContext& ctx) {
  if (p == 2) throw std::domain_error("build_cuspidal: p must be odd");
  if (theta_order < 2 || (p + 1) % theta_order != 0)
    throw std::domain_error("build_cuspidal: theta order must divide p+1 and exceed 1");
  if (half != 0 && theta_order != 2)
    throw std::domain_error("build_cuspidal: halves exist only for the order-2 character");
  E2Field E{p, least_nonresidue(p)};

  // norm-one torus E^1 and a generator
  std::vector<E2> torus;
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b)
      if (E.norm(E2{a, b}) == 1) torus.push_back(E2{a, b});
  if (torus.size() != p + 1) throw std::logic_error("build_cuspidal: norm-one torus has wrong size");
  E2 gen{};
  bool found_gen = false;
  for (const E2& t : torus) {
    E2 cur = t;
    uint32_t ord = 1;
    while (!(cur == E2{1, 0})) {
      cur = E.mul(cur, t);
      ++ord;
    }
    if (ord == p + 1) {
      gen = t;
      found_gen = true;
      break;
    }
  }
  if (!found_gen) throw std::logic_error("build_cuspidal: norm-one torus is not cyclic?");
  auto torus_dlog = [&](const E2& e) {
    E2 cur{1, 0};
    for (uint32_t j = 0; j <= p + 1; ++j) {
      if (cur == e) return j;
      cur = E.mul(cur, gen);
    }
    throw std::logic_error("build_cuspidal: element outside the norm-one torus");
  };
  auto theta = [&](const E2& e) {
    uint32_t j = torus_dlog(e);
    return Cyclotomic::root_of_unity(theta_order, static_cast<int64_t>(j % theta_order));
  };

  // base points x_xi with N(x_xi) = xi, xi in F_p^x (least in lex order)
  std::vector<E2> base(p);  // index by xi, entry 0 unused
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b) {
      uint32_t n = E.norm(E2{a, b});
      if (n != 0 && base[n] == E2{0, 0}) base[n] = E2{a, b};
    }
  std::vector<uint32_t> xis;
  for (uint32_t xi = 1; xi < p; ++xi) xis.push_back(xi);
  auto idx_of = [&](uint32_t xi) { return static_cast<size_t>(xi - 1); };

  auto psi = [&](uint32_t v) { return Cyclotomic::root_of_unity(p, static_cast<int64_t>(v % p)); };

  // gauss factor gamma = (1/p) sum_{x in E} psi(N(x)); for the anisotropic
  // form this is -1, but compute it exactly
  Cyclotomic gamma;
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b) gamma += psi(E.norm(E2{a, b}));
  gamma = gamma * Rat(1, static_cast<long>(p));
  if (!(gamma * gamma == Cyclotomic(1)))
    throw std::logic_error("build_cuspidal: gauss factor is not a sign");

  size_t n = p - 1;
  CycOps cops;
  // u(1): diagonal psi(xi)
  DenseMat<Cyclotomic> mu(n, std::vector<Cyclotomic>(n, Cyclotomic()));
  for (uint32_t xi : xis) mu[idx_of(xi)][idx_of(xi)] = psi(xi);
  // t(r) for r the least primitive root mod p
  uint32_t r = 0;
  for (uint32_t cand = 2; cand < p; ++cand) {
    uint32_t ord = 1;
    uint64_t cur = cand % p;
    while (cur != 1) {
      cur = cur * cand % p;
      ++ord;
    }
    if (ord == p - 1) {
      r = cand;
      break;
    }
  }
  uint64_t rinv = unit_inverse(r, p);
  uint64_t rinv2 = rinv * rinv % p;
  DenseMat<Cyclotomic> mt(n, std::vector<Cyclotomic>(n, Cyclotomic()));
  for (uint32_t xi : xis) {
    uint32_t target = static_cast<uint32_t>(rinv2 * xi % p);
    // e0 = r^{-1} x_xi / x_{target}
    E2 scaled{static_cast<uint32_t>(rinv * base[xi].x0 % p), static_cast<uint32_t>(rinv * base[xi].x1 % p)};
    E2 e0 = E.mul(scaled, E.inv(base[target]));
    mt[idx_of(target)][idx_of(xi)] = theta(e0);
  }
  // w: c_{eta,xi} = gamma (1/p) sum_{e in E^1} theta(e)^{-1} psi(Tr(x_eta conj(e x_xi)))
  DenseMat<Cyclotomic> mw(n, std::vector<Cyclotomic>(n, Cyclotomic()));
  for (uint32_t xi : xis) {
    for (uint32_t eta : xis) {
      Cyclotomic acc;
      for (const E2& e : torus) {
        E2 y = E.conj(E.mul(e, base[xi]));
        acc += theta(e).conj() * psi(E.tr(E.mul(base[eta], y)));
      }
      Cyclotomic val = gamma * acc * Rat(1, static_cast<long>(p));
      if (!val.is_zero()) mw[idx_of(eta)][idx_of(xi)] = val;
    }
  }

  auto level1 = std::make_shared<LevelGroup>(p, 1);
  Mat2 gu = level1->reduce(1, 1, 0, 1);
  Mat2 gt = level1->reduce(static_cast<int64_t>(r), 0, 0, static_cast<int64_t>(rinv));
  Mat2 gw = level1->reduce(0, 1, -1, 0);
  Subgroup dom(level1, {gu, gt, gw}, "SL2(F" + std::to_string(p) + ")");

  CuspidalSigma out;
  out.p = p;
  out.theta_order = theta_order;
  out.half = half;

  std::vector<DenseMat<Cyclotomic>> gen_mats = {mu, mt, mw};
  if (half != 0) {
    // T b_xi = theta(e0) b_xi with e0 = conj(x_xi) x_xi^{-1}; split the basis
    std::vector<size_t> keep;
    for (uint32_t xi : xis) {
      E2 e0 = E.mul(E.conj(base[xi]), E.inv(base[xi]));
      Cyclotomic tv = theta(e0);
      bool plus = tv == Cyclotomic(1);
      if (!plus && !(tv == Cyclotomic(-1)))
        throw std::logic_error("build_cuspidal: intertwiner eigenvalue is not a sign");
      if ((half > 0) == plus) keep.push_back(idx_of(xi));
    }
    if (keep.empty()) throw std::logic_error("build_cuspidal: empty half");
    std::vector<DenseMat<Cyclotomic>> sub;
    for (const auto& m : gen_mats) {
      DenseMat<Cyclotomic> s(keep.size(), std::vector<Cyclotomic>(keep.size()));
      for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j) s[i][j] = m[keep[i]][keep[j]];
      // the complement block must vanish for the half to be well defined
      for (size_t i = 0; i < n; ++i) {
        if (std::find(keep.begin(), keep.end(), i) != keep.end()) continue;
        for (size_t j : keep)
          if (!m[i][j].is_zero()) throw std::logic_error("build_cuspidal: intertwiner does not split the slice");
      }
      sub.push_back(std::move(s));
    }
    gen_mats = std::move(sub);
  }
  out.dim = static_cast<uint32_t>(gen_mats[0].size());

  // construction verifies the SL2(F_p) multiplication table: exhaustively in
  // the reduced model below, on a sampled grid for the cyclotomic companion
  // (the unit tests compare its trace character against the Brauer character
  // of the reduction on every element, which closes the gap)
  out.char0 = std::make_shared<CycRep>(cops, dom, gen_mats, 30);

  // cuspidality: no nonzero vector fixed by the upper unipotent <u(1)>
  Subgroup upper(level1, {gu}, "U");
  if (fixed_dim(*out.char0, upper) != 0)
    throw std::logic_error("build_cuspidal: slice has unipotent-fixed vectors");

  // reduce entrywise at the representation level of the context
  std::vector<DenseMat<FqElem>> red;
  const FqField* F = ctx.rep_field();
  FqOps fops(F);
  for (const auto& m : gen_mats) {
    DenseMat<FqElem> s(out.dim, std::vector<FqElem>(out.dim, F->zero()));
    for (size_t i = 0; i < out.dim; ++i)
      for (size_t j = 0; j < out.dim; ++j) s[i][j] = ctx.reduce_at(m[i][j], 0);
    red.push_back(std::move(s));
  }
  out.reduced = std::make_shared<FqRep>(fops, dom, red);
  if (fixed_dim(*out.reduced, upper) != 0)
    throw std::logic_error("build_cuspidal: reduction has unipotent-fixed vectors");
  return out;
}

}  // namespace charlift
