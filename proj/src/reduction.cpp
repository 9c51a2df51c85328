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

#include "charlift/reduction.hpp"

#include <algorithm>

namespace charlift {

namespace {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / gcd_u64(a, b) * b; }

std::vector<std::pair<uint64_t, uint64_t>> prime_power_parts(uint64_t n) {
  std::vector<std::pair<uint64_t, uint64_t>> parts;  // (prime, prime^e)
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      uint64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      parts.emplace_back(p, q);
    }
  }
  if (n > 1) parts.emplace_back(n, n);
  return parts;
}

// x with x = a mod m, x = b mod n, gcd(m, n) = 1
uint64_t crt(uint64_t a, uint64_t m, uint64_t b, uint64_t n) {
  // invert m mod n
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(n), newr = static_cast<int64_t>(m % n);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(n);
  uint64_t diff = (b + n - a % n) % n;
  uint64_t x = a + m * ((diff * static_cast<uint64_t>(t)) % n);
  return x % (m * n);
}

}  // namespace

uint32_t ReductionContext::mult_order(uint32_t ell, uint64_t n) {
  if (n <= 1) return 1;
  if (gcd_u64(ell, n) != 1) throw std::domain_error("mult_order: arguments not coprime");
  uint64_t x = ell % n;
  uint32_t k = 1;
  while (x != 1) {
    x = (x * ell) % n;
    ++k;
  }
  return k;
}

uint64_t ReductionContext::compatible_part(uint64_t M, uint32_t ell, uint32_t k) {
  uint64_t out = 1;
  for (auto [p, q] : prime_power_parts(M)) {
    // largest power of p dividing M whose torsion fits in F_{ell^k}
    uint64_t best = 1;
    for (uint64_t e = p; e <= q; e *= p) {
      if (k % mult_order(ell, e) == 0) best = e;
      if (e > q / p) break;
    }
    out *= best;
  }
  return out;
}

ReductionContext::ReductionContext(uint32_t ell, uint64_t M, uint64_t base_conductor) : ell_(ell), M_(M) {
  if (M % ell == 0) throw std::domain_error("ReductionContext: conductor must be prime to ell");
  if (base_conductor == 0 || M % base_conductor != 0)
    throw std::domain_error("ReductionContext: base conductor must divide M");
  uint32_t k0 = 1;
  for (auto [p, q] : prime_power_parts(base_conductor)) {
    (void)p;
    k0 = static_cast<uint32_t>(lcm_u64(k0, mult_order(ell, q)));
  }
  Level lvl;
  lvl.F = FqField::get(ell, k0);
  lvl.Mi = compatible_part(M, ell, k0);
  lvl.zeta = lvl.Mi == 1 ? lvl.F->one() : lvl.F->element_of_order(lvl.Mi);
  chain_.push_back(std::move(lvl));
}

const FqField* ReductionContext::rep_field() const { return chain_.front().F.get(); }

size_t ReductionContext::level_count() const {
  std::lock_guard<std::mutex> lk(mu_);
  return chain_.size();
}

const FqField* ReductionContext::field_at(size_t level) const {
  std::lock_guard<std::mutex> lk(mu_);
  return chain_.at(level).F.get();
}

size_t ReductionContext::level_of(const FqField* f) const {
  std::lock_guard<std::mutex> lk(mu_);
  for (size_t i = 0; i < chain_.size(); ++i)
    if (chain_[i].F.get() == f) return i;
  throw std::domain_error("level_of: field is not part of this context");
}

void ReductionContext::push_level(uint32_t k_new) const {
  // caller holds the lock
  const Level& top = chain_.back();
  Level lvl;
  lvl.F = FqField::get(ell_, k_new);
  lvl.emb_prev = lvl.F->embedding_of(*top.F);
  lvl.Mi = compatible_part(M_, ell_, k_new);
  if (top.Mi == 1) {
    lvl.zeta = lvl.Mi == 1 ? lvl.F->one() : lvl.F->element_of_order(lvl.Mi);
  } else {
    FqElem g = lvl.F->element_of_order(lvl.Mi);
    FqElem zt = apply_embedding(lvl.emb_prev, top.zeta);
    // g^{Mi/Mtop} generates mu_{Mtop}; find t with (g^{Mi/Mtop})^t = zt
    FqElem h = g.pow(BigInt(lvl.Mi / top.Mi));
    uint64_t t = 0;
    FqElem cur = lvl.F->one();
    bool found = false;
    for (uint64_t j = 0; j < top.Mi; ++j) {
      if (cur == zt) {
        t = j;
        found = true;
        break;
      }
      cur = cur * h;
    }
    if (!found) throw std::logic_error("push_level: discrete log for compatibility failed");
    // s = t mod Mtop, s = 1 mod (coprime complement), so that zeta = g^s has
    // exact order Mi and restricts to the previous designated root.
    uint64_t comp = lvl.Mi;
    uint64_t mtop_sat = 1;
    for (auto [p, q] : prime_power_parts(lvl.Mi)) {
      (void)q;
      if (top.Mi % p == 0) mtop_sat *= q;
    }
    comp = lvl.Mi / mtop_sat;
    // t is a unit mod Mtop; lift it to a unit mod mtop_sat compatible with t
    // mod Mtop by choosing among t + j*Mtop.
    uint64_t s_part = t % mtop_sat;
    for (uint64_t j = 0; j < mtop_sat / std::max<uint64_t>(top.Mi, 1) + 1; ++j) {
      uint64_t cand = (t + j * top.Mi) % mtop_sat;
      if (gcd_u64(cand, mtop_sat) == 1) {
        s_part = cand;
        break;
      }
    }
    uint64_t s = comp == 1 ? s_part : crt(s_part, mtop_sat, 1 % comp, comp);
    if (s == 0) s = lvl.Mi == 1 ? 0 : 1;
    lvl.zeta = g.pow(BigInt(s));
    // sanity: compatibility with the previous level
    if (!(lvl.zeta.pow(BigInt(lvl.Mi / top.Mi)) == zt))
      throw std::logic_error("push_level: designated root incompatible with chain");
  }
  chain_.push_back(std::move(lvl));
}

size_t ReductionContext::ensure_order(uint64_t d) const {
  if (d == 0 || M_ % d != 0)
    throw ContextTooSmallError("ensure_order: order " + std::to_string(d) +
                               " not registered in conductor " + std::to_string(M_));
  std::lock_guard<std::mutex> lk(mu_);
  for (size_t i = 0; i < chain_.size(); ++i)
    if (chain_[i].Mi % d == 0) return i;
  uint32_t k_new = static_cast<uint32_t>(lcm_u64(chain_.back().F->k(), mult_order(ell_, d)));
  push_level(k_new);
  if (chain_.back().Mi % d != 0) throw std::logic_error("ensure_order: level growth failed");
  return chain_.size() - 1;
}

FqElem ReductionContext::zeta_image(uint64_t d, size_t level) const {
  std::lock_guard<std::mutex> lk(mu_);
  const Level& lvl = chain_.at(level);
  if (lvl.Mi % d != 0) throw ContextTooSmallError("zeta_image: order not present at level");
  return lvl.zeta.pow(BigInt(lvl.Mi / d));
}

FqElem ReductionContext::embed(const FqElem& x, size_t to_level) const {
  std::lock_guard<std::mutex> lk(mu_);
  size_t from = SIZE_MAX;
  for (size_t i = 0; i < chain_.size(); ++i)
    if (chain_[i].F.get() == x.field()) {
      from = i;
      break;
    }
  if (from == SIZE_MAX) throw std::domain_error("embed: element not in a chain field");
  if (from > to_level) throw std::domain_error("embed: cannot embed downward");
  FqElem cur = x;
  for (size_t i = from + 1; i <= to_level; ++i) cur = apply_embedding(chain_[i].emb_prev, cur);
  return cur;
}

FqElem ReductionContext::reduce_rat(const Rat& r, size_t level) const {
  if (denominator(r) % ell_ == 0)
    throw NotEllIntegralError("reduce: denominator divisible by ell=" + std::to_string(ell_));
  uint64_t v = mod_reduce(r, ell_);
  const FqField* F = field_at(level);
  return F->from_int(static_cast<int64_t>(v));
}

FqElem ReductionContext::reduce_at(const Cyclotomic& z, size_t level) const {
  uint64_t m = z.conductor();
  FqElem zim = m == 1 ? field_at(level)->one() : zeta_image(m, level);
  FqElem acc = field_at(level)->zero();
  FqElem cur = field_at(level)->one();
  for (const Rat& c : z.coeffs()) {
    if (c != 0) acc = acc + cur * reduce_rat(c, level);
    cur = cur * zim;
  }
  return acc;
}

FqElem ReductionContext::reduce(const Cyclotomic& z) const {
  size_t level = ensure_order(z.conductor());
  return reduce_at(z, level);
}

bool ReductionContext::is_ell_integral(const Cyclotomic& z) const {
  if (M_ % z.conductor() != 0) return false;
  for (const Rat& c : z.coeffs())
    if (denominator(c) % ell_ == 0) return false;
  return true;
}

Cyclotomic ReductionContext::teich_lift(const FqElem& x) const {
  if (x.is_zero()) throw std::domain_error("teich_lift: zero has no Teichmuller lift");
  size_t level = level_of(x.field());
  uint64_t Mi;
  FqElem zeta;
  {
    std::lock_guard<std::mutex> lk(mu_);
    Mi = chain_[level].Mi;
    zeta = chain_[level].zeta;
  }
  uint64_t d = x.order_dividing(Mi);
  FqElem zd = zeta.pow(BigInt(Mi / d));
  FqElem cur = x.field()->one();
  for (uint64_t j = 0; j < d; ++j) {
    if (cur == x) return Cyclotomic::root_of_unity(d, static_cast<int64_t>(j));
    cur = cur * zd;
  }
  throw std::logic_error("teich_lift: discrete log failed");
}

}  // namespace charlift
