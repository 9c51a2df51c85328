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

#include "charlift/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace charlift {

namespace {

// dense polynomial arithmetic over F_ell, coefficients low->high
using Poly = std::vector<uint8_t>;

void ptrim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, uint32_t ell) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + uint32_t(a[i]) * b[j]) % ell;
  }
  Poly r(acc.begin(), acc.end());
  ptrim(r);
  return r;
}

Poly pmod(Poly a, const Poly& m, uint32_t ell) {
  ptrim(a);
  // m monic
  while (a.size() >= m.size()) {
    uint32_t f = a.back();
    size_t shift = a.size() - m.size();
    if (f) {
      for (size_t i = 0; i < m.size(); ++i) {
        uint32_t v = (uint32_t(a[shift + i]) + ell * ell - f * m[i] % ell) % ell;
        a[shift + i] = static_cast<uint8_t>(v);
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

Poly padd(Poly a, const Poly& b, uint32_t ell) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<uint8_t>((a[i] + b[i]) % ell);
  ptrim(a);
  return a;
}

Poly psub(Poly a, const Poly& b, uint32_t ell) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<uint8_t>((a[i] + ell - b[i]) % ell);
  ptrim(a);
  return a;
}

Poly ppowmod(Poly base, BigInt e, const Poly& m, uint32_t ell) {
  Poly r = {1};
  base = pmod(std::move(base), m, ell);
  while (e > 0) {
    if ((e & 1) != 0) r = pmod(pmul(r, base, ell), m, ell);
    base = pmod(pmul(base, base, ell), m, ell);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, uint32_t ell) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  // normalize monic
  if (!a.empty() && a.back() != 1) {
    // invert leading coefficient in the prime field
    uint32_t lead = a.back(), inv = 1;
    for (uint32_t i = 1; i < ell; ++i)
      if (lead * i % ell == 1) {
        inv = i;
        break;
      }
    for (auto& c : a) c = static_cast<uint8_t>(c * inv % ell);
  }
  return a;
}

std::vector<uint32_t> prime_factors_u32(uint32_t n) {
  std::vector<uint32_t> ps;
  for (uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_irreducible(const Poly& f, uint32_t ell) {
  // f monic of degree k: irreducible iff x^{ell^k} = x mod f and
  // gcd(x^{ell^{k/r}} - x, f) = 1 for every prime r | k.
  uint32_t k = static_cast<uint32_t>(f.size() - 1);
  Poly x = {0, 1};
  Poly xq = ppowmod(x, boost::multiprecision::pow(BigInt(ell), k), f, ell);
  if (!psub(xq, x, ell).empty()) return false;
  for (uint32_t r : prime_factors_u32(k)) {
    Poly xr = ppowmod(x, boost::multiprecision::pow(BigInt(ell), k / r), f, ell);
    Poly g = pgcd(psub(xr, x, ell), f, ell);
    if (g.size() != 1) return false;
  }
  return true;
}

std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const FqField>> g_field_cache;
std::mutex g_field_mutex;

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

FqField::FqField(uint32_t ell, uint32_t k) : ell_(ell), k_(k) {
  if (k == 1) {
    mod_ = {0, 1};  // x, unused beyond degree bookkeeping
    return;
  }
  // lexicographically least monic irreducible of degree k: iterate the
  // constant-to-high coefficient vector as base-ell digits
  BigInt count = boost::multiprecision::pow(BigInt(ell), k);
  for (BigInt n = 0; n < count; ++n) {
    Poly f(k + 1, 0);
    BigInt t = n;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<uint8_t>(uint32_t(t % ell));
      t /= ell;
    }
    f[k] = 1;
    if (is_irreducible(f, ell)) {
      mod_ = f;
      return;
    }
  }
  throw std::logic_error("FqField: no irreducible found");
}

std::shared_ptr<const FqField> FqField::get(uint32_t ell, uint32_t k) {
  std::lock_guard<std::mutex> lk(g_field_mutex);
  auto key = std::make_pair(ell, k);
  auto it = g_field_cache.find(key);
  if (it != g_field_cache.end()) return it->second;
  auto f = std::shared_ptr<const FqField>(new FqField(ell, k));
  g_field_cache.emplace(key, f);
  return f;
}

BigInt FqField::card() const { return boost::multiprecision::pow(BigInt(ell_), k_); }

FqElem FqField::zero() const { return FqElem(this, {}); }

FqElem FqField::one() const { return FqElem(this, {1}); }

FqElem FqField::from_int(int64_t n) const {
  int64_t v = n % static_cast<int64_t>(ell_);
  if (v < 0) v += ell_;
  if (v == 0) return zero();
  return FqElem(this, {static_cast<uint8_t>(v)});
}

FqElem FqField::element(std::vector<uint8_t> coeffs) const {
  if (coeffs.size() > k_) {
    Poly r = pmod(std::move(coeffs), mod_, ell_);
    return FqElem(this, std::move(r));
  }
  for (auto& c : coeffs) c = static_cast<uint8_t>(c % ell_);
  ptrim(coeffs);
  return FqElem(this, std::move(coeffs));
}

FqElem FqField::nth_element(const BigInt& n) const {
  Poly c;
  BigInt t = n;
  while (t > 0 && c.size() < k_) {
    c.push_back(static_cast<uint8_t>(uint32_t(t % ell_)));
    t /= ell_;
  }
  ptrim(c);
  return FqElem(this, std::move(c));
}

bool FqElem::is_zero() const { return c_.empty(); }

bool FqElem::operator==(const FqElem& o) const { return f_ == o.f_ && c_ == o.c_; }

bool FqElem::operator<(const FqElem& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = n; i-- > 0;) {
    uint8_t a = i < c_.size() ? c_[i] : 0;
    uint8_t b = i < o.c_.size() ? o.c_[i] : 0;
    if (a != b) return a < b;
  }
  return false;
}

FqElem FqElem::operator+(const FqElem& o) const { return FqElem(f_, padd(c_, o.c_, f_->ell_)); }

FqElem FqElem::operator-(const FqElem& o) const { return FqElem(f_, psub(c_, o.c_, f_->ell_)); }

FqElem FqElem::operator-() const { return FqElem(f_, psub({}, c_, f_->ell_)); }

FqElem FqElem::operator*(const FqElem& o) const {
  return FqElem(f_, pmod(pmul(c_, o.c_, f_->ell_), f_->mod_, f_->ell_));
}

FqElem FqElem::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(-e);
  return FqElem(f_, ppowmod(c_, e, f_->mod_, f_->ell_));
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw std::domain_error("FqElem::inverse: zero");
  return pow(f_->card() - 2);
}

uint64_t FqElem::order_dividing(uint64_t d) const {
  if (is_zero()) throw std::domain_error("order_dividing: zero element");
  if (!(pow(BigInt(d)) == f_->one())) throw std::domain_error("order_dividing: d is not a multiple of the order");
  uint64_t ord = d;
  for (uint64_t p : prime_factors(d)) {
    while (ord % p == 0 && pow(BigInt(ord / p)) == f_->one()) ord /= p;
  }
  return ord;
}

std::string FqElem::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c_[i] > 1) s += std::to_string(static_cast<int>(c_[i]));
    if (i >= 1) {
      if (c_[i] > 1) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

FqElem FqField::element_of_order(uint64_t d) const {
  BigInt q1 = card() - 1;
  if (q1 % d != 0) throw std::domain_error("element_of_order: order does not divide q-1");
  BigInt cof = q1 / d;
  auto pfs = prime_factors(d);
  BigInt q = card();
  for (BigInt n = 1; n < q; ++n) {
    FqElem x = nth_element(n);
    FqElem c = x.pow(cof);
    if (c.is_zero() || c == one()) continue;
    bool exact = true;
    for (uint64_t p : pfs) {
      if (c.pow(BigInt(d / p)) == one()) {
        exact = false;
        break;
      }
    }
    if (exact) return c;
  }
  throw std::logic_error("element_of_order: not found");
}

std::vector<FqElem> FqField::roots_of(const std::vector<FqElem>& poly) const {
  // Equal-degree style splitting: all roots of poly living in this field.
  // poly has coefficients in this field, low->high, not necessarily monic.
  using FPoly = std::vector<FqElem>;
  auto trim = [](FPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  auto monic = [&](FPoly p) {
    trim(p);
    if (p.empty()) return p;
    FqElem inv = p.back().inverse();
    for (auto& c : p) c = c * inv;
    return p;
  };
  auto fmod = [&](FPoly a, const FPoly& m) {
    trim(a);
    while (a.size() >= m.size()) {
      FqElem f = a.back();
      size_t shift = a.size() - m.size();
      if (!f.is_zero())
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] = a[shift + i] - f * m[i];
      a.pop_back();
      trim(a);
    }
    return a;
  };
  auto fmul = [&](const FPoly& a, const FPoly& b) {
    FPoly r(a.size() + b.size() - 1, zero());
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
  };
  auto fgcd = [&](FPoly a, FPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
      FPoly r = fmod(a, monic(b));
      // scale remainder consistently: monic division needs monic divisor
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  };
  auto fpowmod = [&](FPoly base, BigInt e, const FPoly& m) {
    FPoly r = {one()};
    base = fmod(std::move(base), m);
    while (e > 0) {
      if ((e & 1) != 0) r = fmod(fmul(r, base), m);
      base = fmod(fmul(base, base), m);
      e >>= 1;
    }
    return r;
  };
  auto fsub = [&](FPoly a, const FPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), zero());
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    trim(a);
    return a;
  };
  auto fadd = [&](FPoly a, const FPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), zero());
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    trim(a);
    return a;
  };
  auto fdiv_exact = [&](const FPoly& a, const FPoly& b) {
    // a, b monic; returns a / b (remainder known to vanish)
    FPoly rem = a, q(a.size() - b.size() + 1, zero());
    while (rem.size() >= b.size()) {
      FqElem f = rem.back();
      size_t shift = rem.size() - b.size();
      q[shift] = f;
      if (!f.is_zero())
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = rem[shift + i] - f * b[i];
      rem.pop_back();
      trim(rem);
    }
    return q;
  };

  FPoly f = monic(poly);
  if (f.empty()) throw std::domain_error("roots_of: zero polynomial");
  std::vector<FqElem> roots;
  // strip the part of f that splits in this field: gcd(f, x^q - x)
  FPoly x = {zero(), one()};
  FPoly xq = fpowmod(x, card(), f);
  FPoly split = fgcd(fsub(xq, x), f);
  std::vector<FPoly> stack = {split};
  BigInt half = (card() - 1) / 2;
  while (!stack.empty()) {
    FPoly g = monic(stack.back());
    stack.pop_back();
    if (g.size() <= 1) continue;
    if (g.size() == 2) {
      roots.push_back(-g[0]);
      continue;
    }
    // deterministic delta sweep for the equal-degree split; in characteristic
    // 2 the trace map replaces the half-power
    bool done = false;
    if (ell_ != 2) {
      for (BigInt delta = 0; !done; ++delta) {
        FPoly sh = {nth_element(delta), one()};
        FPoly w = fpowmod(sh, half, g);
        FPoly h = fgcd(fsub(w, {one()}), g);
        if (h.size() > 1 && h.size() < g.size()) {
          stack.push_back(h);
          stack.push_back(fdiv_exact(g, monic(h)));
          done = true;
        }
      }
    } else {
      for (BigInt delta = 1; !done; ++delta) {
        FPoly dz = {zero(), nth_element(delta)};
        FPoly acc = fmod(dz, g);
        FPoly term = acc;
        for (uint32_t i = 1; i < k_; ++i) {
          term = fmod(fmul(term, term), g);
          acc = fadd(acc, term);
        }
        FPoly h = fgcd(acc, g);
        if (h.size() > 1 && h.size() < g.size()) {
          stack.push_back(h);
          stack.push_back(fdiv_exact(g, monic(h)));
          done = true;
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FqElem> FqField::embedding_of(const FqField& sub) const {
  if (sub.ell_ != ell_ || k_ % sub.k_ != 0)
    throw std::domain_error("embedding_of: not a subfield");
  // root of the subfield modulus inside this field, deterministic least
  std::vector<FqElem> poly;
  for (uint8_t c : sub.mod_) poly.push_back(from_int(c));
  std::vector<FqElem> rts = roots_of(poly);
  if (rts.empty()) throw std::logic_error("embedding_of: modulus has no root in the big field");
  FqElem alpha = rts.front();
  std::vector<FqElem> emb(sub.k_);
  FqElem cur = one();
  for (uint32_t i = 0; i < sub.k_; ++i) {
    emb[i] = cur;
    cur = cur * alpha;
  }
  return emb;
}

FqElem apply_embedding(const std::vector<FqElem>& emb, const FqElem& x) {
  const FqField* big = emb.front().field();
  FqElem acc = big->zero();
  const auto& c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    acc = acc + emb[i] * big->from_int(c[i]);
  }
  return acc;
}

}  // namespace charlift
