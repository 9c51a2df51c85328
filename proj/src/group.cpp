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

#include "charlift/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace charlift {

bool Mat2::operator<(const Mat2& o) const { return pack_mat(*this) < pack_mat(o); }

uint64_t pack_mat(const Mat2& m) {
  return (uint64_t(m.a) << 48) | (uint64_t(m.b) << 32) | (uint64_t(m.c) << 16) | uint64_t(m.d);
}

LevelGroup::LevelGroup(uint32_t p, uint32_t n) : p_(p), n_(n) {
  if (n == 0 || n > 12) throw std::domain_error("LevelGroup: level out of range");
  pn_ = 1;
  for (uint32_t i = 0; i < n; ++i) {
    pn_ *= p;
    if (pn_ > 60000) throw std::domain_error("LevelGroup: modulus too large for packed matrices");
  }
}

BigInt LevelGroup::order() const {
  // |SL2(Z/p^n)| = p^{3(n-1)} * p (p^2 - 1)
  BigInt o = pow_int(p_, 3 * (n_ - 1));
  o *= p_;
  o *= (BigInt(p_) * p_ - 1);
  return o;
}

Mat2 LevelGroup::mul(const Mat2& x, const Mat2& y) const {
  uint64_t m = pn_;
  Mat2 r;
  r.a = static_cast<uint32_t>((uint64_t(x.a) * y.a + uint64_t(x.b) * y.c) % m);
  r.b = static_cast<uint32_t>((uint64_t(x.a) * y.b + uint64_t(x.b) * y.d) % m);
  r.c = static_cast<uint32_t>((uint64_t(x.c) * y.a + uint64_t(x.d) * y.c) % m);
  r.d = static_cast<uint32_t>((uint64_t(x.c) * y.b + uint64_t(x.d) * y.d) % m);
  return r;
}

Mat2 LevelGroup::inv(const Mat2& x) const {
  uint64_t m = pn_;
  Mat2 r;
  r.a = x.d;
  r.d = x.a;
  r.b = static_cast<uint32_t>((m - x.b % m) % m);
  r.c = static_cast<uint32_t>((m - x.c % m) % m);
  return r;
}

Mat2 LevelGroup::reduce(int64_t a, int64_t b, int64_t c, int64_t d) const {
  int64_t m = static_cast<int64_t>(pn_);
  auto norm = [m](int64_t v) {
    v %= m;
    if (v < 0) v += m;
    return static_cast<uint32_t>(v);
  };
  return Mat2{norm(a), norm(b), norm(c), norm(d)};
}

Mat2 LevelGroup::reduce_to(const Mat2& x, uint32_t lower_level) const {
  uint64_t m = 1;
  for (uint32_t i = 0; i < lower_level; ++i) m *= p_;
  return Mat2{static_cast<uint32_t>(x.a % m), static_cast<uint32_t>(x.b % m),
              static_cast<uint32_t>(x.c % m), static_cast<uint32_t>(x.d % m)};
}

bool LevelGroup::is_sl2(const Mat2& x) const {
  uint64_t m = pn_;
  uint64_t det = (uint64_t(x.a) * x.d % m + m - uint64_t(x.b) * x.c % m) % m;
  return det == 1;
}

Mat2 LevelGroup::pow(const Mat2& x, uint64_t e) const {
  Mat2 r = id(), base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint64_t LevelGroup::element_order(const Mat2& x) const {
  Mat2 cur = x;
  uint64_t ord = 1;
  const uint64_t cap = 8 * pn_ * pn_;
  while (!(cur == id())) {
    cur = mul(cur, x);
    ++ord;
    if (ord > cap) throw std::logic_error("element_order: runaway");
  }
  return ord;
}

std::vector<Mat2> LevelGroup::congruence_gens(uint32_t m) const {
  if (m > n_) throw std::domain_error("congruence_gens: depth beyond level");
  std::vector<Mat2> gens;
  // generators of K_m/K_n: three per layer m, m+1, ..., n-1 (Frattini)
  for (uint32_t t = m; t < n_; ++t) {
    int64_t q = 1;
    for (uint32_t i = 0; i < t; ++i) q *= p_;
    gens.push_back(reduce(1, q, 0, 1));
    gens.push_back(reduce(1, 0, q, 1));
    // diag(1 + q, (1 + q)^{-1}) at level n
    int64_t u = 1 + q;
    // invert u mod p^n
    uint64_t ui = mod_reduce(Rat(1, u), pn_);
    gens.push_back(reduce(u, 0, 0, static_cast<int64_t>(ui)));
  }
  if (gens.empty()) gens.push_back(id());
  return gens;
}

BigInt LevelGroup::congruence_order(uint32_t m) const {
  if (m == 0) return order();
  return pow_int(p_, 3 * (n_ - m));
}

Subgroup::Subgroup(std::shared_ptr<const LevelGroup> g, std::vector<Mat2> gens, std::string name)
    : g_(std::move(g)), gens_(std::move(gens)), name_(std::move(name)) {
  for (const Mat2& x : gens_)
    if (!g_->is_sl2(x)) throw std::domain_error("Subgroup: generator not in SL2 at level");
  if (gens_.empty()) gens_.push_back(g_->id());
}

Subgroup Subgroup::full(std::shared_ptr<const LevelGroup> g) {
  const LevelGroup& G = *g;
  std::vector<Mat2> gens = {G.reduce(1, 1, 0, 1), G.reduce(1, 0, 1, 1)};
  Subgroup s(std::move(g), std::move(gens), "K");
  s.tag_ = Tag::FullLevel;
  s.cong_m_ = 0;
  return s;
}

Subgroup Subgroup::congruence(std::shared_ptr<const LevelGroup> g, uint32_t m) {
  std::vector<Mat2> gens = g->congruence_gens(m);
  Subgroup s(std::move(g), std::move(gens), "K" + std::to_string(m));
  s.tag_ = Tag::CongruenceKn;
  s.cong_m_ = m;
  return s;
}

Subgroup Subgroup::trivial(std::shared_ptr<const LevelGroup> g) {
  std::vector<Mat2> gens = {g->id()};
  return Subgroup(std::move(g), std::move(gens), "1");
}

Subgroup Subgroup::preset(std::shared_ptr<const LevelGroup> g, const std::string& name) {
  const LevelGroup& G = *g;
  uint32_t p = G.p();
  if (name == "K") return full(std::move(g));
  if (name.size() >= 2 && name[0] == 'K') {
    uint32_t m = static_cast<uint32_t>(std::stoul(name.substr(1)));
    return congruence(std::move(g), m);
  }
  if (name == "Iwahori") {
    // upper triangular mod p: torus + upper unipotent + lower at depth 1
    std::vector<Mat2> gens;
    uint64_t r = 2;  // smallest generator of (Z/p^n)^x candidates tried below
    // find a generator of the units mod p^n: try small values
    uint64_t pn = G.modulus();
    uint64_t target = (pn / p) * (p - 1);  // phi(p^n)
    for (r = 2; r < pn; ++r) {
      if (r % p == 0) continue;
      uint64_t ord = 1, cur = r % pn;
      while (cur != 1) {
        cur = cur * r % pn;
        ++ord;
      }
      if (ord == target) break;
    }
    uint64_t rinv = mod_reduce(Rat(1, static_cast<long>(r)), pn);
    gens.push_back(G.reduce(static_cast<int64_t>(r), 0, 0, static_cast<int64_t>(rinv)));
    gens.push_back(G.reduce(1, 1, 0, 1));
    gens.push_back(G.reduce(1, 0, static_cast<int64_t>(p), 1));
    return Subgroup(std::move(g), std::move(gens), "Iwahori");
  }
  if (name == "torus") {
    uint64_t pn = G.modulus();
    uint64_t target = (pn / p) * (p - 1);
    uint64_t r;
    for (r = 2; r < pn; ++r) {
      if (r % p == 0) continue;
      uint64_t ord = 1, cur = r % pn;
      while (cur != 1) {
        cur = cur * r % pn;
        ++ord;
      }
      if (ord == target) break;
    }
    uint64_t rinv = mod_reduce(Rat(1, static_cast<long>(r)), pn);
    std::vector<Mat2> gens = {G.reduce(static_cast<int64_t>(r), 0, 0, static_cast<int64_t>(rinv))};
    return Subgroup(std::move(g), std::move(gens), "torus");
  }
  if (name == "torus_nonsplit") {
    // norm-one elements of the unramified quadratic extension, embedded as
    // (x y*eps; y x): generated by a + b*sqrt(eps) of norm 1 with eps the
    // least non-residue mod p
    uint64_t pn = G.modulus();
    uint64_t eps = 2;
    for (uint64_t e = 2; e < p; ++e) {
      bool sq = false;
      for (uint64_t x = 1; x < p; ++x)
        if (x * x % p == e) sq = true;
      if (!sq) {
        eps = e;
        break;
      }
    }
    // brute scan for a generator of the norm-one group (order (p+1) p^{n-1})
    uint64_t want = (p + 1) * (pn / p);
    for (uint64_t a = 0; a < pn; ++a) {
      for (uint64_t b = 1; b < pn; ++b) {
        if ((a * a % pn + (pn - (b * b % pn) * eps % pn)) % pn != 1) continue;
        Mat2 t = G.reduce(static_cast<int64_t>(a), static_cast<int64_t>(b * eps % pn),
                          static_cast<int64_t>(b), static_cast<int64_t>(a));
        if (!G.is_sl2(t)) continue;
        if (G.element_order(t) == want)
          return Subgroup(std::move(g), {t}, "torus_nonsplit");
      }
    }
    throw std::logic_error("preset: no nonsplit torus generator found");
  }
  if (name == "normalizer") {
    Subgroup t = preset(g, "torus");
    std::vector<Mat2> gens = t.gens();
    gens.push_back(G.reduce(0, 1, -1, 0));
    return Subgroup(std::move(g), std::move(gens), "normalizer");
  }
  throw std::domain_error("preset: unknown subgroup name " + name);
}

const std::vector<Mat2>& Subgroup::elements(uint64_t cap) const {
  if (elems_) return *elems_;
  std::unordered_set<uint64_t> seen;
  std::deque<Mat2> queue;
  std::vector<Mat2> out;
  seen.insert(pack_mat(g_->id()));
  queue.push_back(g_->id());
  out.push_back(g_->id());
  while (!queue.empty()) {
    Mat2 cur = queue.front();
    queue.pop_front();
    for (const Mat2& gen : gens_) {
      Mat2 nxt = g_->mul(cur, gen);
      if (seen.insert(pack_mat(nxt)).second) {
        if (out.size() >= cap) throw std::length_error("Subgroup::elements: closure exceeds cap");
        out.push_back(nxt);
        queue.push_back(nxt);
      }
    }
  }
  std::sort(out.begin(), out.end());
  elems_ = std::move(out);
  return *elems_;
}

bool Subgroup::contains(const Mat2& x) const {
  if (tag_ == Tag::FullLevel) return g_->is_sl2(x);
  if (tag_ == Tag::CongruenceKn) {
    return g_->reduce_to(x, cong_m_) == g_->reduce_to(g_->id(), cong_m_) && g_->is_sl2(x);
  }
  const auto& e = elements();
  return std::binary_search(e.begin(), e.end(), x);
}

BigInt Subgroup::order() const {
  if (tag_ == Tag::FullLevel) return g_->order();
  if (tag_ == Tag::CongruenceKn) return g_->congruence_order(cong_m_);
  return BigInt(elements().size());
}

uint32_t Subgroup::congruence_depth() const {
  // least m >= 1 with K_m inside: the pro-order of the preimage in SL2(Z_p)
  // is [J : K_m] * p^infinity only when the kernel is pro-p, so the search
  // starts at depth one
  if (depth_) return *depth_;
  if (tag_ == Tag::FullLevel) {
    depth_ = 1;
    return 1;
  }
  if (tag_ == Tag::CongruenceKn) {
    depth_ = std::max<uint32_t>(cong_m_, 1);
    return *depth_;
  }
  for (uint32_t m = 1; m <= g_->level(); ++m) {
    bool ok = true;
    for (const Mat2& x : g_->congruence_gens(m))
      if (!contains(x)) {
        ok = false;
        break;
      }
    if (ok) {
      depth_ = m;
      return m;
    }
  }
  throw std::logic_error("congruence_depth: no congruence subgroup inside (should contain K_n trivially)");
}

BigInt Subgroup::index_over_congruence() const {
  uint32_t m = congruence_depth();
  return order() / g_->congruence_order(m);
}

bool Subgroup::is_ellprime(uint32_t ell) const {
  return index_over_congruence() % ell != 0;
}

Subgroup Subgroup::conjugated(const Mat2& x) const {
  Mat2 xi = g_->inv(x);
  std::vector<Mat2> gens;
  gens.reserve(gens_.size());
  for (const Mat2& s : gens_) gens.push_back(g_->mul(g_->mul(x, s), xi));
  return Subgroup(g_, std::move(gens), name_.empty() ? "" : name_ + "^g");
}

Subgroup Subgroup::intersect(const Subgroup& a, const Subgroup& b) {
  if (a.g_.get() != b.g_.get()) throw std::domain_error("Subgroup::intersect: level mismatch");
  const auto& ea = a.elements();
  std::vector<Mat2> common;
  for (const Mat2& x : ea)
    if (b.contains(x)) common.push_back(x);
  // the intersection of subgroups is a subgroup; use all elements as
  // generators and keep the enumeration
  Subgroup s(a.g_, common, a.name_ + "&" + b.name_);
  std::sort(common.begin(), common.end());
  s.elems_ = std::move(common);
  return s;
}

std::vector<std::pair<Mat2, uint64_t>> Subgroup::conjugacy_classes(uint64_t cap) const {
  const auto& elems = elements(cap);
  std::map<uint64_t, size_t> index;
  for (size_t i = 0; i < elems.size(); ++i) index[pack_mat(elems[i])] = i;
  std::vector<bool> seen(elems.size(), false);
  std::vector<std::pair<Mat2, uint64_t>> classes;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    // orbit of elems[i] under conjugation by generators
    std::deque<size_t> queue = {i};
    seen[i] = true;
    uint64_t size = 0;
    while (!queue.empty()) {
      size_t cur = queue.front();
      queue.pop_front();
      ++size;
      for (const Mat2& gen : gens_) {
        Mat2 conj = g_->mul(g_->mul(gen, elems[cur]), g_->inv(gen));
        auto it = index.find(pack_mat(conj));
        if (it == index.end()) throw std::logic_error("conjugacy_classes: closure not conjugation stable");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    classes.emplace_back(elems[i], size);
  }
  return classes;
}

bool in_G_ellprime(const LevelGroup& g, const Mat2& x, uint32_t ell) {
  return g.element_order(x) % ell != 0;
}

bool is_topologically_unipotent(const LevelGroup& g, const Mat2& x) {
  return (uint64_t(x.a) + x.d) % g.p() == 2 % g.p();
}

}  // namespace charlift
