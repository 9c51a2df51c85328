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

#include "charlift/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

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

// Exact division of integer polynomials, quotient of (x^m - 1) by the product
// of lower cyclotomic polynomials.
std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
  std::vector<BigInt> rem = num;
  std::vector<BigInt> quo(num.size() - den.size() + 1);
  for (size_t i = quo.size(); i-- > 0;) {
    BigInt q = rem[i + den.size() - 1] / den.back();
    quo[i] = q;
    if (q != 0) {
      for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
    }
  }
  return quo;
}

struct CondData {
  std::vector<BigInt> phi_poly;              // monic Phi_m, low->high
  std::vector<std::vector<BigInt>> pow_tab;  // x^k mod Phi_m for k in [0, m)
};

std::map<uint64_t, CondData> g_cond_cache;
std::mutex g_cond_mutex;

const CondData& cond_data(uint64_t m);

std::vector<BigInt> compute_phi_poly(uint64_t m) {
  if (m == 1) return {BigInt(-1), BigInt(1)};  // x - 1
  std::vector<BigInt> num(m + 1);
  num[0] = -1;
  num[m] = 1;
  std::vector<BigInt> den = {BigInt(1)};
  for (uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& pd = cond_data(d).phi_poly;
    std::vector<BigInt> nd(den.size() + pd.size() - 1);
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < pd.size(); ++j) nd[i + j] += den[i] * pd[j];
    den = std::move(nd);
  }
  return poly_div_exact(num, den);
}

const CondData& cond_data(uint64_t m) {
  {
    std::lock_guard<std::mutex> lk(g_cond_mutex);
    auto it = g_cond_cache.find(m);
    if (it != g_cond_cache.end() && !it->second.pow_tab.empty()) return it->second;
  }
  // Build outside the lock is unsafe for recursion; keep it simple and build
  // under a recursive scheme: compute_phi_poly(m) only needs d < m entries.
  CondData data;
  data.phi_poly = compute_phi_poly(m);
  size_t deg = data.phi_poly.size() - 1;
  data.pow_tab.resize(m);
  std::vector<BigInt> cur(deg, BigInt(0));
  if (deg > 0) cur[0] = 1;
  for (uint64_t k = 0; k < m; ++k) {
    data.pow_tab[k] = cur;
    // multiply by x modulo Phi
    BigInt top = deg > 0 ? cur[deg - 1] : BigInt(0);
    for (size_t i = deg; i-- > 1;) cur[i] = cur[i - 1];
    if (deg > 0) cur[0] = 0;
    if (top != 0) {
      for (size_t i = 0; i < deg; ++i) cur[i] -= top * data.phi_poly[i];
    }
  }
  std::lock_guard<std::mutex> lk(g_cond_mutex);
  auto [it, inserted] = g_cond_cache.emplace(m, std::move(data));
  return it->second;
}

// Reduce a rational polynomial (low->high, any degree) modulo Phi_m into the
// power basis of length phi(m), using the cached power table.
std::vector<Rat> reduce_mod_phi(uint64_t m, const std::vector<Rat>& poly) {
  const CondData& cd = cond_data(m);
  size_t deg = cd.phi_poly.size() - 1;
  std::vector<Rat> out(deg, Rat(0));
  for (size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == 0) continue;
    const auto& xk = cd.pow_tab[k % m];
    // exponents >= m wrap: x^m = x^{m mod m} only holds modulo x^m - 1, which
    // Phi_m divides, so the wrap is exact.
    for (size_t i = 0; i < deg; ++i) {
      if (xk[i] != 0) out[i] += poly[k] * Rat(xk[i]);
    }
  }
  return out;
}

}  // namespace

uint64_t Cyclotomic::phi(uint64_t m) {
  uint64_t r = m;
  for (uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<BigInt>& Cyclotomic::cyclotomic_poly(uint64_t m) { return cond_data(m).phi_poly; }

Cyclotomic::Cyclotomic() : cond_(1), c_(1, Rat(0)) {}

Cyclotomic::Cyclotomic(const Rat& r) : cond_(1), c_(1, r) {}

Cyclotomic::Cyclotomic(long n) : cond_(1), c_(1, Rat(n)) {}

Cyclotomic Cyclotomic::root_of_unity(uint64_t m, int64_t j) {
  if (m == 0) throw std::domain_error("root_of_unity: conductor must be positive");
  int64_t jm = j % static_cast<int64_t>(m);
  if (jm < 0) jm += m;
  uint64_t ju = static_cast<uint64_t>(jm);
  uint64_t g = gcd_u64(m, ju == 0 ? m : ju);
  m /= g;
  ju /= g;
  // now gcd(ju, m) = 1 (ju = 0 forces m = 1)
  if (m % 4 == 2) {
    // zeta_{2k}^j = -zeta_k^{j(k+1)/2} for odd k
    uint64_t k = m / 2;
    uint64_t e = (ju % k) * ((k + 1) / 2) % k;
    Cyclotomic z = root_of_unity(k, static_cast<int64_t>(e));
    return -z;
  }
  if (m == 1) return Cyclotomic(Rat(1));
  uint64_t deg = phi(m);
  std::vector<Rat> c(deg, Rat(0));
  if (ju < deg) {
    c[ju] = 1;
    return Cyclotomic(m, std::move(c));
  }
  const auto& xk = cond_data(m).pow_tab[ju];
  for (size_t i = 0; i < deg; ++i) c[i] = Rat(xk[i]);
  Cyclotomic z(m, std::move(c));
  z.trim_to_rational();
  return z;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("rational_value: element is irrational");
  return c_[0];
}

void Cyclotomic::trim_to_rational() {
  if (cond_ != 1 && is_rational()) {
    Rat v = c_[0];
    cond_ = 1;
    c_.assign(1, v);
  }
}

Cyclotomic Cyclotomic::promoted(uint64_t L) const {
  if (L == cond_) return *this;
  if (L % cond_ != 0) throw std::domain_error("promoted: conductor does not divide target");
  uint64_t s = L / cond_;
  std::vector<Rat> poly(static_cast<size_t>(phi(cond_) - 1) * s + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) poly[i * s] = c_[i];
  return Cyclotomic(L, reduce_mod_phi(L, poly));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  uint64_t L = lcm_u64(cond_, o.cond_);
  Cyclotomic a = promoted(L), b = o.promoted(L);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.trim_to_rational();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x *= r;
  out.trim_to_rational();
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  if (cond_ == 1) return o * c_[0];
  if (o.cond_ == 1) return *this * o.c_[0];
  uint64_t L = lcm_u64(cond_, o.cond_);
  Cyclotomic a = promoted(L), b = o.promoted(L);
  std::vector<Rat> poly(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      poly[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic out(L, reduce_mod_phi(L, poly));
  out.trim_to_rational();
  return out;
}

namespace {

// Polynomial utilities over Q for the extended gcd against Phi_m.
using QPoly = std::vector<Rat>;

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qp_trim(a);
  return a;
}

// division with remainder, b nonzero
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  qp_trim(a);
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    qp_trim(a);
  }
  return {q, a};
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse: division by zero");
  if (cond_ == 1) return Cyclotomic(Rat(1) / c_[0]);
  // extended gcd of this element against Phi_m in Q[x]
  const auto& phi_int = cond_data(cond_).phi_poly;
  QPoly phi(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) phi[i] = Rat(phi_int[i]);
  QPoly r0 = phi, r1 = c_;
  qp_trim(r1);
  QPoly s0 = {}, s1 = {Rat(1)};  // coefficients of the element in the Bezout identity
  while (!r1.empty()) {
    auto [q, rem] = qp_divmod(r0, r1);
    QPoly s2 = qp_sub(s0, qp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant, Phi_m irreducible over Q), s0 * elem = r0 mod Phi
  if (r0.size() != 1) throw std::logic_error("inverse: gcd with cyclotomic polynomial not constant");
  Rat scale = Rat(1) / r0[0];
  QPoly inv = s0;
  for (auto& x : inv) x *= scale;
  inv.resize(phi.size() - 1, Rat(0));
  Cyclotomic out(cond_, std::move(inv));
  out.trim_to_rational();
  return out;
}

Cyclotomic Cyclotomic::galois(uint64_t t) const {
  if (cond_ == 1) return *this;
  t %= cond_;
  if (gcd_u64(t, cond_) != 1) throw std::domain_error("galois: twist not prime to conductor");
  std::vector<Rat> poly(static_cast<size_t>(cond_), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    poly[(i * t) % cond_] += c_[i];
  }
  Cyclotomic out(cond_, reduce_mod_phi(cond_, poly));
  out.trim_to_rational();
  return out;
}

Cyclotomic Cyclotomic::conj() const { return galois(cond_ - 1); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  uint64_t L = lcm_u64(cond_, o.cond_);
  Cyclotomic a = promoted(L), b = o.promoted(L);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::simplified() const {
  Cyclotomic cur = *this;
  cur.trim_to_rational();
  bool changed = true;
  while (changed && cur.cond_ > 1) {
    changed = false;
    std::vector<uint64_t> primes;
    uint64_t m = cur.cond_;
    for (uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
    for (uint64_t p : primes) {
      uint64_t d = cur.cond_ / p;
      if (d == 0 || d % 4 == 2) continue;
      // Try to express cur in Q(zeta_d): solve over the embedded basis.
      uint64_t phid = phi(d);
      uint64_t phim = phi(cur.cond_);
      // columns: embeddings of zeta_d^i, i < phi(d)
      std::vector<std::vector<Rat>> cols(phid);
      bool ok = true;
      for (uint64_t i = 0; i < phid; ++i) {
        Cyclotomic bi = root_of_unity(d, static_cast<int64_t>(i)).promoted(cur.cond_);
        cols[i] = bi.coeffs();
      }
      // Gaussian solve cols * x = cur.c_ (phim equations, phid unknowns)
      std::vector<std::vector<Rat>> a(phim, std::vector<Rat>(phid + 1, Rat(0)));
      for (uint64_t r = 0; r < phim; ++r) {
        for (uint64_t i = 0; i < phid; ++i) a[r][i] = cols[i][r];
        a[r][phid] = cur.c_[r];
      }
      size_t row = 0;
      std::vector<long> pivot_col(phid, -1);
      for (uint64_t col = 0; col < phid && row < phim; ++col) {
        size_t pr = row;
        while (pr < phim && a[pr][col] == 0) ++pr;
        if (pr == phim) continue;
        std::swap(a[pr], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (uint64_t j = col; j <= phid; ++j) a[row][j] *= inv;
        for (size_t r2 = 0; r2 < phim; ++r2) {
          if (r2 == row || a[r2][col] == 0) continue;
          Rat f = a[r2][col];
          for (uint64_t j = col; j <= phid; ++j) a[r2][j] -= f * a[row][j];
        }
        pivot_col[col] = static_cast<long>(row);
        ++row;
      }
      // consistency: rows beyond pivots must have zero rhs
      for (size_t r2 = row; r2 < phim; ++r2) {
        if (a[r2][phid] != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<Rat> x(phid, Rat(0));
      for (uint64_t col = 0; col < phid; ++col)
        if (pivot_col[col] >= 0) x[col] = a[static_cast<size_t>(pivot_col[col])][phid];
      cur = Cyclotomic(d, std::move(x));
      cur.trim_to_rational();
      changed = true;
      break;
    }
  }
  return cur;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rat_to_string(c_[0]);
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (!first) {
      s += v > 0 ? " + " : " - ";
      if (v < 0) v = -v;
    }
    first = false;
    std::string term;
    if (i == 0) {
      term = rat_to_string(v);
    } else {
      if (v != 1) term = rat_to_string(v) + "*";
      term += "z" + std::to_string(cond_);
      if (i > 1) term += "^" + std::to_string(i);
    }
    s += term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace charlift
