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

#include "charlift/rational.hpp"

namespace charlift {

long val_p(const BigInt& n, uint32_t p) {
  if (n == 0) throw std::domain_error("val_p: zero has no finite valuation");
  BigInt m = n;
  long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

long val_p(const Rat& r, uint32_t p) {
  if (r == 0) throw std::domain_error("val_p: zero has no finite valuation");
  return val_p(numerator(r), p) - val_p(denominator(r), p);
}

bool is_p_integral(const Rat& r, uint32_t p) {
  return denominator(r) % p != 0;
}

BigInt pow_int(uint32_t base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

Rat pow_rat(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp < 0) throw std::domain_error("pow_rat: negative power of zero");
    return Rat(0);
  }
  Rat b = exp > 0 ? base : Rat(1) / base;
  unsigned long e = exp > 0 ? exp : -exp;
  Rat r(1);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

uint64_t mod_reduce(const Rat& r, uint64_t m) {
  BigInt num = numerator(r) % m;
  if (num < 0) num += m;
  BigInt den = denominator(r) % m;
  // invert den mod m by extended gcd
  BigInt a = den, b = BigInt(m), x0 = 1, x1 = 0;
  while (b != 0) {
    BigInt q = a / b;
    BigInt t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw std::domain_error("mod_reduce: denominator not invertible mod " + std::to_string(m));
  BigInt inv = x0 % m;
  if (inv < 0) inv += m;
  return static_cast<uint64_t>(BigInt((num * inv) % m));
}

Rat p_fractional_part(const Rat& r, uint32_t p) {
  if (r == 0) return Rat(0);
  const BigInt& den = denominator(r);
  BigInt d = den;
  long v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  if (d != 1) throw std::domain_error("p_fractional_part: denominator is not a p-power");
  if (v == 0) return Rat(0);
  BigInt pv = pow_int(p, static_cast<unsigned>(v));
  BigInt c = numerator(r) % pv;
  if (c < 0) c += pv;
  return Rat(c, pv);
}

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("rat_from_string: zero denominator");
  return Rat(num, den);
}

}  // namespace charlift
