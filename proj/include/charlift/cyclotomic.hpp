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

#include <cstdint>
#include <vector>

#include "charlift/rational.hpp"

namespace charlift {

// Exact element of the cyclotomic field Q(zeta_m), stored in the power basis
// 1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic polynomial.
//
// Conductors are kept canonical: 1 or m with m % 4 != 2 (zeta_{2k} with k odd
// is rewritten over Q(zeta_k)).  Mixed-conductor arithmetic promotes both
// operands to the lcm.
class Cyclotomic {
 public:
  Cyclotomic();  // zero
  explicit Cyclotomic(const Rat& r);
  explicit Cyclotomic(long n);

  // zeta_m^j, reduced to its minimal conductor.
  static Cyclotomic root_of_unity(uint64_t m, int64_t j);

  uint64_t conductor() const { return cond_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rat rational_value() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator*=(const Rat& r) { return *this = *this * r; }

  Cyclotomic operator*(const Rat& r) const;

  // Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  // Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  // Galois twist zeta -> zeta^t for t prime to the conductor.
  Cyclotomic galois(uint64_t t) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Rewrites the element over the smallest cyclotomic subfield containing it.
  Cyclotomic simplified() const;

  // The image under zeta_m -> zeta_L^{L/m}; m must divide L.
  Cyclotomic promoted(uint64_t L) const;

  std::string to_string() const;

  // Monic cyclotomic polynomial Phi_m, coefficients low to high (cached).
  static const std::vector<BigInt>& cyclotomic_poly(uint64_t m);

  // Euler phi.
  static uint64_t phi(uint64_t m);

 private:
  Cyclotomic(uint64_t cond, std::vector<Rat> c) : cond_(cond), c_(std::move(c)) {}
  void trim_to_rational();

  uint64_t cond_;
  std::vector<Rat> c_;
};

inline Cyclotomic operator*(const Rat& r, const Cyclotomic& z) { return z * r; }

}  // namespace charlift
