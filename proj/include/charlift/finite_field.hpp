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
#include <memory>
#include <string>
#include <vector>

#include "charlift/rational.hpp"

namespace charlift {

class FqField;

// Element of F_{ell^k}: polynomial representative of degree < k over the
// prime field, modulo the field's fixed irreducible.
class FqElem {
 public:
  FqElem() : f_(nullptr) {}
  FqElem(const FqField* f, std::vector<uint8_t> c) : f_(f), c_(std::move(c)) {}

  const FqField* field() const { return f_; }
  const std::vector<uint8_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  bool operator<(const FqElem& o) const;  // lexicographic on coefficients

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator-() const;
  FqElem inverse() const;
  FqElem pow(const BigInt& e) const;

  // Multiplicative order, given a known multiple d of it.
  uint64_t order_dividing(uint64_t d) const;

  std::string to_string() const;

 private:
  const FqField* f_;
  std::vector<uint8_t> c_;
};

// The field F_{ell^k} with the deterministic (lexicographically least)
// irreducible modulus.  Instances are interned: get() returns a shared
// singleton per (ell, k).
class FqField {
 public:
  static std::shared_ptr<const FqField> get(uint32_t ell, uint32_t k);

  uint32_t ell() const { return ell_; }
  uint32_t k() const { return k_; }
  const std::vector<uint8_t>& modulus() const { return mod_; }  // degree k, monic
  BigInt card() const;                                          // ell^k

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(int64_t n) const;  // image of an integer in the prime field
  FqElem element(std::vector<uint8_t> coeffs) const;
  // Enumeration helper: the n-th element in lexicographic coefficient order.
  FqElem nth_element(const BigInt& n) const;

  // Deterministic element of exact multiplicative order d (d | ell^k - 1).
  FqElem element_of_order(uint64_t d) const;

  // All roots in this field of a monic polynomial with coefficients here.
  std::vector<FqElem> roots_of(const std::vector<FqElem>& poly) const;

  // The embedding of a subfield: images of the subfield's basis powers.
  // Deterministic (least root of the subfield modulus).  Requires sub.k | k
  // and equal characteristic.
  std::vector<FqElem> embedding_of(const FqField& sub) const;

 private:
  FqField(uint32_t ell, uint32_t k);

  uint32_t ell_, k_;
  std::vector<uint8_t> mod_;  // length k+1, monic

  friend class FqElem;
};

// Applies a precomputed embedding table (powers of the subfield generator's
// image) to an element of the subfield.
FqElem apply_embedding(const std::vector<FqElem>& emb, const FqElem& x);

}  // namespace charlift
