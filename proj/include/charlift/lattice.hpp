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

#include "charlift/matrix.hpp"
#include "charlift/rational.hpp"

namespace charlift {

// Scalar of Q_p at working precision: a rational with p-power denominator.
// Congruences below p^precision are not distinguished by the experiment.
struct PadicScalar {
  Rat value;
  uint32_t p = 0;
  int precision = 0;

  long valuation() const { return val_p(value, p); }
  bool is_integral() const { return value == 0 || val_p(value, p) >= 0; }
};

// Canonical representative of x mod p^a Z_(p): a rational c/p^v in [0, p^a)
// whose denominator is a pure p-power.
Rat residue_mod_p_power(const Rat& x, uint32_t p, long a);

// Z_p-lattice in Q^d, stored as the canonical upper-triangular basis matrix
// (columns are basis vectors, diagonal entries p-powers, entries right of a
// pivot reduced modulo it).  Two lattices are equal iff their canonical
// matrices coincide.
class Lattice {
 public:
  // Columns of basis span the lattice over Z_(p); needs full rank d.
  Lattice(uint32_t p, DenseMat<Rat> basis_columns);

  static Lattice standard(uint32_t p, uint32_t d);           // Z_p^d
  static Lattice scaled_standard(uint32_t p, uint32_t d, long e);  // p^e Z_p^d

  uint32_t dim() const { return d_; }
  uint32_t p() const { return p_; }
  const DenseMat<Rat>& basis() const { return h_; }  // canonical, columns

  long det_valuation() const { return det_val_; }

  bool operator==(const Lattice& o) const { return p_ == o.p_ && h_ == o.h_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }
  bool contains(const std::vector<Rat>& x) const;
  bool contains_lattice(const Lattice& o) const;

  Lattice scaled(long e) const;  // p^e * this

  // Smallest lattice containing both operands.
  static Lattice sum(const Lattice& a, const Lattice& b);
  static Lattice intersect(const Lattice& a, const Lattice& b);
  // Smallest lattice containing this and the given vector.
  Lattice with_vector(const std::vector<Rat>& x) const;

  // Dual with respect to a pairing matrix and conductor exponent c:
  // { X : x^T P X in p^c Z_p for all x in this }.  The pairing sends
  // (primal x, dual X) to x^T P X; for duals of dual-side lattices pass the
  // transposed pairing.
  Lattice dual(const DenseMat<Rat>& pairing, long c) const;

  // Coset representatives of this / sub (sub must be contained in this).
  // Throws std::length_error when the index exceeds the cap.
  std::vector<std::vector<Rat>> quotient_transversal(const Lattice& sub, uint64_t cap) const;

  uint64_t index_in(const Lattice& super) const;  // [super : this], a p-power

  // Canonical representative of x modulo this lattice.
  std::vector<Rat> reduce_point(const std::vector<Rat>& x) const;

 private:
  uint32_t p_, d_;
  DenseMat<Rat> h_;  // canonical column HNF
  long det_val_;
};

DenseMat<Rat> rat_mat_inverse(const DenseMat<Rat>& a);
DenseMat<Rat> rat_mat_transpose(const DenseMat<Rat>& a);

}  // namespace charlift
