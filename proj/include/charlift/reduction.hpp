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
#include <mutex>
#include <vector>

#include "charlift/cyclotomic.hpp"
#include "charlift/finite_field.hpp"
#include "charlift/rational.hpp"

namespace charlift {

// Raised when a reduction mod ell meets a denominator divisible by ell.  The
// error is informative: it falsifies an integrality claim.
struct NotEllIntegralError : std::domain_error {
  explicit NotEllIntegralError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a root of unity outside the registered conductor is requested.
struct ContextTooSmallError : std::domain_error {
  explicit ContextTooSmallError(const std::string& what) : std::domain_error(what) {}
};

// Reduction modulo a fixed prime above ell on Z[zeta_M, 1/p], together with
// the Teichmuller section.  Realized as a growing chain of fields
//
//     F_{ell^{k_0}} < F_{ell^{k_1}} < ...
//
// each containing the previous one through a fixed embedding, with a
// designated image of zeta_{M_i} for M_i the largest divisor of M whose
// torsion fits in the level.  All choices are deterministic, so two runs
// with the same (ell, M, base) produce identical tables.
class ReductionContext {
 public:
  // base_conductor: the torsion the level-0 field (where representations
  // live) must already contain.  Must divide M; M must be prime to ell.
  ReductionContext(uint32_t ell, uint64_t M, uint64_t base_conductor);

  uint32_t ell() const { return ell_; }
  uint64_t conductor() const { return M_; }
  const FqField* rep_field() const;
  uint32_t rep_degree() const { return rep_field()->k(); }

  // Smallest chain level whose field contains mu_d; grows the chain on
  // demand.  Throws ContextTooSmallError when d does not divide M.
  size_t ensure_order(uint64_t d) const;

  size_t level_count() const;
  const FqField* field_at(size_t level) const;
  size_t level_of(const FqField* f) const;  // throws if f is not in the chain

  // Image of zeta_d at the given level (d | M_level).
  FqElem zeta_image(uint64_t d, size_t level) const;

  // Embeds x (element of some chain field) into the field at to_level.
  FqElem embed(const FqElem& x, size_t to_level) const;

  // Ring reduction of an ell-integral rational into a chain field.
  FqElem reduce_rat(const Rat& r, size_t level) const;

  // Ring reduction of an ell-integral cyclotomic; lands in the smallest
  // adequate chain level.
  FqElem reduce(const Cyclotomic& z) const;
  FqElem reduce_at(const Cyclotomic& z, size_t level) const;

  // True if reduce(z) is defined (conductor divides M, denominators prime
  // to ell).
  bool is_ell_integral(const Cyclotomic& z) const;

  // The Teichmuller lift of a root of unity x living in a chain field:
  // the unique root of unity of the same order reducing to x.
  Cyclotomic teich_lift(const FqElem& x) const;

  // Multiplicative order of ell mod n (n prime to ell).
  static uint32_t mult_order(uint32_t ell, uint64_t n);

 private:
  struct Level {
    std::shared_ptr<const FqField> F;
    std::vector<FqElem> emb_prev;  // embedding table of the previous level
    uint64_t Mi;
    FqElem zeta;  // designated image of zeta_{Mi}
  };

  void push_level(uint32_t k_new) const;
  static uint64_t compatible_part(uint64_t M, uint32_t ell, uint32_t k);

  uint32_t ell_;
  uint64_t M_;
  mutable std::vector<Level> chain_;
  mutable std::mutex mu_;
};

}  // namespace charlift
