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
#include <optional>
#include <vector>

#include "charlift/cyclotomic.hpp"
#include "charlift/lattice.hpp"
#include "charlift/reduction.hpp"

namespace charlift {

enum class SpaceTag { Primal, Dual };

// Additive character of Q_p with open kernel: psi(x) = e(u x / p^c) where e
// is the standard character with conductor Z_p and u is a unit.  c(psi) =
// p^c Z_p.  Values are exact roots of unity; the reduced realization goes
// through a ReductionContext.
class AdditiveCharacter {
 public:
  AdditiveCharacter(uint32_t p, long conductor_exp = 0, int64_t unit = 1)
      : p_(p), c_(conductor_exp), unit_(unit % static_cast<int64_t>(p) == 0 ? throw std::domain_error("AdditiveCharacter: unit divisible by p") : unit) {}

  uint32_t p() const { return p_; }
  long conductor_exp() const { return c_; }
  int64_t unit() const { return unit_; }

  Cyclotomic operator()(const Rat& x) const;
  FqElem reduced(const Rat& x, const ReductionContext& ctx) const;

 private:
  uint32_t p_;
  long c_;
  int64_t unit_;
};

// Compactly supported locally constant function, stored as a finite list of
// (lattice coset, value) pairs.  Values are exact cyclotomics (rationals
// embed); a canonicalized function has a single invariance lattice and
// pairwise distinct coset representatives.
class StepFunction {
 public:
  struct Coset {
    std::vector<Rat> point;
    Lattice lat;
    Cyclotomic value;
  };

  StepFunction(SpaceTag space, uint32_t d, uint32_t p) : space_(space), d_(d), p_(p) {}

  static StepFunction indicator(SpaceTag space, const std::vector<Rat>& point, const Lattice& lat,
                                const Cyclotomic& value = Cyclotomic(Rat(1)));

  SpaceTag space() const { return space_; }
  uint32_t dim() const { return d_; }
  uint32_t p() const { return p_; }
  bool canonical() const { return canonical_; }
  const std::vector<Coset>& parts() const { return parts_; }

  void add_coset(const std::vector<Rat>& point, const Lattice& lat, const Cyclotomic& value);

  // Refine to a single common invariance lattice, merge duplicate cosets,
  // drop zeros.  The cap bounds the number of refined pieces.
  void canonicalize(uint64_t cap = 200000);

  Cyclotomic eval(const std::vector<Rat>& x) const;

  bool all_values_rational() const;

  StepFunction negated_argument() const;  // x -> f(-x)
  StepFunction scaled(const Cyclotomic& c) const;
  static StepFunction add(const StepFunction& a, const StepFunction& b);

  // Pullback along an invertible linear map: (f . A)(x) = f(A x).
  StepFunction pulled_back(const DenseMat<Rat>& a) const;

  bool operator==(const StepFunction& o) const;

 private:
  SpaceTag space_;
  uint32_t d_, p_;
  std::vector<Coset> parts_;
  bool canonical_ = false;
};

// Self-dual Fourier analysis data: a pairing between V and V*, the additive
// character, and base lattices of measure one on both sides.
class FourierContext {
 public:
  FourierContext(uint32_t p, uint32_t d, DenseMat<Rat> pairing, AdditiveCharacter psi);

  uint32_t p() const { return p_; }
  uint32_t dim() const { return d_; }
  const AdditiveCharacter& psi() const { return psi_; }
  const DenseMat<Rat>& pairing() const { return pairing_; }
  const Lattice& base(SpaceTag s) const { return s == SpaceTag::Primal ? base_primal_ : base_dual_; }

  // <x, y> for x primal, y dual.
  Rat pair(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  Lattice perp(const Lattice& lat, SpaceTag s) const;
  // Haar measure: p-power, relative to the measure-one base lattice.
  Rat meas(const Lattice& lat, SpaceTag s) const;

  StepFunction fourier(const StepFunction& f, uint64_t cap = 200000) const;

 private:
  uint32_t p_, d_;
  DenseMat<Rat> pairing_;
  AdditiveCharacter psi_;
  Lattice base_primal_;
  Lattice base_dual_;
};

}  // namespace charlift
