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

#include <memory>

#include "charlift/rep.hpp"

namespace charlift {

// Cuspidal representation data of SL2(F_p), p odd, over Z[zeta_{p t}, 1/p]:
// the theta-isotypic slice of the Weil representation attached to the
// anisotropic norm form of F_{p^2}/F_p, where theta is a character of the
// norm-one torus of order t > 1.  For t = 2 the slice splits into two halves
// of dimension (p-1)/2, cut out by the conjugation intertwiner; half = +1/-1
// selects one.
//
// The characteristic-zero matrices are exact cyclotomics with denominators
// only at p, so they reduce modulo any ell != p whose context registers
// zeta_{lcm(p, t)}.  Construction verifies the full multiplication table of
// SL2(F_p) and cuspidality (no nonzero vector fixed by the upper unipotent).
struct CuspidalSigma {
  uint32_t p = 0;
  uint64_t theta_order = 0;
  int half = 0;
  uint32_t dim = 0;
  std::shared_ptr<CycRep> char0;
  std::shared_ptr<FqRep> reduced;
};

CuspidalSigma build_cuspidal(uint32_t p, uint64_t theta_order, int half, const ReductionContext& ctx);

// Least quadratic non-residue mod p.
uint32_t least_nonresidue(uint32_t p);

}  // namespace charlift
