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

#include <array>

#include "charlift/group.hpp"
#include "charlift/lattice.hpp"

namespace charlift {

// Coordinates on sl2: X = h*H + e*E + f*F with H = (1,0;0,-1), E = (0,1;0,0),
// F = (0,0;1,0).  The dual space carries coordinates (a, b, c) representing
// the functional Y -> tr((a, b; c, -a) Y); the pairing in coordinates is
//   <(h,e,f), (a,b,c)> = 2 a h + c e + b f.
struct LieVec {
  Rat h, e, f;
};

struct DualVec {
  Rat a, b, c;
};

inline Rat lie_pair(const LieVec& x, const DualVec& y) {
  return Rat(2) * y.a * x.h + y.c * x.e + y.b * x.f;
}

// the 3x3 pairing matrix P with <x, y> = x^T P y in (h,e,f) x (a,b,c) coords
DenseMat<Rat> lie_pairing_matrix();

// nilpotence of a dual vector: the matrix (a, b; c, -a) is nilpotent iff
// a^2 + bc = 0
inline Rat cone_value(const DualVec& y) { return y.a * y.a + y.b * y.c; }

// Integral Lie element at a working level: traceless 2x2 over Z/p^n encoded
// by coordinates mod p^n.
struct LieLevelVec {
  int64_t h = 0, e = 0, f = 0;
};

// Cayley transform X -> (1 + X/2)(1 - X/2)^{-1}, a bijection
// p sl2(Z/p^n) -> K_1 at level n for odd p, used as the mock exponential.
Mat2 mock_exp(const LevelGroup& g, const LieLevelVec& x);
LieLevelVec mock_log(const LevelGroup& g, const Mat2& m);

// Ad(g) on sl2 in (h,e,f) coordinates (rational 3x3 matrix; g integral at
// level, matrix exact via the adjugate inverse).
DenseMat<Rat> ad_matrix(const Mat2& g);
// Coadjoint action on (a,b,c) coordinates: matrix of Ad*(g), i.e. the dual
// functional moves by conjugating its matrix: M_{Ad*(g) y} = g M_y g^{-1}.
DenseMat<Rat> coad_matrix(const Mat2& g);

}  // namespace charlift
