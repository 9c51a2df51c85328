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

#include "charlift/lie.hpp"

namespace charlift {

DenseMat<Rat> lie_pairing_matrix() {
  return {{Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}};
}

Mat2 mock_exp(const LevelGroup& g, const LieLevelVec& x) {
  if (g.p() == 2) throw std::domain_error("mock_exp: p = 2 is not supported");
  int64_t m = static_cast<int64_t>(g.modulus());
  auto norm = [m](int64_t v) {
    v %= m;
    if (v < 0) v += m;
    return v;
  };
  // entries of X: (h, e; f, -h); require X in p sl2
  int64_t h = norm(x.h), e = norm(x.e), f = norm(x.f);
  uint32_t p = g.p();
  if (h % p || e % p || f % p) throw std::domain_error("mock_exp: element not in p*sl2 at level");
  int64_t inv2 = static_cast<int64_t>(mod_reduce(Rat(1, 2), g.modulus()));
  // A = 1 + X/2, B = 1 - X/2
  Mat2 A = g.reduce(1 + inv2 * h, inv2 * e, inv2 * f, 1 - inv2 * h);
  Mat2 B = g.reduce(1 - inv2 * h, -inv2 * e, -inv2 * f, 1 + inv2 * h);
  // invert B: det(B) = 1 - det(X)/4 is a unit (X in p sl2)
  uint64_t pn = g.modulus();
  uint64_t det = (uint64_t(B.a) * B.d % pn + pn - uint64_t(B.b) * B.c % pn) % pn;
  uint64_t det_inv = mod_reduce(Rat(1, static_cast<long>(det)), pn);
  Mat2 Binv = g.reduce(static_cast<int64_t>(uint64_t(B.d) * det_inv % pn),
                       static_cast<int64_t>((pn - uint64_t(B.b) % pn) * det_inv % pn),
                       static_cast<int64_t>((pn - uint64_t(B.c) % pn) * det_inv % pn),
                       static_cast<int64_t>(uint64_t(B.a) * det_inv % pn));
  return g.mul(A, Binv);
}

LieLevelVec mock_log(const LevelGroup& g, const Mat2& m) {
  if (g.p() == 2) throw std::domain_error("mock_log: p = 2 is not supported");
  // X = 2 (m - 1)(m + 1)^{-1}
  uint64_t pn = g.modulus();
  Mat2 num = g.reduce(int64_t(m.a) - 1, m.b, m.c, int64_t(m.d) - 1);
  Mat2 den = g.reduce(int64_t(m.a) + 1, m.b, m.c, int64_t(m.d) + 1);
  uint64_t det = (uint64_t(den.a) * den.d % pn + pn - uint64_t(den.b) * den.c % pn) % pn;
  if (det % g.p() == 0) throw std::domain_error("mock_log: matrix not in the Cayley image");
  uint64_t det_inv = mod_reduce(Rat(1, static_cast<long>(det)), pn);
  Mat2 dinv = g.reduce(static_cast<int64_t>(uint64_t(den.d) * det_inv % pn),
                       static_cast<int64_t>((pn - uint64_t(den.b) % pn) * det_inv % pn),
                       static_cast<int64_t>((pn - uint64_t(den.c) % pn) * det_inv % pn),
                       static_cast<int64_t>(uint64_t(den.a) * det_inv % pn));
  Mat2 x2 = g.mul(num, dinv);
  Mat2 x = g.reduce(2 * int64_t(x2.a), 2 * int64_t(x2.b), 2 * int64_t(x2.c), 2 * int64_t(x2.d));
  // traceless check: a + d = 0 mod p^n
  if ((uint64_t(x.a) + x.d) % pn != 0) throw std::logic_error("mock_log: image not traceless");
  return LieLevelVec{static_cast<int64_t>(x.a), static_cast<int64_t>(x.b), static_cast<int64_t>(x.c)};
}

namespace {

// Ad(g) X = g X g^{-1} written in (h, e, f) coordinates; entries of g are
// plain integers, g^{-1} = adjugate for det 1.
DenseMat<Rat> ad_matrix_impl(int64_t a, int64_t b, int64_t c, int64_t d) {
  // X = (h, e; f, -h); g X g^{-1} with g^{-1} = (d, -b; -c, a)
  // column images of H, E, F:
  // g H g^{-1} = (ad + bc, -2ab; 2cd, -(ad + bc))
  // g E g^{-1} = (-ac, a^2; -c^2, ac)
  // g F g^{-1} = (bd, -b^2; d^2, -bd)
  DenseMat<Rat> m(3, std::vector<Rat>(3));
  m[0][0] = Rat(a * d + b * c);
  m[1][0] = Rat(-2 * a * b);
  m[2][0] = Rat(2 * c * d);
  m[0][1] = Rat(-a * c);
  m[1][1] = Rat(a * a);
  m[2][1] = Rat(-c * c);
  m[0][2] = Rat(b * d);
  m[1][2] = Rat(-b * b);
  m[2][2] = Rat(d * d);
  return m;
}

}  // namespace

DenseMat<Rat> ad_matrix(const Mat2& g) {
  return ad_matrix_impl(g.a, g.b, g.c, g.d);
}

DenseMat<Rat> coad_matrix(const Mat2& g) {
  // M_{Ad*(g) y} = g M_y g^{-1} with M_y = (a, b; c, -a): same conjugation in
  // the (a, b, c) coordinates of the dual matrix
  return ad_matrix_impl(g.a, g.b, g.c, g.d);
}

}  // namespace charlift
