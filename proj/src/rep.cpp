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

#include "charlift/rep.hpp"

namespace charlift {

Cyclotomic brauer_value(const DenseMat<FqElem>& m, uint64_t order_bound, const ReductionContext& ctx) {
  const FqField* F = m[0][0].field();
  size_t level = ctx.level_of(F);
  // work in a chain field containing mu_{order_bound}
  size_t need = ctx.ensure_order(order_bound);
  size_t work = std::max(level, need);
  const FqField* W = ctx.field_at(work);
  FqOps wops(W);
  DenseMat<FqElem> mw(m.size(), std::vector<FqElem>(m.size(), W->zero()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) mw[i][j] = ctx.embed(m[i][j], work);
  std::vector<FqElem> poly = charpoly(mw, wops);
  // eigenvalues are roots of unity of order dividing order_bound; extract
  // multiplicities by repeated division at each candidate root
  Cyclotomic total;
  size_t found = 0;
  FqElem zeta = ctx.zeta_image(order_bound, work);
  std::vector<FqElem> cur = poly;
  for (uint64_t j = 0; j < order_bound && found < m.size(); ++j) {
    FqElem cand = zeta.pow(BigInt(j));
    while (true) {
      // synthetic division of cur by (x - cand); remainder = cur(cand)
      std::vector<FqElem> quo(cur.size() - 1, W->zero());
      FqElem acc = W->zero();
      for (size_t i = cur.size(); i-- > 0;) {
        if (i == cur.size() - 1) {
          acc = cur[i];
        } else {
          acc = cur[i] + acc * cand;
        }
        if (i > 0) quo[i - 1] = acc;
      }
      if (!acc.is_zero()) break;  // cand is not a root of cur
      cur = quo;
      ++found;
      total += ctx.teich_lift(cand);
      if (cur.size() <= 1) break;
    }
  }
  if (found != m.size())
    throw std::domain_error("brauer_value: eigenvalues not exhausted by mu_" + std::to_string(order_bound));
  return total;
}

LiftedCharacter brauer_character(const FqRep& rho, const ReductionContext& ctx) {
  const Subgroup& j = rho.domain();
  if (!j.is_ellprime(ctx.ell()))
    throw std::domain_error("brauer_character: domain is not an ell'-subgroup at its congruence depth");
  LiftedCharacter out;
  out.dim = rho.dim();
  for (const auto& [rep, size] : j.conjugacy_classes()) {
    uint64_t ord = j.group().element_order(rep);
    out.values.emplace_back(rep, brauer_value(rho.at(rep), ord, ctx));
    (void)size;
  }
  return out;
}

}  // namespace charlift
