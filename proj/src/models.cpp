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

#include "charlift/models.hpp"

#include <algorithm>
#include <set>

namespace charlift {

ProjLine::ProjLine(uint32_t p, uint32_t M) : p_(p), M_(M) {
  pM_ = 1;
  for (uint32_t i = 0; i < M; ++i) pM_ *= p;
  if (M == 0) {
    pts_.push_back({0, 0});
    index_[0] = 0;
    return;
  }
  for (uint64_t y = 0; y < pM_; ++y) pts_.push_back({1, y});
  for (uint64_t x = 0; x < pM_; x += p) pts_.push_back({x, 1});
  for (size_t i = 0; i < pts_.size(); ++i) index_[pts_[i].first * pM_ + pts_[i].second] = i;
}

size_t ProjLine::canonical(uint64_t x, uint64_t y) const {
  x %= pM_;
  y %= pM_;
  if (x % p_ != 0) {
    uint64_t xi = mod_reduce(Rat(1, static_cast<long>(x)), pM_);
    return index_.at(1 * pM_ + (y * xi) % pM_);
  }
  if (y % p_ == 0) throw std::logic_error("ProjLine: row is not primitive");
  uint64_t yi = mod_reduce(Rat(1, static_cast<long>(y)), pM_);
  return index_.at(((x * yi) % pM_) * pM_ + 1);
}

size_t ProjLine::act(size_t idx, const Mat2& g) const {
  if (M_ == 0) return 0;
  auto [x, y] = pts_[idx];
  uint64_t xa = (x * (g.a % pM_) + y * (g.c % pM_)) % pM_;
  uint64_t yb = (x * (g.b % pM_) + y * (g.d % pM_)) % pM_;
  return canonical(xa, yb);
}

std::array<int64_t, 4> ProjLine::section_raw(size_t idx) const {
  if (M_ == 0) return {1, 0, 0, 1};
  auto [x, y] = pts_[idx];
  if (x == 1) return {1, static_cast<int64_t>(y), 0, 1};
  return {static_cast<int64_t>(x), 1, -1, 0};
}

std::vector<Mat2> quotient_elements(const LevelGroup& g, uint32_t T, const std::vector<Mat2>& gens,
                                    uint64_t cap) {
  // BFS of <gens> at the working level, deduplicated modulo K_T: one
  // genuine working-level representative per class
  std::set<uint64_t> seen;
  std::vector<Mat2> reps = {g.id()};
  seen.insert(pack_mat(g.reduce_to(g.id(), T)));
  for (size_t qi = 0; qi < reps.size(); ++qi) {
    for (const Mat2& s : gens) {
      Mat2 nxt = g.mul(reps[qi], s);
      if (!seen.insert(pack_mat(g.reduce_to(nxt, T))).second) continue;
      if (reps.size() >= cap) throw std::length_error("quotient_elements: cap exceeded");
      reps.push_back(nxt);
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

SmoothRepModel SmoothRepModel::trivial(std::shared_ptr<const LevelGroup> g,
                                       std::shared_ptr<const ReductionContext> ctx) {
  return SmoothRepModel(Kind::Trivial, std::move(g), std::move(ctx));
}

SmoothRepModel SmoothRepModel::steinberg(std::shared_ptr<const LevelGroup> g,
                                         std::shared_ptr<const ReductionContext> ctx) {
  SmoothRepModel m(Kind::Steinberg, std::move(g), std::move(ctx));
  for (uint32_t n = 1; n <= m.g_->level(); ++n)
    m.lines_.emplace(n, std::make_shared<ProjLine>(m.g_->p(), n));
  return m;
}

SmoothRepModel SmoothRepModel::depth_zero_sc(std::shared_ptr<const LevelGroup> g,
                                             std::shared_ptr<const ReductionContext> ctx,
                                             uint64_t theta_order, int half) {
  SmoothRepModel m(Kind::DepthZeroSC, g, ctx);
  m.sigma_ = build_cuspidal(g->p(), theta_order, half, *ctx);
  for (uint32_t mm = 0; 2 * mm + 1 <= g->level(); ++mm) {
    Piece pc;
    pc.m = mm;
    pc.line = std::make_shared<ProjLine>(g->p(), 2 * mm);
    m.pieces_.emplace(mm, std::move(pc));
  }
  return m;
}

SmoothRepModel SmoothRepModel::inflation(std::shared_ptr<const LevelGroup> g,
                                         std::shared_ptr<const ReductionContext> ctx,
                                         std::shared_ptr<const FqRep> rho, uint32_t base_level,
                                         std::shared_ptr<const CycRep> companion) {
  SmoothRepModel m(Kind::Inflation, std::move(g), std::move(ctx));
  m.rho_ = std::move(rho);
  m.rho0_ = std::move(companion);
  m.base_level_ = base_level;
  if (m.rho_->domain().group().level() != base_level)
    throw std::domain_error("inflation: representation level mismatch");
  return m;
}

std::string SmoothRepModel::describe() const {
  switch (kind_) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Inflation:
      return "inflation";
    case Kind::Steinberg:
      return "steinberg";
    case Kind::DepthZeroSC:
      return "depth_zero_sc(theta_order=" + std::to_string(sigma_->theta_order) +
             ",half=" + std::to_string(sigma_->half) + ")";
  }
  return "?";
}

uint32_t SmoothRepModel::max_certified_level() const {
  uint32_t L = g_->level();
  switch (kind_) {
    case Kind::Trivial:
      return L;
    case Kind::Inflation:
      return L;
    case Kind::Steinberg:
      return L;
    case Kind::DepthZeroSC: {
      // need level 2*ceil(n/2)+1 for the first-omitted-term certificate
      uint32_t n = L;
      while (n > 0 && 2 * ((n + 1) / 2) + 1 > L) --n;
      return n;
    }
  }
  return 0;
}

const SmoothRepModel::Piece& SmoothRepModel::piece(uint32_t m) const {
  auto it = pieces_.find(m);
  if (it == pieces_.end()) throw std::domain_error("model: Cartan slice beyond the working level");
  return it->second;
}

std::vector<uint32_t> SmoothRepModel::pieces_at(uint32_t n) const {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; 2 * m < n; ++m) out.push_back(m);
  return out;
}

const ProjLine& SmoothRepModel::line_at(uint32_t n) const {
  auto it = lines_.find(n);
  if (it == lines_.end()) throw std::domain_error("model: level beyond the working level");
  return *it->second;
}

uint64_t SmoothRepModel::dim_at(uint32_t n) const {
  if (n == 0 || n > max_certified_level())
    throw std::domain_error("dim_at: level outside certification");
  switch (kind_) {
    case Kind::Trivial:
      return 1;
    case Kind::Steinberg:
      return line_at(n).size() - 1;
    case Kind::DepthZeroSC: {
      uint64_t d = 0;
      for (uint32_t m : pieces_at(n)) d += piece(m).line->size() * sigma_->dim;
      return d;
    }
    case Kind::Inflation: {
      if (n >= base_level_) return rho_->dim();
      return twisted_dim({g_->id()}, n, nullptr);
    }
  }
  return 0;
}

Mat2 SmoothRepModel::sigma_arg(uint32_t m, const Mat2& a) const {
  uint32_t p = g_->p();
  if (m == 0) return g_->reduce_to(a, 1);
  uint64_t p2m = 1;
  for (uint32_t i = 0; i < 2 * m; ++i) p2m *= p;
  if (a.b % p2m != 0) throw std::logic_error("sigma_arg: cocycle not in the congruence subgroup");
  if (2 * m + 1 > g_->level()) throw std::logic_error("sigma_arg: working level too shallow");
  uint64_t t = (a.b / p2m) % p;
  return Mat2{a.a % p, static_cast<uint32_t>(t), 0, a.d % p};
}

namespace {

// fixed points of the right action of g on a projective line
std::vector<size_t> fixed_points(const ProjLine& line, const Mat2& g) {
  std::vector<size_t> out;
  for (size_t i = 0; i < line.size(); ++i)
    if (line.act(i, g) == i) out.push_back(i);
  return out;
}

}  // namespace

Cyclotomic SmoothRepModel::brauer_at(const Mat2& gamma, uint32_t n) const {
  if (n == 0 || n > max_certified_level())
    throw std::domain_error("brauer_at: level outside certification");
  switch (kind_) {
    case Kind::Trivial:
      return Cyclotomic(1);
    case Kind::Steinberg: {
      long fix = static_cast<long>(fixed_points(line_at(n), gamma).size());
      return Cyclotomic(Rat(fix - 1));
    }
    case Kind::DepthZeroSC: {
      Cyclotomic total;
      LevelGroup level1(g_->p(), 1);
      for (uint32_t m : pieces_at(n)) {
        const ProjLine& line = *piece(m).line;
        for (size_t pt : fixed_points(line, gamma)) {
          auto s = line.section_raw(pt);
          Mat2 sec = g_->reduce(s[0], s[1], s[2], s[3]);
          Mat2 a = g_->mul(g_->mul(sec, gamma), g_->inv(sec));
          Mat2 arg = sigma_arg(m, a);
          uint64_t ord = level1.element_order(arg);
          total += brauer_value(sigma_->reduced->at(arg), ord, *ctx_);
        }
      }
      return total;
    }
    case Kind::Inflation: {
      Mat2 gb = g_->reduce_to(gamma, base_level_);
      LevelGroup base(g_->p(), base_level_);
      if (n >= base_level_) {
        return brauer_value(rho_->at(gb), base.element_order(gb), *ctx_);
      }
      // restrict to the K_n-fixed subspace
      FqOps ops(rho_->ops().F);
      auto basis = [&] {
        std::vector<DenseMat<FqElem>> mats;
        for (const Mat2& h : base.congruence_gens(n)) mats.push_back(rho_->at(h));
        DenseMat<FqElem> stacked;
        for (const auto& mm : mats)
          for (size_t r = 0; r < mm.size(); ++r) {
            auto row = mm[r];
            row[r] = row[r] - ops.one();
            stacked.push_back(row);
          }
        return kernel_basis(stacked, ops);
      }();
      if (basis.empty()) return Cyclotomic();
      // matrix of gamma on the fixed basis: solve basis * x = gamma * b_j
      DenseMat<FqElem> bt(basis[0].size(), std::vector<FqElem>(basis.size(), ops.zero()));
      for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < basis[0].size(); ++i) bt[i][j] = basis[j][i];
      const auto& mg = rho_->at(gb);
      DenseMat<FqElem> res(basis.size(), std::vector<FqElem>(basis.size(), ops.zero()));
      for (size_t j = 0; j < basis.size(); ++j) {
        std::vector<FqElem> img(basis[0].size(), ops.zero());
        for (size_t r = 0; r < basis[0].size(); ++r)
          for (size_t c = 0; c < basis[0].size(); ++c)
            if (!ops.is_zero(mg[r][c])) img[r] = img[r] + mg[r][c] * basis[j][c];
        auto sol = mat_solve(bt, img, ops);
        if (!sol) throw std::logic_error("brauer_at: fixed space is not gamma-stable");
        for (size_t i = 0; i < basis.size(); ++i) res[i][j] = (*sol)[i];
      }
      return brauer_value(res, base.element_order(gb), *ctx_);
    }
  }
  return Cyclotomic();
}

bool SmoothRepModel::has_char0() const {
  switch (kind_) {
    case Kind::Trivial:
    case Kind::Steinberg:
      return true;
    case Kind::DepthZeroSC:
      return sigma_->char0 != nullptr;
    case Kind::Inflation:
      return rho0_ != nullptr;
  }
  return false;
}

Cyclotomic SmoothRepModel::char0_trace_at(const Mat2& gamma, uint32_t n) const {
  if (!has_char0()) throw std::domain_error("char0_trace_at: no characteristic-zero companion");
  switch (kind_) {
    case Kind::Trivial:
      return Cyclotomic(1);
    case Kind::Steinberg: {
      long fix = static_cast<long>(fixed_points(line_at(n), gamma).size());
      return Cyclotomic(Rat(fix - 1));
    }
    case Kind::DepthZeroSC: {
      Cyclotomic total;
      CycOps cops;
      for (uint32_t m : pieces_at(n)) {
        const ProjLine& line = *piece(m).line;
        for (size_t pt : fixed_points(line, gamma)) {
          auto s = line.section_raw(pt);
          Mat2 sec = g_->reduce(s[0], s[1], s[2], s[3]);
          Mat2 a = g_->mul(g_->mul(sec, gamma), g_->inv(sec));
          total += mat_trace(sigma_->char0->at(sigma_arg(m, a)), cops);
        }
      }
      return total;
    }
    case Kind::Inflation: {
      if (n < base_level_) throw std::domain_error("char0_trace_at: shallow levels not supported for inflation");
      CycOps cops;
      return mat_trace(rho0_->at(g_->reduce_to(gamma, base_level_)), cops);
    }
  }
  return Cyclotomic();
}

FqElem SmoothRepModel::mod_trace_at(const Mat2& gamma, uint32_t n) const {
  const FqField* F = ctx_->rep_field();
  FqOps ops(F);
  switch (kind_) {
    case Kind::Trivial:
      return F->one();
    case Kind::Steinberg: {
      long fix = static_cast<long>(fixed_points(line_at(n), gamma).size());
      return F->from_int(fix - 1);
    }
    case Kind::DepthZeroSC: {
      FqElem total = F->zero();
      for (uint32_t m : pieces_at(n)) {
        const ProjLine& line = *piece(m).line;
        for (size_t pt : fixed_points(line, gamma)) {
          auto s = line.section_raw(pt);
          Mat2 sec = g_->reduce(s[0], s[1], s[2], s[3]);
          Mat2 a = g_->mul(g_->mul(sec, gamma), g_->inv(sec));
          total = total + mat_trace(sigma_->reduced->at(sigma_arg(m, a)), ops);
        }
      }
      return total;
    }
    case Kind::Inflation: {
      if (n < base_level_) {
        // trace on the fixed subspace equals the Brauer value reduced
        return ctx_->reduce_at(brauer_at(gamma, n), 0);
      }
      return mat_trace(rho_->at(g_->reduce_to(gamma, base_level_)), ops);
    }
  }
  return F->zero();
}

SmoothRepModel::OrbitData SmoothRepModel::orbit_data(uint32_t m, const std::vector<Mat2>& h_gens) const {
  const ProjLine& line = *piece(m).line;
  OrbitData out;
  std::vector<bool> seen(line.size(), false);
  for (size_t start = 0; start < line.size(); ++start) {
    if (seen[start]) continue;
    std::vector<size_t> orbit = {start};
    std::map<size_t, Mat2> transversal;  // point -> u with start * u = point
    transversal[start] = g_->id();
    seen[start] = true;
    std::vector<Mat2> schreier;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      size_t cur = orbit[qi];
      const Mat2& ucur = transversal.at(cur);
      for (const Mat2& h : h_gens) {
        size_t nxt = line.act(cur, h);
        Mat2 unxt_cand = g_->mul(ucur, h);
        if (!seen[nxt]) {
          seen[nxt] = true;
          transversal[nxt] = unxt_cand;
          orbit.push_back(nxt);
        } else {
          // Schreier generator u_cur h u_nxt^{-1} stabilizes the base point
          Mat2 s = g_->mul(unxt_cand, g_->inv(transversal.at(nxt)));
          if (!(s == g_->id())) schreier.push_back(s);
        }
      }
    }
    out.orbits.push_back(std::move(orbit));
    out.schreier.push_back(std::move(schreier));
  }
  return out;
}

uint64_t SmoothRepModel::twisted_dim(const std::vector<Mat2>& h_gens, uint32_t n,
                                     const std::function<FqElem(const Mat2&)>* chi) const {
  if (n == 0 || n > max_certified_level())
    throw std::domain_error("twisted_dim: level outside certification");
  auto chi_val = [&](const Mat2& x) -> FqElem {
    if (!chi) return ctx_->rep_field()->one();
    return (*chi)(x);
  };
  auto chi_trivial_on = [&](const std::vector<Mat2>& xs) {
    for (const Mat2& x : xs) {
      FqElem v = chi_val(x);
      if (!(v == v.field()->one())) return false;
    }
    return true;
  };
  switch (kind_) {
    case Kind::Trivial:
      return chi_trivial_on(h_gens) ? 1 : 0;
    case Kind::Steinberg: {
      // orbit sums with chi-trivial stabilizer conditions, minus the
      // constants line when chi is trivial on H
      const ProjLine& line = line_at(n);
      std::vector<bool> seen(line.size(), false);
      uint64_t dim = 0;
      for (size_t start = 0; start < line.size(); ++start) {
        if (seen[start]) continue;
        std::vector<size_t> orbit = {start};
        std::map<size_t, Mat2> transversal = {{start, g_->id()}};
        seen[start] = true;
        bool good = true;
        for (size_t qi = 0; qi < orbit.size(); ++qi) {
          size_t cur = orbit[qi];
          for (const Mat2& h : h_gens) {
            size_t nxt = line.act(cur, h);
            Mat2 u = g_->mul(transversal.at(cur), h);
            if (!seen[nxt]) {
              seen[nxt] = true;
              transversal[nxt] = u;
              orbit.push_back(nxt);
            } else {
              Mat2 s = g_->mul(u, g_->inv(transversal.at(nxt)));
              if (good && !(s == g_->id())) {
                FqElem v = chi_val(s);
                if (!(v == v.field()->one())) good = false;
              }
            }
          }
        }
        if (good) ++dim;
      }
      if (chi_trivial_on(h_gens)) dim -= 1;  // the constants line
      return dim;
    }
    case Kind::DepthZeroSC: {
      uint64_t dim = 0;
      for (uint32_t m : pieces_at(n)) {
        OrbitData od = orbit_data(m, h_gens);
        const ProjLine& line = *piece(m).line;
        for (size_t o = 0; o < od.orbits.size(); ++o) {
          size_t base_pt = od.orbits[o][0];
          auto s = line.section_raw(base_pt);
          Mat2 sec = g_->reduce(s[0], s[1], s[2], s[3]);
          Mat2 seci = g_->inv(sec);
          // conditions sigma(arg) v = chi(s) v over the work field
          std::vector<DenseMat<FqElem>> conds;
          size_t work = 0;
          std::vector<std::pair<Mat2, FqElem>> args;
          for (const Mat2& sg : od.schreier[o]) {
            Mat2 arg = sigma_arg(m, g_->mul(g_->mul(sec, sg), seci));
            FqElem cv = chi_val(sg);
            work = std::max(work, ctx_->level_of(cv.field()));
            args.emplace_back(arg, cv);
          }
          work = std::max(work, ctx_->level_of(sigma_->reduced->ops().F));
          const FqField* W = ctx_->field_at(work);
          FqOps wops(W);
          if (args.empty()) {
            dim += sigma_->dim;
            continue;
          }
          DenseMat<FqElem> stacked;
          for (auto& [arg, cv] : args) {
            const auto& blk = sigma_->reduced->at(arg);
            FqElem cw = ctx_->embed(cv, work);
            for (size_t r = 0; r < blk.size(); ++r) {
              std::vector<FqElem> row(blk.size(), W->zero());
              for (size_t c = 0; c < blk.size(); ++c) row[c] = ctx_->embed(blk[r][c], work);
              row[r] = row[r] - cw;
              stacked.push_back(std::move(row));
            }
          }
          dim += sigma_->dim - mat_rank(std::move(stacked), wops);
        }
      }
      return dim;
    }
    case Kind::Inflation: {
      uint32_t eff = std::min(n, base_level_);
      LevelGroup base(g_->p(), base_level_);
      // operators: h_gens plus K_eff generators (fixed under K_eff)
      std::vector<Mat2> all = h_gens;
      for (const Mat2& x : base.congruence_gens(eff)) all.push_back(g_->reduce(x.a, x.b, x.c, x.d));
      size_t work = ctx_->level_of(rho_->ops().F);
      std::vector<std::pair<DenseMat<FqElem>, FqElem>> ops_list;
      for (size_t i = 0; i < all.size(); ++i) {
        FqElem cv = i < h_gens.size() ? chi_val(all[i]) : ctx_->rep_field()->one();
        work = std::max(work, ctx_->level_of(cv.field()));
        ops_list.emplace_back(rho_->at(g_->reduce_to(all[i], base_level_)), cv);
      }
      const FqField* W = ctx_->field_at(work);
      FqOps wops(W);
      DenseMat<FqElem> stacked;
      size_t dimr = rho_->dim();
      for (auto& [mtx, cv] : ops_list) {
        FqElem cw = ctx_->embed(cv, work);
        for (size_t r = 0; r < dimr; ++r) {
          std::vector<FqElem> row(dimr, W->zero());
          for (size_t c = 0; c < dimr; ++c) row[c] = ctx_->embed(mtx[r][c], work);
          row[r] = row[r] - cw;
          stacked.push_back(std::move(row));
        }
      }
      return dimr - mat_rank(std::move(stacked), wops);
    }
  }
  return 0;
}

Cyclotomic SmoothRepModel::twisted_theta_sum(const std::vector<Mat2>& h_gens, const BigInt& h_order,
                                             uint32_t n,
                                             const std::function<Cyclotomic(const Mat2&)>& chi_dag) const {
  if (n == 0 || n > max_certified_level())
    throw std::domain_error("twisted_theta_sum: level outside certification");
  auto chi_trivial_on = [&](const std::vector<Mat2>& xs) {
    for (const Mat2& x : xs)
      if (!(chi_dag(x) == Cyclotomic(1))) return false;
    return true;
  };
  switch (kind_) {
    case Kind::Trivial:
      return chi_trivial_on(h_gens) ? Cyclotomic(Rat(h_order)) : Cyclotomic();
    case Kind::Steinberg: {
      // sum over points of the chi-sum over stabilizers, minus the full sum
      const ProjLine& line = line_at(n);
      std::vector<bool> seen(line.size(), false);
      Cyclotomic total;
      for (size_t start = 0; start < line.size(); ++start) {
        if (seen[start]) continue;
        std::vector<size_t> orbit = {start};
        std::map<size_t, Mat2> transversal = {{start, g_->id()}};
        seen[start] = true;
        bool good = true;
        for (size_t qi = 0; qi < orbit.size(); ++qi) {
          size_t cur = orbit[qi];
          for (const Mat2& h : h_gens) {
            size_t nxt = line.act(cur, h);
            Mat2 u = g_->mul(transversal.at(cur), h);
            if (!seen[nxt]) {
              seen[nxt] = true;
              transversal[nxt] = u;
              orbit.push_back(nxt);
            } else if (good) {
              Mat2 s = g_->mul(u, g_->inv(transversal.at(nxt)));
              if (!(s == g_->id()) && !(chi_dag(s) == Cyclotomic(1))) good = false;
            }
          }
        }
        if (good) {
          // each point of the orbit contributes |Stab| = h_order / orbit size
          Rat stab(h_order / BigInt(orbit.size()));
          total += Cyclotomic(stab * Rat(static_cast<long>(orbit.size())));
        }
      }
      if (chi_trivial_on(h_gens)) total -= Cyclotomic(Rat(h_order));
      return total;
    }
    case Kind::DepthZeroSC: {
      Cyclotomic total;
      LevelGroup level1(g_->p(), 1);
      uint32_t p = g_->p();
      for (uint32_t m : pieces_at(n)) {
        OrbitData od = orbit_data(m, h_gens);
        const ProjLine& line = *piece(m).line;
        for (size_t o = 0; o < od.orbits.size(); ++o) {
          size_t base_pt = od.orbits[o][0];
          auto sr = line.section_raw(base_pt);
          Mat2 sec = g_->reduce(sr[0], sr[1], sr[2], sr[3]);
          Mat2 seci = g_->inv(sec);
          BigInt stab = h_order / BigInt(od.orbits[o].size());
          // image of the stabilizer in SL2(F_p): a p-group, so trivial or
          // cyclic of order p
          std::vector<std::pair<Mat2, Mat2>> gen_args;  // (schreier gen, arg)
          Mat2 nontriv = level1.id();
          Mat2 nontriv_gen = g_->id();
          bool have_nontriv = false;
          for (const Mat2& sg : od.schreier[o]) {
            Mat2 arg = sigma_arg(m, g_->mul(g_->mul(sec, sg), seci));
            gen_args.emplace_back(sg, arg);
            if (!(arg == level1.id()) && !have_nontriv) {
              nontriv = arg;
              nontriv_gen = sg;
              have_nontriv = true;
            }
          }
          Cyclotomic orbit_val;
          if (!have_nontriv) {
            // image trivial: contribution dim * chi-sum over the stabilizer
            bool good = true;
            for (auto& [sg, arg] : gen_args)
              if (!(chi_dag(sg) == Cyclotomic(1))) {
                good = false;
                break;
              }
            if (good) orbit_val = Cyclotomic(Rat(stab) * Rat(static_cast<long>(sigma_->dim)));
          } else {
            // image cyclic of order p generated by nontriv
            Cyclotomic lam = chi_dag(nontriv_gen);
            // chi restricted to the kernel must be trivial:
            // lam^p = 1 and chi(g_i) = lam^{e_i} for every schreier gen
            bool good = true;
            Cyclotomic lam_p(1);
            for (uint32_t i = 0; i < p; ++i) lam_p *= lam;
            if (!(lam_p == Cyclotomic(1))) good = false;
            // powers of nontriv for discrete logs
            std::vector<Mat2> powers(p, level1.id());
            for (uint32_t k = 1; k < p; ++k) powers[k] = level1.mul(powers[k - 1], nontriv);
            for (auto& [sg, arg] : gen_args) {
              if (!good) break;
              uint32_t e = p;
              for (uint32_t k = 0; k < p; ++k)
                if (arg == powers[k]) {
                  e = k;
                  break;
                }
              if (e == p) throw std::logic_error("twisted_theta_sum: stabilizer image not cyclic of order p");
              Cyclotomic lam_e(1);
              for (uint32_t i = 0; i < e; ++i) lam_e *= lam;
              if (!(chi_dag(sg) == lam_e)) good = false;
            }
            if (good) {
              BigInt dsize = stab / p;
              Cyclotomic lam_inv = lam.inverse();
              Cyclotomic lam_pow(1);
              for (uint32_t k = 0; k < p; ++k) {
                uint64_t ord = level1.element_order(powers[k]);
                orbit_val += lam_pow * brauer_value(sigma_->reduced->at(powers[k]), ord, *ctx_);
                lam_pow *= lam_inv;
              }
              orbit_val *= Rat(dsize);
            }
          }
          if (!orbit_val.is_zero()) total += orbit_val * Rat(static_cast<long>(od.orbits[o].size()));
        }
      }
      return total;
    }
    case Kind::Inflation: {
      // dense fallback: enumerate working-level representatives of H/K_n
      std::vector<Mat2> hq = quotient_elements(*g_, n, h_gens);
      if (BigInt(hq.size()) != h_order)
        throw std::domain_error("twisted_theta_sum: enumerated quotient order mismatch");
      Cyclotomic total;
      for (const Mat2& h : hq) total += chi_dag(h).inverse() * brauer_at(h, n);
      return total;
    }
  }
  return Cyclotomic();
}

FqRep SmoothRepModel::dense_rep(const Subgroup& j, uint32_t n) const {
  const FqField* F = kind_ == Kind::Inflation ? rho_->ops().F
                     : kind_ == Kind::DepthZeroSC ? sigma_->reduced->ops().F
                                                  : ctx_->rep_field();
  FqOps ops(F);
  std::vector<DenseMat<FqElem>> gen_mats;
  switch (kind_) {
    case Kind::Trivial: {
      for (size_t i = 0; i < j.gens().size(); ++i) gen_mats.push_back({{F->one()}});
      break;
    }
    case Kind::Steinberg: {
      const ProjLine& line = line_at(n);
      size_t npts = line.size();
      for (const Mat2& g : j.gens()) {
        Mat2 gi = g_->inv(g);
        DenseMat<FqElem> mtx(npts - 1, std::vector<FqElem>(npts - 1, F->zero()));
        // basis: images of delta_pt for pt = 1..npts-1 in C[X]/<1>
        for (size_t pt = 1; pt < npts; ++pt) {
          size_t q = line.act(pt, gi);
          if (q != 0) {
            mtx[q - 1][pt - 1] = mtx[q - 1][pt - 1] + F->one();
          } else {
            for (size_t r = 1; r < npts; ++r) mtx[r - 1][pt - 1] = mtx[r - 1][pt - 1] - F->one();
          }
        }
        gen_mats.push_back(std::move(mtx));
      }
      break;
    }
    case Kind::DepthZeroSC: {
      auto ms = pieces_at(n);
      std::vector<size_t> offset;
      size_t dim = 0;
      for (uint32_t m : ms) {
        offset.push_back(dim);
        dim += piece(m).line->size() * sigma_->dim;
      }
      uint32_t ds = sigma_->dim;
      for (const Mat2& g : j.gens()) {
        Mat2 gi = g_->inv(g);
        DenseMat<FqElem> mtx(dim, std::vector<FqElem>(dim, F->zero()));
        for (size_t mi = 0; mi < ms.size(); ++mi) {
          const ProjLine& line = *piece(ms[mi]).line;
          for (size_t pt = 0; pt < line.size(); ++pt) {
            size_t q = line.act(pt, gi);
            auto sq = line.section_raw(q);
            auto sp = line.section_raw(pt);
            Mat2 secq = g_->reduce(sq[0], sq[1], sq[2], sq[3]);
            Mat2 secp = g_->reduce(sp[0], sp[1], sp[2], sp[3]);
            Mat2 a = g_->mul(g_->mul(secq, g), g_->inv(secp));
            const auto& blk = sigma_->reduced->at(sigma_arg(ms[mi], a));
            for (uint32_t r = 0; r < ds; ++r)
              for (uint32_t c = 0; c < ds; ++c)
                mtx[offset[mi] + q * ds + r][offset[mi] + pt * ds + c] = blk[r][c];
          }
        }
        gen_mats.push_back(std::move(mtx));
      }
      break;
    }
    case Kind::Inflation: {
      if (n < base_level_) throw std::domain_error("dense_rep: shallow inflation levels unsupported");
      for (const Mat2& g : j.gens()) gen_mats.push_back(rho_->at(g_->reduce_to(g, base_level_)));
      break;
    }
  }
  return FqRep(ops, j, std::move(gen_mats));
}

CycRep SmoothRepModel::dense_char0_rep(const Subgroup& j, uint32_t n) const {
  if (!has_char0()) throw std::domain_error("dense_char0_rep: no characteristic-zero companion");
  CycOps ops;
  std::vector<DenseMat<Cyclotomic>> gen_mats;
  switch (kind_) {
    case Kind::Trivial: {
      for (size_t i = 0; i < j.gens().size(); ++i) gen_mats.push_back({{Cyclotomic(1)}});
      break;
    }
    case Kind::Steinberg: {
      const ProjLine& line = line_at(n);
      size_t npts = line.size();
      for (const Mat2& g : j.gens()) {
        Mat2 gi = g_->inv(g);
        DenseMat<Cyclotomic> mtx(npts - 1, std::vector<Cyclotomic>(npts - 1, Cyclotomic()));
        for (size_t pt = 1; pt < npts; ++pt) {
          size_t q = line.act(pt, gi);
          if (q != 0) {
            mtx[q - 1][pt - 1] += Cyclotomic(1);
          } else {
            for (size_t r = 1; r < npts; ++r) mtx[r - 1][pt - 1] -= Cyclotomic(1);
          }
        }
        gen_mats.push_back(std::move(mtx));
      }
      break;
    }
    case Kind::DepthZeroSC: {
      auto ms = pieces_at(n);
      std::vector<size_t> offset;
      size_t dim = 0;
      for (uint32_t m : ms) {
        offset.push_back(dim);
        dim += piece(m).line->size() * sigma_->dim;
      }
      uint32_t ds = sigma_->dim;
      for (const Mat2& g : j.gens()) {
        Mat2 gi = g_->inv(g);
        DenseMat<Cyclotomic> mtx(dim, std::vector<Cyclotomic>(dim, Cyclotomic()));
        for (size_t mi = 0; mi < ms.size(); ++mi) {
          const ProjLine& line = *piece(ms[mi]).line;
          for (size_t pt = 0; pt < line.size(); ++pt) {
            size_t q = line.act(pt, gi);
            auto sq = line.section_raw(q);
            auto sp = line.section_raw(pt);
            Mat2 secq = g_->reduce(sq[0], sq[1], sq[2], sq[3]);
            Mat2 secp = g_->reduce(sp[0], sp[1], sp[2], sp[3]);
            Mat2 a = g_->mul(g_->mul(secq, g), g_->inv(secp));
            const auto& blk = sigma_->char0->at(sigma_arg(ms[mi], a));
            for (uint32_t r = 0; r < ds; ++r)
              for (uint32_t c = 0; c < ds; ++c)
                mtx[offset[mi] + q * ds + r][offset[mi] + pt * ds + c] = blk[r][c];
          }
        }
        gen_mats.push_back(std::move(mtx));
      }
      break;
    }
    case Kind::Inflation: {
      if (n < base_level_) throw std::domain_error("dense_char0_rep: shallow inflation levels unsupported");
      for (const Mat2& g : j.gens()) gen_mats.push_back(rho0_->at(g_->reduce_to(g, base_level_)));
      break;
    }
  }
  return CycRep(ops, j, std::move(gen_mats));
}

SmoothRepModel::Certificate SmoothRepModel::certificate(uint32_t n) const {
  Certificate cert;
  cert.level = n;
  if (kind_ != Kind::DepthZeroSC) {
    cert.applicable = false;
    cert.ok = true;
    return cert;
  }
  cert.applicable = true;
  uint32_t mstar = (n + 1) / 2;  // first omitted Cartan parameter: 2m* >= n
  cert.first_omitted = mstar;
  if (2 * mstar + 1 > g_->level())
    throw std::domain_error("certificate: working level too shallow for the omitted-term check");
  // K_n-fixed vectors of the omitted slice, by the same orbit machinery
  ProjLine line(g_->p(), 2 * mstar);
  std::vector<Mat2> kn = g_->congruence_gens(n);
  // orbits of K_n on the omitted line with Schreier stabilizer generators
  std::vector<bool> seen(line.size(), false);
  uint64_t dim = 0;
  FqOps ops(sigma_->reduced->ops().F);
  for (size_t start = 0; start < line.size(); ++start) {
    if (seen[start]) continue;
    std::vector<size_t> orbit = {start};
    std::map<size_t, Mat2> transversal = {{start, g_->id()}};
    seen[start] = true;
    std::vector<Mat2> schreier;
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      size_t cur = orbit[qi];
      for (const Mat2& h : kn) {
        size_t nxt = line.act(cur, h);
        Mat2 u = g_->mul(transversal.at(cur), h);
        if (!seen[nxt]) {
          seen[nxt] = true;
          transversal[nxt] = u;
          orbit.push_back(nxt);
        } else {
          Mat2 s = g_->mul(u, g_->inv(transversal.at(nxt)));
          if (!(s == g_->id())) schreier.push_back(s);
        }
      }
    }
    auto sr = line.section_raw(orbit[0]);
    Mat2 sec = g_->reduce(sr[0], sr[1], sr[2], sr[3]);
    Mat2 seci = g_->inv(sec);
    DenseMat<FqElem> stacked;
    for (const Mat2& sg : schreier) {
      Mat2 cocycle = g_->mul(g_->mul(sec, sg), seci);
      uint32_t p = g_->p();
      uint64_t p2m = 1;
      for (uint32_t i = 0; i < 2 * mstar; ++i) p2m *= p;
      if (cocycle.b % p2m != 0) throw std::logic_error("certificate: cocycle escapes the congruence subgroup");
      uint64_t t = (cocycle.b / p2m) % p;
      Mat2 arg{cocycle.a % p, static_cast<uint32_t>(t), 0, cocycle.d % p};
      const auto& blk = sigma_->reduced->at(arg);
      for (size_t r = 0; r < blk.size(); ++r) {
        auto row = blk[r];
        row[r] = row[r] - ops.one();
        stacked.push_back(row);
      }
    }
    if (schreier.empty()) {
      dim += sigma_->dim;
    } else {
      dim += sigma_->dim - mat_rank(std::move(stacked), ops);
    }
  }
  cert.extra_dim = dim;
  cert.ok = (dim == 0);
  return cert;
}

}  // namespace charlift
