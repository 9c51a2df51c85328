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
#include <functional>
#include <optional>

#include "charlift/rep.hpp"
#include "charlift/weil.hpp"

namespace charlift {

// P^1(Z/p^M): canonical primitive rows (x : y) with an SL2 section; the coset
// space of the congruence group with upper-right entries divisible by p^M.
class ProjLine {
 public:
  ProjLine(uint32_t p, uint32_t M);

  uint32_t level() const { return M_; }
  uint64_t modulus() const { return pM_; }
  size_t size() const { return pts_.size(); }
  std::pair<uint64_t, uint64_t> point(size_t idx) const { return pts_[idx]; }

  // right action on rows; g given at any level >= M (entries reduced here)
  size_t act(size_t idx, const Mat2& g) const;
  // SL2 lift with top row = the point, entries exact small integers (reduce
  // at the caller's working level)
  std::array<int64_t, 4> section_raw(size_t idx) const;

 private:
  size_t canonical(uint64_t x, uint64_t y) const;
  uint32_t p_, M_;
  uint64_t pM_;
  std::vector<std::pair<uint64_t, uint64_t>> pts_;
  std::map<uint64_t, size_t> index_;
};

// Smooth representation model of SL2(Q_p), presented through the finite
// spaces pi^{K_n} with their K-action.  All evaluations are exact.
class SmoothRepModel {
 public:
  enum class Kind { Trivial, Inflation, Steinberg, DepthZeroSC };

  static SmoothRepModel trivial(std::shared_ptr<const LevelGroup> g,
                                std::shared_ptr<const ReductionContext> ctx);
  static SmoothRepModel steinberg(std::shared_ptr<const LevelGroup> g,
                                  std::shared_ptr<const ReductionContext> ctx);
  static SmoothRepModel depth_zero_sc(std::shared_ptr<const LevelGroup> g,
                                      std::shared_ptr<const ReductionContext> ctx,
                                      uint64_t theta_order, int half);
  // inflation of a dense rep of K/K_{base} (with optional characteristic-zero
  // companion on the same generators)
  static SmoothRepModel inflation(std::shared_ptr<const LevelGroup> g,
                                  std::shared_ptr<const ReductionContext> ctx,
                                  std::shared_ptr<const FqRep> rho, uint32_t base_level,
                                  std::shared_ptr<const CycRep> companion = nullptr);

  Kind kind() const { return kind_; }
  const LevelGroup& group() const { return *g_; }
  std::shared_ptr<const LevelGroup> group_ptr() const { return g_; }
  const ReductionContext& ctx() const { return *ctx_; }
  std::shared_ptr<const ReductionContext> ctx_ptr() const { return ctx_; }
  std::string describe() const;

  // largest n whose evaluations (and truncation certificate) fit the working
  // level
  uint32_t max_certified_level() const;

  uint64_t dim_at(uint32_t n) const;

  // Brauer character of pi^{K_n} at gamma (gamma at the working level).
  Cyclotomic brauer_at(const Mat2& gamma, uint32_t n) const;
  // trace of the characteristic-zero companion (exact ordinary character)
  Cyclotomic char0_trace_at(const Mat2& gamma, uint32_t n) const;
  bool has_char0() const;
  // direct mod-ell trace on pi^{K_n}, in the representation field
  FqElem mod_trace_at(const Mat2& gamma, uint32_t n) const;

  // dimension of the joint chi-eigenspace of the subgroup generated by
  // h_gens (acting through its image in K/K_n) on pi^{K_n}; chi = nullptr
  // means the fixed subspace.  chi values live in a chain field of ctx.
  uint64_t twisted_dim(const std::vector<Mat2>& h_gens, uint32_t n,
                       const std::function<FqElem(const Mat2&)>* chi = nullptr) const;

  // Sum over h in H/K_n of chi_dag(h)^{-1} * BrChar_{pi^{K_n}}(h), where H is
  // the pro-p subgroup generated by h_gens together with K_n, h_order = |H/K_n|,
  // and chi_dag is a character of H trivial on K_n.  Computed by stabilizer
  // fiber sums over the induced structure.
  Cyclotomic twisted_theta_sum(const std::vector<Mat2>& h_gens, const BigInt& h_order, uint32_t n,
                               const std::function<Cyclotomic(const Mat2&)>& chi_dag) const;

  // dense restriction of pi^{K_n} to an enumerated subgroup
  FqRep dense_rep(const Subgroup& j, uint32_t n) const;
  CycRep dense_char0_rep(const Subgroup& j, uint32_t n) const;

  struct Certificate {
    bool applicable = false;  // depth-zero model only
    uint32_t level = 0;
    uint32_t first_omitted = 0;  // Cartan parameter of the first omitted term
    uint64_t extra_dim = 0;      // its K_n-fixed dimension (must be zero)
    bool ok = true;
  };
  Certificate certificate(uint32_t n) const;

 private:
  SmoothRepModel(Kind k, std::shared_ptr<const LevelGroup> g, std::shared_ptr<const ReductionContext> ctx)
      : kind_(k), g_(std::move(g)), ctx_(std::move(ctx)) {}

  struct Piece {
    uint32_t m;  // Cartan parameter; present in pi^{K_n} iff 2m < n
    std::shared_ptr<const ProjLine> line;
  };

  const Piece& piece(uint32_t m) const;
  std::vector<uint32_t> pieces_at(uint32_t n) const;
  // conjugation-to-level-1 argument map of the piece-m cocycle
  Mat2 sigma_arg(uint32_t m, const Mat2& a) const;
  // orbit + Schreier data of <h_gens> acting on the piece-m line
  struct OrbitData {
    std::vector<std::vector<size_t>> orbits;
    std::vector<std::vector<Mat2>> schreier;  // per orbit, stabilizer generators at base point
  };
  OrbitData orbit_data(uint32_t m, const std::vector<Mat2>& h_gens) const;

  Kind kind_;
  std::shared_ptr<const LevelGroup> g_;
  std::shared_ptr<const ReductionContext> ctx_;
  // depth-zero data
  std::optional<CuspidalSigma> sigma_;
  mutable std::map<uint32_t, Piece> pieces_;
  // steinberg lines per level
  mutable std::map<uint32_t, std::shared_ptr<const ProjLine>> lines_;
  // inflation data
  std::shared_ptr<const FqRep> rho_;
  std::shared_ptr<const CycRep> rho0_;
  uint32_t base_level_ = 0;

  const ProjLine& line_at(uint32_t n) const;
};

// BFS enumeration of the subgroup of SL2(Z/p^T) generated by gens (reduced
// mod p^T); this is H/K_T for H generated by gens over K_T.
std::vector<Mat2> quotient_elements(const LevelGroup& g, uint32_t T, const std::vector<Mat2>& gens,
                                    uint64_t cap = 4000000);

}  // namespace charlift
