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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charlift/rational.hpp"

namespace charlift {

// 2x2 matrix over Z/p^n.
struct Mat2 {
  uint32_t a = 1, b = 0, c = 0, d = 1;  // row major: (a b; c d)

  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const Mat2& o) const;
};

uint64_t pack_mat(const Mat2& m);

// The finite quotient SL2(Z/p^n) (entrywise arithmetic mod p^n).  All group
// elements at a fixed working level are matrices here; subgroup handles point
// at one of these.
class LevelGroup {
 public:
  LevelGroup(uint32_t p, uint32_t n);

  uint32_t p() const { return p_; }
  uint32_t level() const { return n_; }
  uint64_t modulus() const { return pn_; }
  BigInt order() const;  // |SL2(Z/p^n)|

  Mat2 id() const { return Mat2{1, 0, 0, 1}; }
  Mat2 mul(const Mat2& x, const Mat2& y) const;
  Mat2 inv(const Mat2& x) const;  // adjugate; valid for det = 1
  Mat2 reduce(int64_t a, int64_t b, int64_t c, int64_t d) const;
  Mat2 reduce_to(const Mat2& x, uint32_t lower_level) const;
  bool is_sl2(const Mat2& x) const;
  uint64_t element_order(const Mat2& x) const;
  Mat2 pow(const Mat2& x, uint64_t e) const;

  // generators of the congruence kernel K_m = ker(SL2(Z/p^n) -> SL2(Z/p^m))
  std::vector<Mat2> congruence_gens(uint32_t m) const;
  // |K_m| at this level
  BigInt congruence_order(uint32_t m) const;

 private:
  uint32_t p_, n_;
  uint64_t pn_;
};

// Open compact subgroup of SL2(Z_p) described at a finite level: generator
// list plus lazily enumerated elements.  Structural tags mark the standard
// families whose order and membership have closed forms.
class Subgroup {
 public:
  enum class Tag { Generic, FullLevel, CongruenceKn };

  Subgroup(std::shared_ptr<const LevelGroup> g, std::vector<Mat2> gens, std::string name = "");

  static Subgroup full(std::shared_ptr<const LevelGroup> g);
  static Subgroup congruence(std::shared_ptr<const LevelGroup> g, uint32_t m);
  static Subgroup trivial(std::shared_ptr<const LevelGroup> g);
  // standard presets: "K", "K1", "K2", ..., "Iwahori", "torus",
  // "torus_nonsplit", "normalizer"
  static Subgroup preset(std::shared_ptr<const LevelGroup> g, const std::string& name);

  const LevelGroup& group() const { return *g_; }
  std::shared_ptr<const LevelGroup> group_ptr() const { return g_; }
  const std::vector<Mat2>& gens() const { return gens_; }
  const std::string& name() const { return name_; }
  Tag tag() const { return tag_; }
  uint32_t congruence_param() const { return cong_m_; }

  // Breadth-first closure; throws std::length_error past the cap.
  const std::vector<Mat2>& elements(uint64_t cap = 2000000) const;
  bool contains(const Mat2& x) const;
  BigInt order() const;

  // least m with K_m under this subgroup (requires K_m generators inside)
  uint32_t congruence_depth() const;

  // [J : K_depth] where depth = congruence_depth(); this is the finite part
  // of the pro-order.
  BigInt index_over_congruence() const;

  bool is_ellprime(uint32_t ell) const;

  Subgroup conjugated(const Mat2& x) const;
  static Subgroup intersect(const Subgroup& a, const Subgroup& b);

  // conjugacy classes of the enumerated subgroup: representative + size
  std::vector<std::pair<Mat2, uint64_t>> conjugacy_classes(uint64_t cap = 2000000) const;

 private:
  std::shared_ptr<const LevelGroup> g_;
  std::vector<Mat2> gens_;
  std::string name_;
  Tag tag_ = Tag::Generic;
  uint32_t cong_m_ = 0;
  mutable std::optional<std::vector<Mat2>> elems_;
  mutable std::optional<uint32_t> depth_;
};

// True when the pro-order of <g> (cyclic over pro-p tail) is prime to ell at
// this level: ell does not divide ord(g mod p^n).
bool in_G_ellprime(const LevelGroup& g, const Mat2& x, uint32_t ell);

// Topological unipotence at level: trace = 2 mod p.
bool is_topologically_unipotent(const LevelGroup& g, const Mat2& x);

}  // namespace charlift
