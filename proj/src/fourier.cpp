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

#include "charlift/fourier.hpp"

#include <algorithm>
#include <map>

namespace charlift {

Cyclotomic AdditiveCharacter::operator()(const Rat& x) const {
  if (x == 0) return Cyclotomic(Rat(1));
  Rat y = x * Rat(unit_) / pow_rat(Rat(p_), c_);
  if (val_p(y, p_) >= 0) return Cyclotomic(Rat(1));
  long v = -val_p(y, p_);
  Rat r = residue_mod_p_power(y, p_, 0);  // c / p^v in [0,1)
  BigInt num = numerator(r);
  uint64_t pv = 1;
  for (long i = 0; i < v; ++i) pv *= p_;
  return Cyclotomic::root_of_unity(pv, static_cast<int64_t>(uint64_t(num)));
}

FqElem AdditiveCharacter::reduced(const Rat& x, const ReductionContext& ctx) const {
  return ctx.reduce((*this)(x));
}

StepFunction StepFunction::indicator(SpaceTag space, const std::vector<Rat>& point, const Lattice& lat,
                                     const Cyclotomic& value) {
  StepFunction f(space, lat.dim(), lat.p());
  f.add_coset(point, lat, value);
  return f;
}

void StepFunction::add_coset(const std::vector<Rat>& point, const Lattice& lat, const Cyclotomic& value) {
  if (lat.dim() != d_ || lat.p() != p_) throw std::domain_error("StepFunction: mismatched coset");
  parts_.push_back(Coset{point, lat, value});
  canonical_ = false;
}

namespace {

std::string point_key(const std::vector<Rat>& pt) {
  std::string k;
  for (const Rat& c : pt) {
    k += rat_to_string(c);
    k += ",";
  }
  return k;
}

}  // namespace

void StepFunction::canonicalize(uint64_t cap) {
  if (canonical_) return;
  if (parts_.empty()) {
    canonical_ = true;
    return;
  }
  Lattice common = parts_[0].lat;
  for (size_t i = 1; i < parts_.size(); ++i) common = Lattice::intersect(common, parts_[i].lat);
  std::map<std::string, std::pair<std::vector<Rat>, Cyclotomic>> acc;
  uint64_t total = 0;
  for (const Coset& c : parts_) {
    auto reps = c.lat.quotient_transversal(common, cap);
    total += reps.size();
    if (total > cap) throw std::length_error("StepFunction::canonicalize: refinement exceeds cap");
    for (const auto& t : reps) {
      std::vector<Rat> pt(d_);
      for (uint32_t i = 0; i < d_; ++i) pt[i] = c.point[i] + t[i];
      std::vector<Rat> red = common.reduce_point(pt);
      std::string key = point_key(red);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::make_pair(std::move(red), c.value));
      else
        it->second.second += c.value;
    }
  }
  parts_.clear();
  for (auto& [k, pv] : acc) {
    if (pv.second.is_zero()) continue;
    parts_.push_back(Coset{std::move(pv.first), common, std::move(pv.second)});
  }
  if (parts_.empty()) {
    // keep the lattice information implicit; an empty canonical function is the zero function
  }
  canonical_ = true;
}

Cyclotomic StepFunction::eval(const std::vector<Rat>& x) const {
  Cyclotomic v;
  for (const Coset& c : parts_) {
    std::vector<Rat> diff(d_);
    for (uint32_t i = 0; i < d_; ++i) diff[i] = x[i] - c.point[i];
    if (c.lat.contains(diff)) v += c.value;
  }
  return v;
}

bool StepFunction::all_values_rational() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Coset& c) { return c.value.is_rational(); });
}

StepFunction StepFunction::negated_argument() const {
  StepFunction g(space_, d_, p_);
  for (const Coset& c : parts_) {
    std::vector<Rat> pt(d_);
    for (uint32_t i = 0; i < d_; ++i) pt[i] = -c.point[i];
    g.add_coset(pt, c.lat, c.value);
  }
  return g;
}

StepFunction StepFunction::scaled(const Cyclotomic& s) const {
  StepFunction g(space_, d_, p_);
  for (const Coset& c : parts_) g.add_coset(c.point, c.lat, c.value * s);
  return g;
}

StepFunction StepFunction::add(const StepFunction& a, const StepFunction& b) {
  if (a.space_ != b.space_ || a.d_ != b.d_ || a.p_ != b.p_)
    throw std::domain_error("StepFunction::add: mismatched functions");
  StepFunction g(a.space_, a.d_, a.p_);
  for (const Coset& c : a.parts_) g.add_coset(c.point, c.lat, c.value);
  for (const Coset& c : b.parts_) g.add_coset(c.point, c.lat, c.value);
  return g;
}

StepFunction StepFunction::pulled_back(const DenseMat<Rat>& a) const {
  // (f . A)(x) = f(Ax): the coset {y : Ay in pt + L} = A^{-1} pt + A^{-1} L
  DenseMat<Rat> ainv = rat_mat_inverse(a);
  RatOps ops;
  StepFunction g(space_, d_, p_);
  for (const Coset& c : parts_) {
    std::vector<Rat> pt = mat_vec(ainv, c.point, ops);
    g.add_coset(pt, Lattice(p_, mat_mul(ainv, c.lat.basis(), ops)), c.value);
  }
  return g;
}

bool StepFunction::operator==(const StepFunction& o) const {
  StepFunction a = *this, b = o;
  a.canonicalize();
  b.canonicalize();
  if (a.parts_.size() != b.parts_.size()) return false;
  // canonical forms may still differ by the common lattice when supports
  // differ; compare via the joint refinement
  StepFunction diff = add(a, b.scaled(Cyclotomic(Rat(-1))));
  diff.canonicalize();
  return diff.parts_.empty();
}

FourierContext::FourierContext(uint32_t p, uint32_t d, DenseMat<Rat> pairing, AdditiveCharacter psi)
    : p_(p),
      d_(d),
      pairing_(std::move(pairing)),
      psi_(psi),
      base_primal_(Lattice::standard(p, d)),
      base_dual_(Lattice::standard(p, d)) {
  if (psi_.p() != p_) throw std::domain_error("FourierContext: character prime mismatch");
  // sanity: pairing must be invertible
  rat_mat_inverse(pairing_);
  base_dual_ = base_primal_.dual(rat_mat_transpose(pairing_), psi_.conductor_exp());
}

Rat FourierContext::pair(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  Rat s(0);
  for (uint32_t i = 0; i < d_; ++i)
    for (uint32_t j = 0; j < d_; ++j)
      if (pairing_[i][j] != 0) s += x[i] * pairing_[i][j] * y[j];
  return s;
}

Lattice FourierContext::perp(const Lattice& lat, SpaceTag s) const {
  // Primal side: { Y : b^T P Y in p^c } needs the transposed matrix in
  // Lattice::dual, whose convention is { X : b^T Q^T X in p^c }.
  if (s == SpaceTag::Primal) return lat.dual(rat_mat_transpose(pairing_), psi_.conductor_exp());
  return lat.dual(pairing_, psi_.conductor_exp());
}

Rat FourierContext::meas(const Lattice& lat, SpaceTag s) const {
  long rel = lat.det_valuation() - base(s).det_valuation();
  return pow_rat(Rat(p_), -rel);
}

StepFunction FourierContext::fourier(const StepFunction& f, uint64_t cap) const {
  StepFunction g = f;
  g.canonicalize(cap);
  SpaceTag out_tag = f.space() == SpaceTag::Primal ? SpaceTag::Dual : SpaceTag::Primal;
  StepFunction out(out_tag, d_, p_);
  if (g.parts().empty()) {
    return out;
  }
  // common invariance lattice and a containing lattice for the support
  Lattice inv = g.parts().front().lat;
  Lattice cont = inv;
  for (const auto& c : g.parts()) cont = cont.with_vector(c.point);
  Lattice supp_out = perp(inv, f.space());  // support of the transform
  Lattice inv_out = perp(cont, f.space());  // invariance of the transform
  // Riemann-sum weight: hat f(Y) = meas(L0) * sum over L1/L0 of psi(<X,Y>) f(X).
  // This is the normalization under which the double transform is the
  // reflection and meas(L) meas(L-perp) = 1 stays consistent.
  Rat norm = meas(inv, f.space());
  auto reps = supp_out.quotient_transversal(inv_out, cap);
  for (const auto& y : reps) {
    Cyclotomic val;
    for (const auto& c : g.parts()) {
      Rat arg = f.space() == SpaceTag::Primal ? pair(c.point, y) : pair(y, c.point);
      val += c.value * psi_(arg);
    }
    if (val.is_zero()) continue;
    out.add_coset(y, inv_out, val * norm);
  }
  out.canonicalize(cap);
  return out;
}

}  // namespace charlift
