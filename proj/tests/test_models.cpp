#include <doctest.h>

#include "charlift/models.hpp"

using namespace charlift;

namespace {

struct Setup {
  std::shared_ptr<const LevelGroup> g;
  std::shared_ptr<const ReductionContext> ctx;
};

Setup setup(uint32_t p, uint32_t ell, uint32_t level, uint64_t M, uint64_t base) {
  return {std::make_shared<LevelGroup>(p, level), std::make_shared<ReductionContext>(ell, M, base)};
}

}  // namespace

TEST_CASE("projective line sizes and action") {
  ProjLine l0(5, 0);
  CHECK(l0.size() == 1);
  ProjLine l1(5, 1);
  CHECK(l1.size() == 6);
  ProjLine l2(5, 2);
  CHECK(l2.size() == 30);
  // the action is a right action
  LevelGroup g(5, 2);
  Mat2 a = g.reduce(2, 1, 1, 1), b = g.reduce(1, 3, 0, 1);
  for (size_t i = 0; i < l2.size(); ++i) {
    CHECK(l2.act(l2.act(i, a), b) == l2.act(i, g.mul(a, b)));
  }
  // sections have the point as top row
  for (size_t i = 0; i < l2.size(); ++i) {
    auto s = l2.section_raw(i);
    auto [x, y] = l2.point(i);
    CHECK(static_cast<uint64_t>(s[0] % 25 + 25) % 25 == x);
    CHECK(static_cast<uint64_t>(s[1] % 25 + 25) % 25 == y);
    CHECK(s[0] * s[3] - s[1] * s[2] == 1);
  }
}

TEST_CASE("steinberg dimensions p^n + p^{n-1} - 1") {
  auto s = setup(3, 2, 3, 15, 15);
  SmoothRepModel st = SmoothRepModel::steinberg(s.g, s.ctx);
  CHECK(st.dim_at(1) == 3);
  CHECK(st.dim_at(2) == 11);
  CHECK(st.dim_at(3) == 35);
  CHECK(st.max_certified_level() == 3);
}

TEST_CASE("depth-zero supercuspidal dimensions at p = 5") {
  auto s = setup(5, 2, 3, 75, 15);
  SmoothRepModel sc = SmoothRepModel::depth_zero_sc(s.g, s.ctx, 3, 0);
  CHECK(sc.max_certified_level() == 2);
  CHECK(sc.dim_at(1) == 4);
  CHECK(sc.dim_at(2) == 4);
  auto cert1 = sc.certificate(1);
  CHECK(cert1.applicable);
  CHECK(cert1.ok);
  CHECK(cert1.first_omitted == 1);
  auto cert2 = sc.certificate(2);
  CHECK(cert2.ok);
}

TEST_CASE("supercuspidal level-3 dimension 124 and certificate") {
  auto s = setup(5, 2, 5, 75, 15);
  SmoothRepModel sc = SmoothRepModel::depth_zero_sc(s.g, s.ctx, 3, 0);
  CHECK(sc.max_certified_level() == 4);
  CHECK(sc.dim_at(3) == 124);
  CHECK(sc.dim_at(4) == 124);
  CHECK(sc.certificate(3).ok);
  CHECK(sc.certificate(4).ok);
  // identity Brauer value = dimension
  CHECK(sc.brauer_at(s.g->id(), 3) == Cyclotomic(Rat(124)));
}

TEST_CASE("level consistency of the coset decomposition") {
  // meas(K_n) BrChar_{pi^{K_n}}(gamma) = sum over h in K_n/K_{n+1} of
  // meas(K_{n+1}) BrChar_{pi^{K_{n+1}}}(gamma h): the fixed-space trace
  // compatibility between consecutive levels
  auto s = setup(3, 2, 3, 45, 3);
  for (auto kind : {SmoothRepModel::Kind::Steinberg, SmoothRepModel::Kind::Trivial}) {
    SmoothRepModel model = kind == SmoothRepModel::Kind::Steinberg
                               ? SmoothRepModel::steinberg(s.g, s.ctx)
                               : SmoothRepModel::trivial(s.g, s.ctx);
    // gamma regular semisimple of 2'-order: diag(4, 7) at level 2 (order 9...)
    Mat2 gamma = s.g->reduce(4, 0, 0, 7);
    std::vector<Mat2> transversal = quotient_elements(*s.g, 2, s.g->congruence_gens(1));
    Cyclotomic rhs;
    for (const Mat2& h : transversal) rhs += model.brauer_at(s.g->mul(gamma, h), 2);
    // meas(K_1)/meas(K_2) = p^3
    CHECK(model.brauer_at(gamma, 1) * Rat(27) == rhs);
  }
}

TEST_CASE("supercuspidal level consistency at p = 5") {
  auto s = setup(5, 2, 3, 75, 15);
  SmoothRepModel sc = SmoothRepModel::depth_zero_sc(s.g, s.ctx, 3, 0);
  Mat2 gamma = s.g->reduce(2, 0, 0, 63);  // diag(2, 2^{-1}) mod 125, order 4... entries lift
  // use exact inverse of 2 mod 125 = 63
  CHECK(s.g->is_sl2(gamma));
  std::vector<Mat2> transversal = quotient_elements(*s.g, 2, s.g->congruence_gens(1));
  CHECK(transversal.size() == 125);
  Cyclotomic rhs;
  for (const Mat2& h : transversal) rhs += sc.brauer_at(s.g->mul(gamma, h), 2);
  CHECK(sc.brauer_at(gamma, 1) * Rat(125) == rhs);
}

TEST_CASE("brauer and characteristic-zero traces agree on semisimple classes") {
  auto s = setup(5, 2, 3, 75, 15);
  SmoothRepModel sc = SmoothRepModel::depth_zero_sc(s.g, s.ctx, 3, 0);
  // odd-order elements: the Brauer character is the lift's ordinary character
  Mat2 g1 = s.g->reduce(2, 0, 0, 63);   // order 4: skip (even)
  Mat2 g2 = s.g->reduce(1, 1, 0, 1);    // order 125... unipotent, odd
  Mat2 g3 = s.g->reduce(6, 0, 0, 21);   // diag(6, 6^{-1}) = 1 + 5*...: order 25, odd
  CHECK(s.g->mul(g3, s.g->reduce(21, 0, 0, 6)) == s.g->id());
  for (const Mat2& gamma : {g2, g3}) {
    for (uint32_t n : {1u, 2u}) {
      CHECK(sc.brauer_at(gamma, n) == sc.char0_trace_at(gamma, n));
    }
  }
  (void)g1;
}

TEST_CASE("twisted dims: fixed spaces of congruence subgroups") {
  auto s = setup(3, 2, 3, 15, 15);
  SmoothRepModel st = SmoothRepModel::steinberg(s.g, s.ctx);
  // dim of K_1-fixed subspace of pi^{K_2} equals dim pi^{K_1}
  std::vector<Mat2> k1 = s.g->congruence_gens(1);
  CHECK(st.twisted_dim(k1, 2) == st.dim_at(1));
  CHECK(st.twisted_dim(k1, 3) == st.dim_at(1));
  std::vector<Mat2> k2 = s.g->congruence_gens(2);
  CHECK(st.twisted_dim(k2, 3) == st.dim_at(2));
  // dense cross-check at level 2 via the kernel path
  Subgroup k1sub(s.g, k1, "K1");
  FqRep dense = st.dense_rep(Subgroup::full(s.g), 2);
  uint64_t dense_dim = [&] {
    std::vector<DenseMat<FqElem>> mats;
    for (const Mat2& h : k1) mats.push_back(dense.at(s.g->reduce_to(h, 2)));
    FqOps ops(s.ctx->rep_field());
    return fixed_dim_kernel<FqOps>(mats, ops);
  }();
  CHECK(dense_dim == st.dim_at(1));
}

TEST_CASE("supercuspidal twisted dims against dense") {
  auto s = setup(5, 2, 3, 75, 15);
  SmoothRepModel sc = SmoothRepModel::depth_zero_sc(s.g, s.ctx, 3, 0);
  std::vector<Mat2> k1 = s.g->congruence_gens(1);
  std::vector<Mat2> k2 = s.g->congruence_gens(2);
  CHECK(sc.twisted_dim(k1, 3) == sc.dim_at(1));
  CHECK(sc.twisted_dim(k2, 3) == sc.dim_at(2));
  // dense rep of pi^{K_3} restricted to the full level-3 quotient is too big
  // to verify; spot check through a small subgroup instead
  Subgroup tor = Subgroup::preset(s.g, "torus");
  FqRep dense = sc.dense_rep(tor, 3);
  CHECK(dense.dim() == 124);
  // trace at the torus generator matches the structural Brauer path reduced
  Mat2 t = tor.gens()[0];
  FqElem tr = dense.trace(t);
  CHECK(sc.mod_trace_at(t, 3) == tr);
}

TEST_CASE("mackey certificate fails gracefully above the working level") {
  auto s = setup(5, 2, 3, 75, 15);
  SmoothRepModel sc = SmoothRepModel::depth_zero_sc(s.g, s.ctx, 3, 0);
  CHECK_THROWS_AS(sc.dim_at(5), std::domain_error);
}
