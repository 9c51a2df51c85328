#include <doctest.h>

#include <random>

#include "charlift/group.hpp"
#include "charlift/lie.hpp"

using namespace charlift;

TEST_CASE("closure of the trivial subgroup") {
  auto g = std::make_shared<LevelGroup>(3, 1);
  Subgroup t = Subgroup::trivial(g);
  CHECK(t.order() == 1);
}

TEST_CASE("SL2(Z/3) has order 24 by brute-force closure") {
  auto g = std::make_shared<LevelGroup>(3, 1);
  Subgroup k = Subgroup::full(g);
  CHECK(k.elements().size() == 24);
  CHECK(k.order() == 24);
  CHECK(g->order() == 24);
}

TEST_CASE("congruence kernel at level 2, p = 5 has order 125") {
  auto g = std::make_shared<LevelGroup>(5, 2);
  Subgroup k1 = Subgroup::congruence(g, 1);
  CHECK(k1.order() == 125);
  CHECK(k1.elements().size() == 125);
  CHECK(k1.congruence_depth() == 1);
}

TEST_CASE("ell-prime detection") {
  auto g = std::make_shared<LevelGroup>(3, 2);
  Subgroup k1 = Subgroup::congruence(g, 1);
  CHECK(k1.is_ellprime(2));  // pro-p
  CHECK(k1.is_ellprime(7));
  Subgroup full = Subgroup::full(g);
  CHECK(!full.is_ellprime(2));  // 24 = 2^3 * 3
  auto g5 = std::make_shared<LevelGroup>(5, 2);
  Subgroup torus = Subgroup::preset(g5, "torus");
  CHECK(torus.order() == 20);  // (p-1) p^{n-1}
  CHECK(torus.is_ellprime(3));
  CHECK(!torus.is_ellprime(2));
}

TEST_CASE("element-wise ell-prime membership") {
  auto g = std::make_shared<LevelGroup>(5, 1);
  CHECK(in_G_ellprime(*g, g->id(), 3));
  Mat2 u = g->reduce(1, 1, 0, 1);  // order 5
  CHECK(in_G_ellprime(*g, u, 3));
  CHECK(!in_G_ellprime(*g, u, 5));
  Mat2 t = g->reduce(2, 0, 0, 3);  // diag(2, 2^{-1}), order 4
  CHECK(g->element_order(t) == 4);
  CHECK(in_G_ellprime(*g, t, 3));
  CHECK(!in_G_ellprime(*g, t, 2));
}

TEST_CASE("intersection and conjugation") {
  auto g = std::make_shared<LevelGroup>(5, 1);
  Subgroup torus = Subgroup::preset(g, "torus");
  CHECK(Subgroup::intersect(torus, torus).order() == torus.order());
  CHECK(torus.conjugated(g->id()).elements() == torus.elements());
  Mat2 w = g->reduce(0, 1, -1, 0);
  Subgroup conj = torus.conjugated(w);
  Subgroup both = Subgroup::intersect(torus, conj);
  CHECK(torus.order() % both.order() == 0);
  // Lagrange for random conjugates
  std::mt19937_64 rng(3);
  Subgroup fullsub = Subgroup::full(g);
  const auto& full = fullsub.elements();
  for (int t = 0; t < 10; ++t) {
    Mat2 x = full[rng() % full.size()];
    Subgroup c = torus.conjugated(x);
    Subgroup i = Subgroup::intersect(torus, c);
    CHECK(BigInt(torus.order()) % i.order() == 0);
    CHECK(c.is_ellprime(3) == torus.is_ellprime(3));
  }
}

TEST_CASE("mock exponential is the Cayley transform") {
  auto g = std::make_shared<LevelGroup>(5, 3);
  // X = 0 -> identity
  CHECK(mock_exp(*g, LieLevelVec{0, 0, 0}) == g->id());
  // square-zero element: X = p e gives 1 + p e
  Mat2 u = mock_exp(*g, LieLevelVec{0, 5, 0});
  CHECK(u == g->reduce(1, 5, 0, 1));
  // round trips over random X in p sl2
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    LieLevelVec x{5 * static_cast<int64_t>(rng() % 25), 5 * static_cast<int64_t>(rng() % 25),
                  5 * static_cast<int64_t>(rng() % 25)};
    Mat2 m = mock_exp(*g, x);
    CHECK(g->is_sl2(m));
    LieLevelVec back = mock_log(*g, m);
    CHECK(back.h % 125 == x.h % 125);
    CHECK(back.e % 125 == x.e % 125);
    CHECK(back.f % 125 == x.f % 125);
  }
}

TEST_CASE("mock_exp intertwines the adjoint action") {
  auto g = std::make_shared<LevelGroup>(5, 2);
  std::mt19937_64 rng(17);
  Subgroup fullsub = Subgroup::full(g);
  const auto& full = fullsub.elements();
  RatOps ops;
  for (int t = 0; t < 30; ++t) {
    Mat2 x = full[rng() % full.size()];
    LieLevelVec v{5 * static_cast<int64_t>(rng() % 5), 5 * static_cast<int64_t>(rng() % 5),
                  5 * static_cast<int64_t>(rng() % 5)};
    // Ad(x) v via the exact 3x3 matrix, reduced at level
    DenseMat<Rat> ad = ad_matrix(x);
    std::vector<Rat> img = mat_vec(ad, {Rat(v.h), Rat(v.e), Rat(v.f)}, ops);
    LieLevelVec adv{static_cast<int64_t>(mod_reduce(img[0], g->modulus())),
                    static_cast<int64_t>(mod_reduce(img[1], g->modulus())),
                    static_cast<int64_t>(mod_reduce(img[2], g->modulus()))};
    Mat2 lhs = mock_exp(*g, adv);
    Mat2 rhs = g->mul(g->mul(x, mock_exp(*g, v)), g->inv(x));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("iwahori and normalizer presets") {
  auto g = std::make_shared<LevelGroup>(3, 2);
  Subgroup iw = Subgroup::preset(g, "Iwahori");
  // |Iwahori| = |B(F_3)| * 3^3 = 6 * 27
  CHECK(iw.order() == BigInt(6 * 27));
  CHECK(iw.congruence_depth() == 1);
  Subgroup nm = Subgroup::preset(g, "normalizer");
  CHECK(nm.order() == 2 * Subgroup::preset(g, "torus").order());
  Subgroup tn = Subgroup::preset(g, "torus_nonsplit");
  CHECK(tn.order() == BigInt((3 + 1) * 3));
}
