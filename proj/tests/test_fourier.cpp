#include <doctest.h>

#include <random>

#include "charlift/fourier.hpp"

using namespace charlift;

namespace {

FourierContext simple_ctx(uint32_t p, uint32_t d) {
  RatOps ops;
  return FourierContext(p, d, mat_identity(d, ops), AdditiveCharacter(p, 0));
}

Lattice random_lattice(std::mt19937_64& rng, uint32_t p, uint32_t d) {
  while (true) {
    DenseMat<Rat> b(d, std::vector<Rat>(d));
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j) {
        long num = static_cast<long>(rng() % 7) - 3;
        long e = static_cast<long>(rng() % 3) - 1;
        b[i][j] = Rat(num) * pow_rat(Rat(p), e);
      }
    try {
      return Lattice(p, std::move(b));
    } catch (const std::domain_error&) {
    }
  }
}

StepFunction random_step(std::mt19937_64& rng, uint32_t p, uint32_t d) {
  StepFunction f(SpaceTag::Primal, d, p);
  int n = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) {
    Lattice l = random_lattice(rng, p, d);
    std::vector<Rat> pt(d);
    for (uint32_t t = 0; t < d; ++t)
      pt[t] = Rat(static_cast<long>(rng() % 9) - 4) * pow_rat(Rat(p), static_cast<long>(rng() % 3) - 1);
    long num = static_cast<long>(rng() % 9) - 4;
    if (num == 0) num = 1;
    f.add_coset(pt, l, Cyclotomic(Rat(num, 1 + static_cast<long>(rng() % 4))));
  }
  return f;
}

}  // namespace

TEST_CASE("additive character basics") {
  AdditiveCharacter psi(3, 0);
  CHECK(psi(Rat(1)) == Cyclotomic(1));
  CHECK(psi(Rat(1, 3)) == Cyclotomic::root_of_unity(3, 1));
  CHECK(psi(Rat(1, 3)) * psi(Rat(2, 3)) == Cyclotomic(1));
  // homomorphism on a grid
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      CHECK(psi(Rat(a, 9) + Rat(b, 9)) == psi(Rat(a, 9)) * psi(Rat(b, 9)));
  // conductor: kernel contains Z_3 and nothing larger
  CHECK(psi(Rat(1, 3)) != Cyclotomic(1));
  AdditiveCharacter shifted(3, 2);
  CHECK(shifted(Rat(3)) != Cyclotomic(1));
  CHECK(shifted(Rat(9)) == Cyclotomic(1));
}

TEST_CASE("self-dual indicator is fixed") {
  auto ctx = simple_ctx(3, 1);
  StepFunction f = StepFunction::indicator(SpaceTag::Primal, {Rat(0)}, Lattice::standard(3, 1));
  StepFunction g = ctx.fourier(f);
  CHECK(g.parts().size() == 1);
  CHECK(g.eval({Rat(0)}) == Cyclotomic(1));
  CHECK(g.eval({Rat(1, 3)}).is_zero());
}

TEST_CASE("lattice indicator transforms to measured dual indicator") {
  auto ctx = simple_ctx(5, 2);
  Lattice l = Lattice::scaled_standard(5, 2, 1);  // 5 Z_5^2
  StepFunction f = StepFunction::indicator(SpaceTag::Primal, {Rat(0), Rat(0)}, l);
  StepFunction g = ctx.fourier(f);
  Lattice lp = ctx.perp(l, SpaceTag::Primal);
  Rat m = ctx.meas(l, SpaceTag::Primal);
  CHECK(m * ctx.meas(lp, SpaceTag::Dual) == 1);
  // [L]^ = meas(L) [L-perp]
  CHECK(g.eval({Rat(0), Rat(0)}) == Cyclotomic(m));
  // supported exactly on the perp
  CHECK(g.eval({Rat(1, 5), Rat(0)}) == Cyclotomic(m));
  CHECK(g.eval({Rat(1, 25), Rat(0)}).is_zero());
}

TEST_CASE("shifted coset example at p = 3") {
  // f = [1 + 3 Z_3], c(psi) = Z_3: transform lives on 3^{-1} Z_3, invariant
  // under Z_3, with value meas(3 Z_3) psi(y) on the coset of y
  auto ctx = simple_ctx(3, 1);
  StepFunction f = StepFunction::indicator(SpaceTag::Primal, {Rat(1)}, Lattice::scaled_standard(3, 1, 1));
  StepFunction g = ctx.fourier(f);
  AdditiveCharacter psi(3, 0);
  for (long num = -3; num <= 3; ++num) {
    Rat y(num, 3);
    CHECK(g.eval({y}) == Cyclotomic(Rat(1, 3)) * psi(y));
  }
  CHECK(g.eval({Rat(1, 9)}).is_zero());
}

TEST_CASE("double transform is reflection") {
  for (uint32_t p : {3u, 5u}) {
    std::mt19937_64 rng(p * 1000 + 7);
    for (int t = 0; t < 25; ++t) {
      uint32_t d = 1 + static_cast<uint32_t>(rng() % 2);
      auto ctx = simple_ctx(p, d);
      StepFunction f = random_step(rng, p, d);
      StepFunction ff = ctx.fourier(ctx.fourier(f));
      StepFunction ref = f.negated_argument();
      CHECK(ff == ref);
    }
  }
}

TEST_CASE("meas times meas of perp is one") {
  std::mt19937_64 rng(2024);
  auto ctx = simple_ctx(3, 3);
  for (int t = 0; t < 30; ++t) {
    Lattice l = random_lattice(rng, 3, 3);
    CHECK(ctx.meas(l, SpaceTag::Primal) * ctx.meas(ctx.perp(l, SpaceTag::Primal), SpaceTag::Dual) == 1);
  }
}

TEST_CASE("linearity of the transform") {
  std::mt19937_64 rng(31337);
  auto ctx = simple_ctx(3, 2);
  StepFunction f = random_step(rng, 3, 2), g = random_step(rng, 3, 2);
  StepFunction lhs = ctx.fourier(StepFunction::add(f, g.scaled(Cyclotomic(Rat(2, 7)))));
  StepFunction rhs = StepFunction::add(ctx.fourier(f), ctx.fourier(g).scaled(Cyclotomic(Rat(2, 7))));
  CHECK(lhs == rhs);
}
