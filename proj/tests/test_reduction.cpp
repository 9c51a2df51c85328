#include <doctest.h>

#include <random>

#include "charlift/reduction.hpp"

using namespace charlift;

TEST_CASE("reduce integers and p-units mod ell") {
  ReductionContext ctx(3, 20, 20);  // M = 20 = 4 * 5, prime to 3
  CHECK(ctx.reduce(Cyclotomic(7)) == ctx.rep_field()->from_int(1));
  // 1/5 mod 3 = 2
  CHECK(ctx.reduce(Cyclotomic(Rat(1, 5))) == ctx.rep_field()->from_int(2));
  CHECK_THROWS_AS(ctx.reduce(Cyclotomic(Rat(1, 3))), NotEllIntegralError);
  // zeta_4 + zeta_4^{-1} = 0
  Cyclotomic z = Cyclotomic::root_of_unity(4, 1) + Cyclotomic::root_of_unity(4, -1);
  CHECK(ctx.reduce(z).is_zero());
}

TEST_CASE("teichmuller lift of -1") {
  ReductionContext ctx(3, 4, 4);
  auto F = ctx.rep_field();
  FqElem x = F->from_int(2);  // order 2 in F_3
  Cyclotomic t = ctx.teich_lift(x);
  CHECK(t == Cyclotomic(-1));
}

TEST_CASE("teichmuller section splits reduction") {
  // ell = 3, k = 2: F_9 contains mu_8, register M = 40
  ReductionContext ctx(3, 40, 8);
  CHECK(ctx.rep_field()->k() == 2);
  auto F = ctx.rep_field();
  FqElem x = F->element_of_order(4);
  Cyclotomic t = ctx.teich_lift(x);
  CHECK(t.conductor() == 4);
  CHECK(ctx.reduce(t) == x);
  // order preservation over the full multiplicative group
  for (BigInt n = 1; n < F->card(); ++n) {
    FqElem e = F->nth_element(n);
    uint64_t ord = e.order_dividing(8);
    Cyclotomic lift = ctx.teich_lift(e);
    CHECK(lift.conductor() == (ord == 1 ? 1 : (ord == 2 ? 1 : ord)));
    CHECK(ctx.reduce(lift) == e);
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  ReductionContext ctx(2, 15, 15);
  std::mt19937_64 rng(7);
  auto rand_cyc = [&]() {
    Cyclotomic z;
    for (int i = 0; i < 4; ++i) {
      long num = static_cast<long>(rng() % 9) - 4;
      long den = 1 + 2 * static_cast<long>(rng() % 3);  // odd denominators only
      if (num) z += Cyclotomic(Rat(num, den)) * Cyclotomic::root_of_unity(15, static_cast<int64_t>(rng() % 15));
    }
    return z;
  };
  for (int t = 0; t < 1000; ++t) {
    Cyclotomic a = rand_cyc(), b = rand_cyc();
    CHECK(ctx.reduce(a + b) == ctx.reduce(a) + ctx.reduce(b));
    CHECK(ctx.reduce(a * b) == ctx.reduce(a) * ctx.reduce(b));
  }
}

TEST_CASE("chain growth keeps compatibility") {
  // base field F_16 for mu_15; growing to mu_75 forces F_2^20
  ReductionContext ctx2(2, 75, 15);
  size_t lvl0 = ctx2.ensure_order(15);
  CHECK(lvl0 == 0);
  size_t lvl = ctx2.ensure_order(75);
  CHECK(lvl == 1);
  CHECK(ctx2.field_at(1)->k() == 20);
  // zeta_75^5 must embed to zeta_15
  FqElem z75 = ctx2.zeta_image(75, 1);
  FqElem z15_top = ctx2.zeta_image(15, 1);
  CHECK(z75.pow(5) == z15_top);
  FqElem z15_base = ctx2.zeta_image(15, 0);
  CHECK(ctx2.embed(z15_base, 1) == z15_top);
  // teichmuller lifts computed at either level agree on mu_15
  Cyclotomic lift_base = ctx2.teich_lift(z15_base);
  Cyclotomic lift_top = ctx2.teich_lift(z15_top);
  CHECK(lift_base == lift_top);
}

TEST_CASE("orders outside the conductor are rejected") {
  ReductionContext ctx(3, 20, 4);
  CHECK_THROWS_AS(ctx.ensure_order(7), ContextTooSmallError);
  CHECK_THROWS_AS(ctx.reduce(Cyclotomic::root_of_unity(7, 1)), ContextTooSmallError);
}
