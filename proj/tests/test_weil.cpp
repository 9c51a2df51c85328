#include <doctest.h>

#include "charlift/weil.hpp"

using namespace charlift;

TEST_CASE("cuspidal slice at p = 5, theta of order 3, mod 2") {
  auto ctx = std::make_shared<ReductionContext>(2, 75, 15);
  CuspidalSigma s = build_cuspidal(5, 3, 0, *ctx);
  CHECK(s.dim == 4);
  CHECK(s.reduced->fully_verified());
  // Brauer character of the reduction equals the trace of the integral model
  const auto& dom = s.reduced->domain();
  for (const Mat2& x : dom.elements()) {
    uint64_t ord = dom.group().element_order(x);
    if (ord % 2 == 0) continue;  // Brauer values live on 2-regular elements
    CHECK(brauer_value(s.reduced->at(x), ord, *ctx) == s.char0->trace(x));
  }
  // central character: -1 acts by theta(-1) = 1 for theta of order 3
  Mat2 minus = dom.group().reduce(-1, 0, 0, -1);
  CycOps cops;
  CHECK(mat_trace(s.char0->at(minus), cops) == Cyclotomic(Rat(4)));
}

TEST_CASE("degenerate halves at p = 5 split 4 = 2 + 2") {
  auto ctx = std::make_shared<ReductionContext>(3, 20, 20);
  CuspidalSigma plus = build_cuspidal(5, 2, +1, *ctx);
  CuspidalSigma minus = build_cuspidal(5, 2, -1, *ctx);
  CHECK(plus.dim + minus.dim == 4);
  CHECK(plus.dim == 2);
  CHECK(plus.reduced->fully_verified());
  CHECK(minus.reduced->fully_verified());
}

TEST_CASE("half slices at p = 3 are the cubic characters") {
  auto ctx = std::make_shared<ReductionContext>(2, 15, 15);
  CuspidalSigma plus = build_cuspidal(3, 2, +1, *ctx);
  CuspidalSigma minus = build_cuspidal(3, 2, -1, *ctx);
  CHECK(plus.dim == 1);
  CHECK(minus.dim == 1);
  // one-dimensional: values are cube roots of unity, nontrivial on the
  // unipotent
  const auto& dom = plus.reduced->domain();
  Mat2 u = dom.group().reduce(1, 1, 0, 1);
  Cyclotomic val = plus.char0->trace(u);
  CHECK(val * val * val == Cyclotomic(1));
  CHECK(val != Cyclotomic(1));
}

TEST_CASE("full slice at p = 3 with theta of order 4") {
  auto ctx = std::make_shared<ReductionContext>(5, 24, 24);
  CuspidalSigma s = build_cuspidal(3, 4, 0, *ctx);
  CHECK(s.dim == 2);
  CHECK(s.reduced->fully_verified());
  for (const Mat2& x : s.reduced->domain().elements()) {
    uint64_t ord = s.reduced->domain().group().element_order(x);
    if (ord % 5 == 0) continue;
    CHECK(brauer_value(s.reduced->at(x), ord, *ctx) == s.char0->trace(x));
  }
}
