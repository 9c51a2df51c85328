#include <doctest.h>

#include <random>

#include "charlift/cyclotomic.hpp"

using namespace charlift;

namespace {

Cyclotomic zeta(uint64_t m, int64_t j = 1) { return Cyclotomic::root_of_unity(m, j); }

// uniform small random cyclotomic with conductor dividing 12
Cyclotomic random_cyc(std::mt19937_64& rng) {
  static const uint64_t conds[] = {1, 3, 4, 12};
  uint64_t m = conds[rng() % 4];
  uint64_t deg = Cyclotomic::phi(m);
  Cyclotomic z;
  for (uint64_t i = 0; i < deg; ++i) {
    long num = static_cast<long>(rng() % 7) - 3;
    long den = 1 + static_cast<long>(rng() % 3);
    if (num != 0) z += Cyclotomic(Rat(num, den)) * zeta(m, static_cast<int64_t>(i));
  }
  return z;
}

}  // namespace

TEST_CASE("i squared is -1") { CHECK(zeta(4) * zeta(4) == Cyclotomic(-1)); }

TEST_CASE("primitive cube roots sum to -1") { CHECK(zeta(3) + zeta(3, 2) == Cyclotomic(-1)); }

TEST_CASE("inverse of 1 + zeta_5 multiplies back to one") {
  Cyclotomic a = Cyclotomic(1) + zeta(5);
  Cyclotomic inv = a.inverse();
  CHECK(a * inv == Cyclotomic(1));
  CHECK(inv * a == Cyclotomic(1));
}

TEST_CASE("conjugation inverts roots of unity") {
  for (uint64_t m : {3ull, 4ull, 5ull, 8ull, 9ull, 12ull}) {
    CHECK(zeta(m).conj() == zeta(m, -1));
    CHECK(zeta(m) * zeta(m).conj() == Cyclotomic(1));
  }
}

TEST_CASE("conductor canonicalization") {
  // zeta_6 = -zeta_3^2 lives over conductor 3
  Cyclotomic z6 = zeta(6);
  CHECK(z6.conductor() == 3);
  Cyclotomic p6 = z6;
  Cyclotomic acc(1);
  for (int i = 0; i < 6; ++i) acc *= p6;
  CHECK(acc == Cyclotomic(1));
  Cyclotomic c3 = acc;
  for (int i = 0; i < 3; ++i) c3 *= p6;
  CHECK(c3 == Cyclotomic(-1));
  CHECK(zeta(2).is_rational());
  CHECK(zeta(2).rational_value() == -1);
}

TEST_CASE("cross-conductor arithmetic promotes exactly") {
  Cyclotomic z = zeta(4) * zeta(3);  // a primitive 12th root
  Cyclotomic acc(1);
  int order = 0;
  do {
    acc *= z;
    ++order;
  } while (!(acc == Cyclotomic(1)) && order < 40);
  CHECK(order == 12);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    Cyclotomic a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic(1));
    }
  }
}

TEST_CASE("simplified finds the minimal conductor") {
  Cyclotomic z = zeta(12, 4);  // = zeta_3
  CHECK(z.conductor() == 3);
  Cyclotomic w = zeta(12) * zeta(12, 11);  // = 1
  CHECK(w.simplified().conductor() == 1);
  Cyclotomic s = zeta(5) + zeta(5, 4);  // real quadratic, still conductor 5 in the power basis
  CHECK(s.simplified() == s);
  Cyclotomic t = (zeta(8) + zeta(8, 7)) * (zeta(8) + zeta(8, 7));  // = 2
  CHECK(t.is_rational());
  CHECK(t.rational_value() == 2);
}

TEST_CASE("galois twists permute roots") {
  Cyclotomic z = zeta(5);
  CHECK(z.galois(2) == zeta(5, 2));
  CHECK((z + zeta(5, 4)).galois(2) == zeta(5, 2) + zeta(5, 3));
}
