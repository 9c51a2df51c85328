#include <doctest.h>

#include <random>

#include "charlift/lattice.hpp"

using namespace charlift;

namespace {

Lattice random_lattice(std::mt19937_64& rng, uint32_t p, uint32_t d) {
  while (true) {
    DenseMat<Rat> b(d, std::vector<Rat>(d));
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j) {
        long num = static_cast<long>(rng() % 11) - 5;
        long e = static_cast<long>(rng() % 4) - 1;
        b[i][j] = Rat(num) * pow_rat(Rat(p), e);
      }
    try {
      return Lattice(p, std::move(b));
    } catch (const std::domain_error&) {
      continue;  // singular draw
    }
  }
}

}  // namespace

TEST_CASE("canonical form identifies equal spans") {
  // Z_5-span of (1,0),(0,1) equals span of (1,2),(3,1) when the change of
  // basis is a unit matrix
  DenseMat<Rat> b1 = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  DenseMat<Rat> b2 = {{Rat(1), Rat(3)}, {Rat(2), Rat(1)}};  // det = -5... pick unimodular instead
  b2 = {{Rat(1), Rat(3)}, {Rat(2), Rat(2)}};                // det = -4, a 5-adic unit
  CHECK(Lattice(5, b1) == Lattice(5, b2));
  CHECK(Lattice(5, b1) != Lattice::scaled_standard(5, 2, 1));
}

TEST_CASE("membership and index") {
  Lattice std3 = Lattice::standard(3, 2);
  Lattice sub = Lattice::scaled_standard(3, 2, 2);  // 9 Z_3^2
  CHECK(std3.contains_lattice(sub));
  CHECK(sub.index_in(std3) == 81);
  CHECK(std3.contains({Rat(1, 2), Rat(5)}));  // 1/2 is a 3-adic unit
  CHECK(!std3.contains({Rat(1, 3), Rat(0)}));
  auto reps = std3.quotient_transversal(sub, 1000);
  CHECK(reps.size() == 81);
}

TEST_CASE("sum and intersection are lattice join and meet") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    Lattice a = random_lattice(rng, 3, 3), b = random_lattice(rng, 3, 3);
    Lattice s = Lattice::sum(a, b), i = Lattice::intersect(a, b);
    CHECK(s.contains_lattice(a));
    CHECK(s.contains_lattice(b));
    CHECK(a.contains_lattice(i));
    CHECK(b.contains_lattice(i));
    // modularity of indices: [S:A][A:I] = [S:B][B:I]
    CHECK(a.index_in(s) * i.index_in(a) == b.index_in(s) * i.index_in(b));
  }
}

TEST_CASE("reduce_point is constant on cosets") {
  std::mt19937_64 rng(5);
  Lattice l = random_lattice(rng, 5, 3);
  std::vector<Rat> x = {Rat(7, 5), Rat(3), Rat(1, 25)};
  auto r1 = l.reduce_point(x);
  // shift by a lattice vector: first basis column
  std::vector<Rat> y = x;
  for (int i = 0; i < 3; ++i) y[i] += l.basis()[i][0] + Rat(2) * l.basis()[i][2];
  auto r2 = l.reduce_point(y);
  CHECK(r1 == r2);
  // difference of x and its reduction lies in the lattice
  std::vector<Rat> diff(3);
  for (int i = 0; i < 3; ++i) diff[i] = x[i] - r1[i];
  CHECK(l.contains(diff));
}

TEST_CASE("dual against the trace-form pairing") {
  // sl2 coordinates (h, e, f), pairing matrix diag-block [[2,0,0],[0,0,1],[0,1,0]]
  DenseMat<Rat> P = {{Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}};
  Lattice std5 = Lattice::standard(5, 3);
  Lattice dual = std5.dual(P, 0);
  // p odd: the standard lattice is self-dual for this pairing
  CHECK(dual == std5);
  // double dual returns the original for random lattices
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    Lattice l = random_lattice(rng, 5, 3);
    Lattice dd = l.dual(rat_mat_transpose(P), 0).dual(P, 0);
    CHECK(dd == l);
  }
}
