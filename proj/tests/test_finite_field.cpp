#include <doctest.h>

#include "charlift/finite_field.hpp"

using namespace charlift;

TEST_CASE("prime field arithmetic") {
  auto F3 = FqField::get(3, 1);
  FqElem two = F3->from_int(2);
  CHECK(two * two == F3->from_int(1));
  CHECK(two + two == F3->from_int(1));
  CHECK(two.inverse() == two);
  CHECK(two.order_dividing(2) == 2);
}

TEST_CASE("extension field F9") {
  auto F9 = FqField::get(3, 2);
  CHECK(F9->card() == 9);
  // the deterministic modulus is irreducible of degree 2
  CHECK(F9->modulus().size() == 3);
  FqElem g = F9->element_of_order(8);
  CHECK(g.order_dividing(8) == 8);
  FqElem g4 = g.pow(4);
  CHECK(g4 == F9->from_int(-1));
  // element of order 4 exists
  FqElem i = F9->element_of_order(4);
  CHECK(i * i == F9->from_int(-1));
}

TEST_CASE("F16 contains mu_15") {
  auto F16 = FqField::get(2, 4);
  FqElem g = F16->element_of_order(15);
  CHECK(g.order_dividing(15) == 15);
  CHECK(g.pow(5).order_dividing(15) == 3);
  CHECK(g.pow(3).order_dividing(15) == 5);
}

TEST_CASE("roots and embeddings") {
  auto F4 = FqField::get(2, 2);
  auto F16 = FqField::get(2, 4);
  auto emb = F16->embedding_of(*F4);
  // the embedding is a ring homomorphism on a sample
  FqElem a = F4->element({0, 1});
  FqElem b = F4->element({1, 1});
  CHECK(apply_embedding(emb, a * b) == apply_embedding(emb, a) * apply_embedding(emb, b));
  CHECK(apply_embedding(emb, a + b) == apply_embedding(emb, a) + apply_embedding(emb, b));

  // roots of x^2 + x + 1 in F4: the two elements of order 3
  std::vector<FqElem> poly = {F4->one(), F4->one(), F4->one()};
  auto roots = F4->roots_of(poly);
  CHECK(roots.size() == 2);
  for (const auto& r : roots) CHECK(r.order_dividing(3) == 3);
}

TEST_CASE("roots in odd characteristic") {
  auto F5 = FqField::get(5, 1);
  // x^2 - 1 has roots 1, 4; x^2 - 2 has none in F5
  std::vector<FqElem> p1 = {F5->from_int(-1), F5->zero(), F5->one()};
  auto r1 = F5->roots_of(p1);
  CHECK(r1.size() == 2);
  std::vector<FqElem> p2 = {F5->from_int(-2), F5->zero(), F5->one()};
  CHECK(F5->roots_of(p2).empty());
}
