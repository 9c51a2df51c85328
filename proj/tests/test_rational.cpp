#include <doctest.h>

#include "charlift/rational.hpp"

using namespace charlift;

TEST_CASE("p-adic valuation and fractional part") {
  CHECK(val_p(Rat(50), 5) == 2);
  CHECK(val_p(Rat(3, 25), 5) == -2);
  CHECK(is_p_integral(Rat(7, 6), 5));
  CHECK(!is_p_integral(Rat(7, 10), 5));

  CHECK(p_fractional_part(Rat(7, 9), 3) == Rat(7, 9));
  CHECK(p_fractional_part(Rat(10, 9), 3) == Rat(1, 9));
  CHECK(p_fractional_part(Rat(4), 3) == 0);
  CHECK_THROWS_AS(p_fractional_part(Rat(1, 6), 3), std::domain_error);
}

TEST_CASE("modular reduction of rationals") {
  CHECK(mod_reduce(Rat(7), 3) == 1);
  CHECK(mod_reduce(Rat(1, 5), 3) == 2);  // inverse of 5 = 2 mod 3
  CHECK(mod_reduce(Rat(-1, 2), 5) == 2);
  CHECK_THROWS_AS(mod_reduce(Rat(1, 3), 3), std::domain_error);
}

TEST_CASE("string round trip") {
  Rat r(-22, 7);
  CHECK(rat_from_string(rat_to_string(r)) == r);
  CHECK(rat_to_string(Rat(5)) == "5");
}
