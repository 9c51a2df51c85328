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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace charlift {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// p-adic valuation of a nonzero integer.
long val_p(const BigInt& n, uint32_t p);

// p-adic valuation of a nonzero rational.
long val_p(const Rat& r, uint32_t p);

// True if the denominator of r is prime to p.
bool is_p_integral(const Rat& r, uint32_t p);

BigInt pow_int(uint32_t base, unsigned exp);
Rat pow_rat(const Rat& base, long exp);

// The image of r in Z/m, for r with denominator prime to m.
// Throws std::domain_error when the denominator shares a factor with m.
uint64_t mod_reduce(const Rat& r, uint64_t m);

// p-adic fractional part: the unique c/p^v in [0,1) with r - c/p^v p-integral.
// Requires the denominator of r to be a p-power.
Rat p_fractional_part(const Rat& r, uint32_t p);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace charlift
