// Copyright 2026 The gf2perm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GF2PERM_BIGINT_HPP_
#define GF2PERM_BIGINT_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gf2perm {

// Exponents such as (q^{kn}+1)/(q^k+1) overflow machine words long before
// the field does, so exponent arithmetic is done in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned bits) {
  BigInt r = 1;
  r <<= bits;
  return r;
}

// Exact quotient; throws std::logic_error when divisor does not divide value.
BigInt exact_div(const BigInt& value, const BigInt& divisor);

BigInt gcd(const BigInt& a, const BigInt& b);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace gf2perm

#endif  // GF2PERM_BIGINT_HPP_
