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

#ifndef GF2PERM_LINEARIZED_HPP_
#define GF2PERM_LINEARIZED_HPP_

#include <vector>

#include "gf2perm/bitmatrix.hpp"
#include "gf2perm/field.hpp"

namespace gf2perm {

// L(x) = sum_i a_i x^{2^i} over F_{q^n}, stored densely at all N Frobenius
// indices with the convention x^{2^N} = x. The q-linear flag is set iff the
// support lies on multiples of m.
class LinearizedPoly {
 public:
  LinearizedPoly(const FieldContext& ctx, std::vector<Elem> coeffs);

  static LinearizedPoly zero(const FieldContext& ctx);
  static LinearizedPoly identity(const FieldContext& ctx);
  // c * x^{2^index}, index folded modulo N.
  static LinearizedPoly monomial(const FieldContext& ctx, long index, Elem c);
  // c * x^{q^j}.
  static LinearizedPoly q_monomial(const FieldContext& ctx, long j, Elem c);

  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(unsigned i) const noexcept { return coeffs_[i]; }
  bool q_linear() const noexcept { return q_linear_; }
  bool is_zero() const noexcept;

  friend LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b);
  friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  LinearizedPoly(std::vector<Elem> coeffs, unsigned m);

  std::vector<Elem> coeffs_;
  unsigned m_ = 1;
  bool q_linear_ = true;
};

Elem evaluate(const FieldContext& ctx, const LinearizedPoly& L, Elem x);

// L'(x) = sum_i (a_i x)^{2^{-i}}, the adjoint for the absolute trace form:
// Tr(u L(v)) = Tr(L'(u) v).
LinearizedPoly adjoint(const FieldContext& ctx, const LinearizedPoly& L);

// The polynomial of the map L1 o L2.
LinearizedPoly compose(const FieldContext& ctx, const LinearizedPoly& L1, const LinearizedPoly& L2);

// GF(2)-matrix of L in the polynomial basis; column j is L(x^j).
BitMatrix to_matrix(const FieldContext& ctx, const LinearizedPoly& L);

struct Kernel {
  std::vector<Elem> basis;  // GF(2)-basis
  unsigned dim2 = 0;
  // dim2 / m when L is q-linear, otherwise dim2 / m rounded down.
  unsigned dim_fq = 0;
};

// Throws std::logic_error if L is q-linear and dim2 is not a multiple of m.
Kernel kernel(const FieldContext& ctx, const LinearizedPoly& L);

// GF(2)-basis of the image of L.
std::vector<Elem> image(const FieldContext& ctx, const LinearizedPoly& L);

}  // namespace gf2perm

#endif  // GF2PERM_LINEARIZED_HPP_
