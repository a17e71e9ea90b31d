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

#include "gf2perm/linearized.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gf2perm/errors.hpp"

namespace gf2perm {

namespace {

unsigned fold(const FieldContext& ctx, long index) {
  const long nbits = static_cast<long>(ctx.bits());
  long r = index % nbits;
  if (r < 0) r += nbits;
  return static_cast<unsigned>(r);
}

bool support_is_q_linear(const std::vector<Elem>& coeffs, unsigned m) {
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    if (i % m != 0 && !coeffs[i].is_zero()) return false;
  }
  return true;
}

}  // namespace

LinearizedPoly::LinearizedPoly(std::vector<Elem> coeffs, unsigned m)
    : coeffs_(std::move(coeffs)), m_(m), q_linear_(support_is_q_linear(coeffs_, m)) {}

LinearizedPoly::LinearizedPoly(const FieldContext& ctx, std::vector<Elem> coeffs)
    : coeffs_(std::move(coeffs)), m_(ctx.m()) {
  if (coeffs_.size() != ctx.bits()) {
    throw Error(ErrorCode::kBadParameters, "linearized polynomial needs exactly N = " +
                                               std::to_string(ctx.bits()) + " coefficients");
  }
  for (Elem c : coeffs_) {
    if (!ctx.contains(c)) throw Error(ErrorCode::kBadParameters, "coefficient outside the field");
  }
  q_linear_ = support_is_q_linear(coeffs_, ctx.m());
}

LinearizedPoly LinearizedPoly::zero(const FieldContext& ctx) {
  return LinearizedPoly(std::vector<Elem>(ctx.bits()), ctx.m());
}

LinearizedPoly LinearizedPoly::identity(const FieldContext& ctx) {
  return monomial(ctx, 0, ctx.one());
}

LinearizedPoly LinearizedPoly::monomial(const FieldContext& ctx, long index, Elem c) {
  std::vector<Elem> coeffs(ctx.bits());
  coeffs[fold(ctx, index)] = c;
  return LinearizedPoly(ctx, std::move(coeffs));
}

LinearizedPoly LinearizedPoly::q_monomial(const FieldContext& ctx, long j, Elem c) {
  return monomial(ctx, j * static_cast<long>(ctx.m()), c);
}

bool LinearizedPoly::is_zero() const noexcept {
  for (Elem c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) throw std::invalid_argument("linearized sum: size mismatch");
  std::vector<Elem> coeffs(a.coeffs_.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = a.coeffs_[i] + b.coeffs_[i];
  return LinearizedPoly(std::move(coeffs), a.m_);
}

Elem evaluate(const FieldContext& ctx, const LinearizedPoly& L, Elem x) {
  Elem sum;
  Elem conj = x;
  for (Elem a : L.coeffs()) {
    if (!a.is_zero()) sum += ctx.mul(a, conj);
    conj = ctx.square(conj);
  }
  return sum;
}

LinearizedPoly adjoint(const FieldContext& ctx, const LinearizedPoly& L) {
  const unsigned nbits = ctx.bits();
  std::vector<Elem> coeffs(nbits);
  for (unsigned i = 0; i < nbits; ++i) {
    const unsigned j = (nbits - i) % nbits;
    coeffs[j] = ctx.frobenius(L.coeff(i), static_cast<long>(j));
  }
  return LinearizedPoly(ctx, std::move(coeffs));
}

// (sum_i a_i X^{2^i}) o (sum_j b_j x^{2^j}) = sum_{i,j} a_i b_j^{2^i} x^{2^{i+j}}.
LinearizedPoly compose(const FieldContext& ctx, const LinearizedPoly& L1, const LinearizedPoly& L2) {
  const unsigned nbits = ctx.bits();
  std::vector<Elem> coeffs(nbits);
  for (unsigned i = 0; i < nbits; ++i) {
    const Elem a = L1.coeff(i);
    if (a.is_zero()) continue;
    for (unsigned j = 0; j < nbits; ++j) {
      const Elem b = L2.coeff(j);
      if (b.is_zero()) continue;
      coeffs[(i + j) % nbits] += ctx.mul(a, ctx.frobenius(b, static_cast<long>(i)));
    }
  }
  return LinearizedPoly(ctx, std::move(coeffs));
}

BitMatrix to_matrix(const FieldContext& ctx, const LinearizedPoly& L) {
  std::vector<std::uint64_t> cols(ctx.bits());
  for (unsigned j = 0; j < ctx.bits(); ++j) cols[j] = evaluate(ctx, L, Elem(std::uint32_t{1} << j)).value;
  return BitMatrix::from_columns(ctx.bits(), cols);
}

Kernel kernel(const FieldContext& ctx, const LinearizedPoly& L) {
  Kernel k;
  for (auto v : to_matrix(ctx, L).kernel()) k.basis.emplace_back(static_cast<std::uint32_t>(v));
  k.dim2 = static_cast<unsigned>(k.basis.size());
  if (L.q_linear() && k.dim2 % ctx.m() != 0) {
    throw std::logic_error("kernel of a q-linear map has GF(2)-dimension " + std::to_string(k.dim2) +
                           ", not a multiple of m = " + std::to_string(ctx.m()));
  }
  k.dim_fq = k.dim2 / ctx.m();
  return k;
}

std::vector<Elem> image(const FieldContext& ctx, const LinearizedPoly& L) {
  std::vector<Elem> out;
  for (auto v : to_matrix(ctx, L).image()) out.emplace_back(static_cast<std::uint32_t>(v));
  return out;
}

}  // namespace gf2perm
