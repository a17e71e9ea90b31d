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

#ifndef GF2PERM_CHARSUM_HPP_
#define GF2PERM_CHARSUM_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "gf2perm/field.hpp"
#include "gf2perm/linearized.hpp"

namespace gf2perm {

// Sign class of S(L) = sum_v chi(v L(v)).
enum class FormType { kZeroSum, kPlus, kMinus };

std::string_view form_type_name(FormType t);

// Shape of the quadratic form Q(v) = Tr(v L(v)) of F_{q^n}/F_q.
//
// A non-defective Q reduces to r hyperbolic-type planes plus a radical of
// F_q-dimension n - 2r on which Q vanishes; then S(L) = +-q^{n-r}. A
// defective Q (nonzero on its polar radical) has S(L) = 0.
struct QuadraticFormReport {
  unsigned kernel_dim_fq = 0;  // F_q-dimension of ker(L' + L)
  bool vanishes_on_kernel = false;
  std::int64_t s_value = 0;
  FormType form_type = FormType::kZeroSum;
  unsigned hyperbolic_planes = 0;
  unsigned rank = 0;  // 2r, or 2r + 1 when defective
  bool sign_resolved = true;
};

// entries(i, j) = Tr(beta_i L(beta_j)) in F_q.
struct GramMatrix {
  unsigned n = 0;
  std::vector<Elem> entries;

  Elem at(unsigned i, unsigned j) const { return entries[i * n + j]; }
  // Q evaluated from F_q-coordinates: sum_{i,j} v_i v_j entries(i, j).
  Elem form_value(const FieldContext& ctx, const std::vector<Elem>& coords) const;
};

// Exact S(L) by summing over every element. Works for any 2-linear L.
std::int64_t charsum_bruteforce(const FieldContext& ctx, const LinearizedPoly& L);

// S(L) via the kernel K = ker(L' + L): zero unless Q vanishes on K, and
// then |S(L)| = sqrt(q^n |K|). The sign comes from classify_form.
QuadraticFormReport charsum_fast(const FieldContext& ctx, const LinearizedPoly& L);

// The zero/nonzero half of charsum_fast, without resolving the sign.
bool charsum_vanishes(const FieldContext& ctx, const LinearizedPoly& L);

// Canonical reduction of Q over F_q (hyperbolic pairs of the polar form,
// then the trace of ab on each residual plane v1 v2 + a v1^2 + b v2^2).
QuadraticFormReport classify_form(const FieldContext& ctx, const LinearizedPoly& L);

GramMatrix gram_matrix(const FieldContext& ctx, const LinearizedPoly& L);

// n = 2, L = a x^q + b x: S(L) = 0 iff a^q + a = 0 and b != 0.
bool degree2_charsum_vanishes(const FieldContext& ctx, Elem a, Elem b);

// L = a x^{q^k} + b x with 0 < 2k < n, gcd(k, n) = 1. Evaluates the three
// closed-form branches exactly as stated (see binomial_charsum_vanishes_solvable
// for the even-n branch with its solvability condition).
bool binomial_charsum_vanishes(const FieldContext& ctx, Elem a, Elem b, unsigned k);

// Same, but for even n additionally requires a^{(q^n-1)/(q+1)} = 1, which is
// exactly when L' + L has a nonzero root. Without it ker(L' + L) = {0} and
// S(L) != 0.
bool binomial_charsum_vanishes_solvable(const FieldContext& ctx, Elem a, Elem b, unsigned k);

// sum_{v1, v2 in F_q} psi(v1 v2 + a v1 + b v2) by enumeration; a, b in F_q.
std::int64_t hyperbolic_plane_sum(const FieldContext& ctx, Elem a, Elem b);

}  // namespace gf2perm

#endif  // GF2PERM_CHARSUM_HPP_
