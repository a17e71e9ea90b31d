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

#ifndef GF2PERM_PERMTEST_HPP_
#define GF2PERM_PERMTEST_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gf2perm/bigint.hpp"
#include "gf2perm/field.hpp"
#include "gf2perm/linearized.hpp"

namespace gf2perm {

struct Monomial {
  Elem coeff;
  std::uint64_t exponent = 1;  // 1 <= exponent <= q^n - 1

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// f(x) = sum c_t x^{e_t} without constant term. Exponents are reduced with
// x^{q^n} = x (so 0 -> 0 for every term) and like terms are merged.
class MonomialPoly {
 public:
  MonomialPoly() = default;

  void add(const FieldContext& ctx, Elem coeff, const BigInt& exponent);
  void add(const FieldContext& ctx, Elem coeff, std::uint64_t exponent) {
    add(ctx, coeff, BigInt(exponent));
  }

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  Elem evaluate(const FieldContext& ctx, Elem x) const;
  // f(v) for every v, indexed by encoding.
  std::vector<std::uint32_t> value_table(const FieldContext& ctx) const;

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  std::vector<Monomial> terms_;  // sorted by exponent, nonzero coefficients
};

// f(x) = sum_{i=0}^{n-1} L_i(x^{q^i + 1}) with 2-linear L_i.
struct QuadFamilySpec {
  std::vector<LinearizedPoly> Ls;
};

// f(x) = L0(x^{2^l}) + L1(x) Tr(x) with q-linear L0, L1.
struct TraceFormSpec {
  LinearizedPoly L0;
  LinearizedPoly L1;
  unsigned l = 0;
};

MonomialPoly expand(const FieldContext& ctx, const QuadFamilySpec& spec);
MonomialPoly expand(const FieldContext& ctx, const TraceFormSpec& spec);

enum class PermMethod { kBruteForce, kCharSum, kQuadSpec, kStructured };

std::string_view perm_method_name(PermMethod m);

struct PermReport {
  bool is_permutation = false;
  PermMethod method = PermMethod::kBruteForce;
  // Brute force: the later element of the first colliding pair, and the
  // earlier one in collision_with. Character-sum methods: the smallest u
  // whose sum does not vanish.
  std::optional<Elem> witness;
  std::optional<Elem> collision_with;
};

PermReport is_perm_bruteforce(const FieldContext& ctx, const MonomialPoly& f);

// f permutes F_{q^n} iff sum_v chi(u f(v)) = 0 for every u != 0.
PermReport is_perm_charsum(const FieldContext& ctx, const MonomialPoly& f);

// l_u(x) = sum_i L_i'(u) x^{q^i}; f permutes iff S(l_u) = 0 for all u != 0.
PermReport is_perm_quadspec(const FieldContext& ctx, const QuadFamilySpec& spec);
LinearizedPoly ell_u(const FieldContext& ctx, const std::vector<LinearizedPoly>& adjoints, Elem u);

// n = 2: L1(x^{q+1}) + L0(x^2) permutes iff L1(x^q + x) = 0 and ker L0 = {0}.
bool quadratic_n2_criterion(const FieldContext& ctx, const LinearizedPoly& L0, const LinearizedPoly& L1);
QuadFamilySpec quadratic_n2_spec(const FieldContext& ctx, const LinearizedPoly& L0, const LinearizedPoly& L1);

// n odd, 0 < 2k < n, gcd(k, n) = 1: x^{q^k+1} + L0(x^2) permutes iff
// Tr(L0'(u^{q^k+1}) u^{-2}) != 1 for every u != 0.
bool odd_degree_criterion(const FieldContext& ctx, unsigned k, const LinearizedPoly& L0);
QuadFamilySpec odd_degree_spec(const FieldContext& ctx, unsigned k, const LinearizedPoly& L0);

// L0(x^{2^l}) + L1(x) Tr(x) permutes iff for every u != 0, with
// X = L1'(u) and Y = L0'(u): (X in F_q and Y^2 + X^{2^l} != 0) or
// 1, Y, X^{2^l} are F_q-independent.
bool trace_form_criterion(const FieldContext& ctx, const TraceFormSpec& spec);

// a x^{2^l q^k} + x Tr(x) permutes iff n is odd,
// gcd(2^{l+mk} - 1, (q^n-1)/(q-1)) = 1, a in F_q^* and a^{(q-1)/(2^d-1)} != 1
// with d = gcd(|l-1|, m).
bool trace_monomial_criterion(const FieldContext& ctx, Elem a, unsigned k, unsigned l);
TraceFormSpec trace_monomial_spec(const FieldContext& ctx, Elem a, unsigned k, unsigned l);

// Named families with closed-form permutation conditions.
enum class Family {
  kTu,        // x^{q^2+1} + x^{q+1} + a x, n = 3, a in F_q^* (sufficient)
  kAbNorm,    // x^{q+1} + a x^{2q} + b x^2, n = 3: iff N(a) + N(b) = ab
  kQ4,        // q = 4, n = 2k+1, a^{2^n-1} in F_4 \ F_2 (sufficient)
  kTrForm,    // (ax)^{q^{n-k}} + ax + x Tr(x): iff Tr(1/a) != 0, N(a+c) != N(a)
  kAqk,       // a x^{q^k} + a x + x Tr(x): iff a in F_q^*, n odd, gcd(n, q-1) = 1
  kBlokhuis,  // a x^2 + x Tr(x), n odd, a in F_q^* \ {1} (sufficient)
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
// Sufficient-only families have no "false" verdict; their predicates throw
// kBadParameters outside the claimed domain.
bool family_is_iff(Family f);

struct FamilyParams {
  Elem a;
  Elem b;
  unsigned k = 1;
  // q4 only: 0 for x^{2^n+2} + a x, 1 for x^{q^k+1} + a x^{2q^{n-1}}.
  unsigned variant = 0;
};

bool family_predicate(const FieldContext& ctx, Family family, const FamilyParams& params);
MonomialPoly family_polynomial(const FieldContext& ctx, Family family, const FamilyParams& params);

}  // namespace gf2perm

#endif  // GF2PERM_PERMTEST_HPP_
