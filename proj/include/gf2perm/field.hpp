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

#ifndef GF2PERM_FIELD_HPP_
#define GF2PERM_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gf2perm/bigint.hpp"
#include "gf2perm/bitmatrix.hpp"

namespace gf2perm {

// One element of GF(2^N): bit i is the coefficient of x^i in the reduced
// representative modulo the context's defining polynomial.
struct Elem {
  std::uint32_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const noexcept { return value == 0; }

  friend constexpr Elem operator+(Elem a, Elem b) noexcept { return Elem(a.value ^ b.value); }
  constexpr Elem& operator+=(Elem b) noexcept {
    value ^= b.value;
    return *this;
  }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr unsigned kHardMaxBits = 32;

struct Limits {
  // Largest N = m*n a context may be built for; full-field enumerations
  // are refused beyond this.
  unsigned max_bits = 24;
  // Character-sum permutation checks cost q^{2n}.
  unsigned max_charsum_bits = 12;
};

// Polynomials over GF(2) packed in a word, bit i <-> x^i.
namespace gf2x {

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept;
unsigned degree(std::uint64_t p) noexcept;  // degree(0) == 0
std::uint64_t mod(std::uint64_t a, std::uint64_t f) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
bool is_irreducible(std::uint64_t f) noexcept;
// All irreducible polynomials of the given degree, increasing as integers.
std::vector<std::uint64_t> irreducibles(unsigned degree);
std::uint64_t smallest_irreducible(unsigned degree);

}  // namespace gf2x

// Immutable description of GF(q^n), q = 2^m, together with the basis data
// used by the F_q-linear algebra. Copies share the arithmetic tables.
class FieldContext {
 public:
  static FieldContext build(unsigned m, unsigned n,
                            std::optional<std::uint64_t> modulus = std::nullopt,
                            Limits limits = {});

  unsigned m() const noexcept { return m_; }
  unsigned n() const noexcept { return n_; }
  unsigned bits() const noexcept { return m_ * n_; }
  std::uint64_t q() const noexcept { return std::uint64_t{1} << m_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << bits(); }
  std::uint64_t order() const noexcept { return size() - 1; }  // q^n - 1
  BigInt group_order() const { return BigInt(order()); }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const Limits& limits() const noexcept { return limits_; }

  // F_q-basis of F_{q^n}: beta_1, ..., beta_n.
  const std::vector<Elem>& fq_basis() const noexcept { return fq_basis_; }
  // F_2-basis of the subfield F_q.
  const std::vector<Elem>& subfield_basis() const noexcept { return subfield_basis_; }
  // Every element of F_q, ascending by encoding.
  const std::vector<Elem>& fq_elements() const noexcept { return fq_elements_; }
  Elem primitive() const noexcept { return primitive_; }

  Elem zero() const noexcept { return Elem(0); }
  Elem one() const noexcept { return Elem(1); }
  bool contains(Elem a) const noexcept { return a.value < size(); }

  Elem mul(Elem a, Elem b) const noexcept;
  Elem square(Elem a) const noexcept { return mul(a, a); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  // Negative exponents are inverse powers; throws kDivisionByZero for 0^{<0}.
  Elem pow(Elem a, const BigInt& e) const;
  Elem inverse(Elem a) const;
  // a^{2^k}; k is taken modulo N, so negative k gives 2^{-k}-th roots.
  Elem frobenius(Elem a, long k) const noexcept;

  // Trace / norm of F_{2^N} down to F_{2^sub_m}; throws kInvalidSubfield
  // unless sub_m divides N.
  Elem trace_to(Elem a, unsigned sub_m) const;
  Elem norm_to(Elem a, unsigned sub_m) const;
  // Absolute trace as a bit.
  unsigned abs_trace(Elem a) const noexcept;
  bool in_subfield(Elem a, unsigned sub_m) const;
  bool in_fq(Elem a) const noexcept { return frobenius(a, m_) == a; }

  // Canonical additive character of F_{q^n}.
  int chi(Elem a) const noexcept { return abs_trace(a) ? -1 : 1; }
  // Canonical additive character of F_q; throws kNotInSubfield off F_q.
  int psi(Elem c) const;

  // Coordinates v_i in F_q with a = sum v_i * beta_i.
  std::vector<Elem> fq_coordinates(Elem a) const;
  Elem fq_combine(std::span<const Elem> coords) const;
  bool fq_linearly_independent(std::span<const Elem> elems) const;

  // Throw kSizeGuard when a full-field enumeration would exceed the limits.
  void require_enumerable(const char* what) const;
  void require_charsum_enumerable(const char* what) const;

 private:
  struct Tables;

  FieldContext() = default;

  Elem mul_slow(Elem a, Elem b) const noexcept;
  Elem pow_slow(Elem a, std::uint64_t e) const noexcept;
  Elem reduce(std::uint64_t wide) const noexcept;
  std::vector<Elem> subfield_kernel_basis(unsigned sub_m) const;

  unsigned m_ = 0;
  unsigned n_ = 0;
  std::uint64_t modulus_ = 0;
  Limits limits_;
  std::uint32_t trace_mask_ = 0;
  Elem primitive_;
  std::vector<Elem> fq_basis_;
  std::vector<Elem> subfield_basis_;
  std::vector<Elem> fq_elements_;
  std::shared_ptr<const Tables> tables_;
  std::shared_ptr<const BitMatrix> coord_inverse_;
};

}  // namespace gf2perm

#endif  // GF2PERM_FIELD_HPP_
