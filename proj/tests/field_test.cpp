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

#include "gf2perm/field.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace gf2perm {
namespace {

using testing::ThrowsCode;

const FieldContext& gf4() {
  static const FieldContext ctx = FieldContext::build(1, 2);
  return ctx;
}

TEST(Gf2x, IrreduciblesMatchSieve) {
  for (unsigned d = 1; d <= 11; ++d) {
    const auto sieve = oracle::sieve_irreducibles(static_cast<int>(d));
    EXPECT_EQ(gf2x::irreducibles(d), sieve) << "degree " << d;
    EXPECT_EQ(gf2x::smallest_irreducible(d), sieve.front());
  }
}

TEST(Gf2x, ClmulMatchesSchoolbook) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto a = static_cast<std::uint32_t>(rng());
    const auto b = static_cast<std::uint32_t>(rng());
    EXPECT_EQ(gf2x::clmul(a, b), oracle::poly_mul(a, b));
  }
}

TEST(FieldContext, DefaultModuli) {
  EXPECT_EQ(FieldContext::build(1, 2).modulus(), 0b111u);
  EXPECT_EQ(FieldContext::build(2, 3).modulus(), 0b1000011u);
}

TEST(FieldContext, RejectsBadModuliAndSizes) {
  EXPECT_TRUE(ThrowsCode(ErrorCode::kInvalidModulus, [] { FieldContext::build(1, 2, 0b110); }));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kInvalidModulus, [] { FieldContext::build(1, 3, 0b111); }));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kSizeGuard, [] { FieldContext::build(5, 5); }));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kSizeGuard, [] { FieldContext::build(11, 3, std::nullopt, {32, 12}); }));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kBadParameters, [] { FieldContext::build(0, 2); }));
  EXPECT_NO_THROW(FieldContext::build(2, 14, std::nullopt, {28, 12}));
}

TEST(FieldContext, Gf4Examples) {
  const auto& f = gf4();
  const Elem w(2);
  EXPECT_EQ(f.mul(w, w), Elem(3));
  EXPECT_EQ(f.pow(w, std::uint64_t{3}), f.one());
  EXPECT_EQ(f.frobenius(w, 1), Elem(3));
  EXPECT_EQ(f.trace_to(w, 1), f.one());
  EXPECT_EQ(f.trace_to(f.one(), 1), f.zero());
  EXPECT_EQ(f.norm_to(w, 1), f.one());
  EXPECT_EQ(f.chi(f.zero()), 1);
  EXPECT_EQ(f.chi(w), -1);
}

TEST(FieldContext, MultiplicationMatchesBitSerialOracle) {
  std::mt19937_64 rng(2);
  struct Case { unsigned m, n; std::optional<std::uint64_t> mod; };
  const Case cases[] = {{1, 2, {}}, {2, 3, {}}, {1, 8, 0x11b}, {4, 4, {}}, {3, 6, {}}, {1, 20, {}}, {2, 11, {}},
                        {1, 24, {}}};
  for (const auto& c : cases) {
    const auto f = FieldContext::build(c.m, c.n, c.mod);
    const auto o = testing::naive(f);
    for (int t = 0; t < 2000; ++t) {
      const Elem a(static_cast<std::uint32_t>(rng() % f.size()));
      const Elem b(static_cast<std::uint32_t>(rng() % f.size()));
      ASSERT_EQ(f.mul(a, b).value, o.mul(a.value, b.value)) << c.m << ":" << c.n;
      EXPECT_EQ(f.abs_trace(a), static_cast<unsigned>(o.abs_trace(a.value)));
    }
  }
}

TEST(FieldContext, PowAndInverse) {
  const auto f = FieldContext::build(2, 3);
  EXPECT_TRUE(ThrowsCode(ErrorCode::kDivisionByZero, [&] { f.inverse(f.zero()); }));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kDivisionByZero, [&] { f.pow(f.zero(), BigInt(-1)); }));
  EXPECT_EQ(f.pow(f.zero(), BigInt(0)), f.one());
  for (std::uint32_t v = 1; v < f.size(); ++v) {
    const Elem a(v);
    EXPECT_EQ(f.mul(a, f.inverse(a)), f.one());
    EXPECT_EQ(f.pow(a, BigInt(f.order())), f.one());
    EXPECT_EQ(f.pow(a, BigInt(-5)), f.inverse(f.pow(a, std::uint64_t{5})));
    EXPECT_EQ(f.pow(a, BigInt(1) << 200), f.frobenius(a, 200));
  }
  // (q^{kn}+1)/(q^k+1) with q = 2, k = 1, n = 3 is 3.
  const auto f8 = FieldContext::build(1, 3);
  const BigInt e = exact_div(pow2(3) + 1, pow2(1) + 1);
  EXPECT_EQ(e, 3);
  EXPECT_EQ(f8.pow(Elem(6), e), f8.mul(Elem(6), f8.mul(Elem(6), Elem(6))));
}

TEST(FieldContext, PrimitiveElementGeneratesGroup) {
  for (auto [m, n] : {std::pair{1u, 4u}, {2u, 3u}, {3u, 3u}}) {
    const auto f = FieldContext::build(m, n);
    std::vector<bool> seen(f.size());
    Elem x = f.one();
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      ASSERT_FALSE(seen[x.value]);
      seen[x.value] = true;
      x = f.mul(x, f.primitive());
    }
    EXPECT_EQ(x, f.one());
  }
}

TEST(FieldContext, FrobeniusIsAnAutomorphism) {
  const auto f = FieldContext::build(2, 4);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 500; ++t) {
    const Elem a(static_cast<std::uint32_t>(rng() % f.size()));
    const Elem b(static_cast<std::uint32_t>(rng() % f.size()));
    const long k = static_cast<long>(rng() % 17) - 8;
    EXPECT_EQ(f.frobenius(f.mul(a, b), k), f.mul(f.frobenius(a, k), f.frobenius(b, k)));
    EXPECT_EQ(f.frobenius(a + b, k), f.frobenius(a, k) + f.frobenius(b, k));
    EXPECT_EQ(f.frobenius(f.frobenius(a, k), -k), a);
    EXPECT_EQ(f.frobenius(a, static_cast<long>(f.bits())), a);
    EXPECT_EQ(f.frobenius(a, 3).value, testing::naive(f).frob(a.value, 3));
  }
}

TEST(FieldContext, TraceAndNormTowers) {
  const auto f = FieldContext::build(2, 3);
  EXPECT_TRUE(ThrowsCode(ErrorCode::kInvalidSubfield, [&] { f.trace_to(f.one(), 4); }));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kInvalidSubfield, [&] { f.norm_to(f.one(), 5); }));
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    const Elem a(v);
    const Elem t2 = f.trace_to(a, 2);
    const Elem t3 = f.trace_to(a, 3);
    EXPECT_TRUE(f.in_fq(t2));
    EXPECT_TRUE(f.in_subfield(t3, 3));
    EXPECT_EQ(f.trace_to(t2, 1), f.trace_to(a, 1));
    EXPECT_EQ(f.trace_to(a, 1).value, f.abs_trace(a));
    EXPECT_TRUE(f.in_fq(f.norm_to(a, 2)));
    EXPECT_EQ(f.norm_to(f.norm_to(a, 2), 1), f.norm_to(a, 1));
    EXPECT_EQ(f.norm_to(a, 6), a);
    EXPECT_EQ(f.trace_to(a, 6), a);
  }
  EXPECT_EQ(f.norm_to(f.one(), 2), f.one());
  // c in F_q: n * c, so c for odd n and 0 for even n.
  const auto even = FieldContext::build(2, 2);
  for (Elem c : f.fq_elements()) EXPECT_EQ(f.trace_to(c, 2), c);
  for (Elem c : even.fq_elements()) EXPECT_TRUE(even.trace_to(c, 2).is_zero());
}

TEST(FieldContext, NormIsMultiplicative) {
  const auto f = FieldContext::build(3, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const Elem a(static_cast<std::uint32_t>(rng() % f.size()));
    const Elem b(static_cast<std::uint32_t>(rng() % f.size()));
    EXPECT_EQ(f.norm_to(f.mul(a, b), 3), f.mul(f.norm_to(a, 3), f.norm_to(b, 3)));
  }
}

TEST(FieldContext, CharactersAreHomomorphismsAndOrthogonal) {
  const auto f = FieldContext::build(2, 3);
  std::int64_t total = 0;
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    total += f.chi(Elem(v));
    for (std::uint32_t w = 0; w < f.size(); w += 7) {
      EXPECT_EQ(f.chi(Elem(v) + Elem(w)), f.chi(Elem(v)) * f.chi(Elem(w)));
    }
  }
  EXPECT_EQ(total, 0);
  for (std::uint32_t u = 1; u < f.size(); ++u) {
    std::int64_t s = 0;
    for (std::uint32_t v = 0; v < f.size(); ++v) s += f.chi(f.mul(Elem(u), Elem(v)));
    EXPECT_EQ(s, 0);
  }
}

TEST(FieldContext, PsiIsTheCharacterOfTheSubfield) {
  for (auto [m, n] : {std::pair{1u, 2u}, {2u, 2u}, {2u, 3u}, {3u, 2u}}) {
    const auto f = FieldContext::build(m, n);
    std::int64_t total = 0;
    const auto o = testing::naive(f);
    for (Elem c : f.fq_elements()) {
      total += f.psi(c);
      std::uint32_t t = 0;
      for (unsigned i = 0; i < m; ++i) t ^= o.frob(c.value, i);
      ASSERT_LE(t, 1u);
      EXPECT_EQ(f.psi(c), t ? -1 : 1);
    }
    EXPECT_EQ(total, 0);
    EXPECT_EQ(f.psi(f.one()), m % 2 ? -1 : 1);
  }
  const auto f = FieldContext::build(2, 2);
  EXPECT_TRUE(ThrowsCode(ErrorCode::kNotInSubfield, [&] { f.psi(Elem(2)); }));
}

TEST(FieldContext, SubfieldEnumeration) {
  const auto f = FieldContext::build(3, 2);
  ASSERT_EQ(f.fq_elements().size(), 8u);
  ASSERT_EQ(f.subfield_basis().size(), 3u);
  for (Elem c : f.fq_elements()) EXPECT_EQ(f.frobenius(c, 3), c);
  std::size_t count = 0;
  for (std::uint32_t v = 0; v < f.size(); ++v) count += f.in_fq(Elem(v));
  EXPECT_EQ(count, 8u);
}

TEST(FieldContext, CoordinatesRoundTrip) {
  const auto f = FieldContext::build(2, 4);
  for (std::size_t i = 0; i < f.fq_basis().size(); ++i) {
    const auto c = f.fq_coordinates(f.fq_basis()[i]);
    for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? f.one() : f.zero());
  }
  for (Elem c : f.fq_coordinates(f.zero())) EXPECT_TRUE(c.is_zero());
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    const auto c = f.fq_coordinates(Elem(v));
    ASSERT_EQ(c.size(), 4u);
    for (Elem x : c) EXPECT_TRUE(f.in_fq(x));
    EXPECT_EQ(f.fq_combine(c), Elem(v));
  }
}

TEST(FieldContext, LinearIndependenceOverFq) {
  const auto& f4 = gf4();
  EXPECT_TRUE(f4.fq_linearly_independent(std::vector<Elem>{f4.one()}));
  EXPECT_TRUE(f4.fq_linearly_independent(std::vector<Elem>{f4.one(), Elem(2)}));
  EXPECT_FALSE(f4.fq_linearly_independent(std::vector<Elem>{f4.one(), f4.one()}));
  EXPECT_FALSE(f4.fq_linearly_independent(std::vector<Elem>{f4.one(), Elem(2), Elem(3)}));
  const auto f = FieldContext::build(2, 3);
  for (Elem c : f.fq_elements()) {
    EXPECT_FALSE(f.fq_linearly_independent(std::vector<Elem>{f.one(), c}));
  }
  EXPECT_FALSE(f.fq_linearly_independent(std::vector<Elem>{f.zero()}));
  EXPECT_TRUE(f.fq_linearly_independent(f.fq_basis()));
}

TEST(FieldContext, GuardsEnumeration) {
  const auto f = FieldContext::build(1, 16);
  EXPECT_NO_THROW(f.require_enumerable("test"));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kSizeGuard, [&] { f.require_charsum_enumerable("test"); }));
}

}  // namespace
}  // namespace gf2perm
