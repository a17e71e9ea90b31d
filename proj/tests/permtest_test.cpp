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

#include "gf2perm/permtest.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gf2perm/charsum.hpp"
#include "test_util.hpp"

namespace gf2perm {
namespace {

using testing::ThrowsCode;

using Terms = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

MonomialPoly poly(const FieldContext& f, const Terms& terms) {
  MonomialPoly p;
  for (const auto& [c, e] : terms) p.add(f, Elem(c), e);
  return p;
}

LinearizedPoly lin(const FieldContext& f, std::initializer_list<std::pair<long, std::uint32_t>> terms) {
  auto L = LinearizedPoly::zero(f);
  for (const auto& [i, c] : terms) L = L + LinearizedPoly::monomial(f, i, Elem(c));
  return L;
}

// Re-checks a negative report from first principles.
void expect_witness_valid(const FieldContext& f, const MonomialPoly& p, const PermReport& r) {
  ASSERT_FALSE(r.is_permutation);
  ASSERT_TRUE(r.witness.has_value());
  if (r.collision_with) {
    EXPECT_NE(*r.witness, *r.collision_with);
    EXPECT_EQ(p.evaluate(f, *r.witness), p.evaluate(f, *r.collision_with));
  } else {
    std::int64_t s = 0;
    for (std::uint32_t v = 0; v < f.size(); ++v) s += f.chi(f.mul(*r.witness, p.evaluate(f, Elem(v))));
    EXPECT_NE(s, 0);
  }
}

TEST(MonomialPoly, ReductionAndMerging) {
  const auto f = FieldContext::build(1, 3);
  MonomialPoly p;
  p.add(f, f.one(), 8);  // x^8 = x
  p.add(f, f.one(), 1);
  EXPECT_TRUE(p.empty());
  p.add(f, Elem(3), 14);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms()[0].exponent, 7);
  EXPECT_EQ(p.evaluate(f, f.zero()), f.zero());
  EXPECT_TRUE(ThrowsCode(ErrorCode::kBadParameters, [&] { p.add(f, f.one(), 0); }));
}

TEST(MonomialPoly, EvaluationMatchesOracle) {
  const auto f = FieldContext::build(2, 4);
  const auto o = testing::naive(f);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Terms terms;
    for (int k = 0; k < 3; ++k) terms.emplace_back(1 + rng() % f.order(), 1 + rng() % f.order());
    const auto p = poly(f, terms);
    const auto table = p.value_table(f);
    for (std::uint32_t v = 0; v < f.size(); v += 13) {
      EXPECT_EQ(table[v], oracle::eval_terms(o, terms, v));
      EXPECT_EQ(p.evaluate(f, Elem(v)).value, table[v]);
    }
  }
}

TEST(PermTest, BruteForceExamples) {
  const auto f4 = FieldContext::build(1, 2);
  const auto f8 = FieldContext::build(1, 3);
  EXPECT_TRUE(is_perm_bruteforce(f4, poly(f4, {{1, 1}})).is_permutation);
  const auto cube = poly(f4, {{1, 3}});
  const auto r = is_perm_bruteforce(f4, cube);
  expect_witness_valid(f4, cube, r);
  EXPECT_TRUE(is_perm_bruteforce(f8, poly(f8, {{1, 3}})).is_permutation);
}

TEST(PermTest, CharSumExamplesAndWitnesses) {
  const auto f = FieldContext::build(2, 3);
  EXPECT_TRUE(is_perm_charsum(f, poly(f, {{1, 1}})).is_permutation);
  EXPECT_TRUE(is_perm_charsum(f, poly(f, {{1, 2}})).is_permutation);
  const auto p = poly(f, {{1, 2}, {1, 1}});
  const auto r = is_perm_charsum(f, p);
  expect_witness_valid(f, p, r);
  EXPECT_FALSE(r.collision_with.has_value());
  EXPECT_TRUE(ThrowsCode(ErrorCode::kSizeGuard, [] {
    const auto big = FieldContext::build(1, 13);
    is_perm_charsum(big, poly(big, {{1, 1}}));
  }));
}

TEST(PermTest, MethodsAgreeWithOracle) {
  std::mt19937_64 rng(2);
  for (auto [m, n] : {std::pair{1u, 4u}, {2u, 2u}, {1u, 5u}, {3u, 2u}}) {
    const auto f = FieldContext::build(m, n);
    const auto o = testing::naive(f);
    for (int t = 0; t < 60; ++t) {
      Terms terms;
      const int nt = 1 + t % 3;
      for (int k = 0; k < nt; ++k) terms.emplace_back(1 + rng() % f.order(), 1 + rng() % f.order());
      const auto p = poly(f, terms);
      const bool truth = oracle::is_bijective(o, terms);
      const auto brute = is_perm_bruteforce(f, p);
      const auto cs = is_perm_charsum(f, p);
      EXPECT_EQ(brute.is_permutation, truth);
      EXPECT_EQ(cs.is_permutation, truth);
      if (!truth) {
        expect_witness_valid(f, p, brute);
        expect_witness_valid(f, p, cs);
      }
    }
  }
}

TEST(PermTest, QuadSpecExamples) {
  const auto f4 = FieldContext::build(1, 2);
  // x^{q+1}
  const QuadFamilySpec cube{{LinearizedPoly::zero(f4), LinearizedPoly::identity(f4)}};
  EXPECT_FALSE(is_perm_quadspec(f4, cube).is_permutation);
  const auto f8 = FieldContext::build(1, 3);
  // x^{q^2+1} + x^{q+1} + x, with x = (x^2)^{2^{-1}}
  const QuadFamilySpec tu{{lin(f8, {{2, 1}}), LinearizedPoly::identity(f8), LinearizedPoly::identity(f8)}};
  EXPECT_EQ(expand(f8, tu), poly(f8, {{1, 5}, {1, 3}, {1, 1}}));
  EXPECT_TRUE(is_perm_quadspec(f8, tu).is_permutation);
  // Only L_0: permutation iff L_0 is injective.
  const auto f = FieldContext::build(2, 3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const auto L0 = lin(f, {{static_cast<long>(rng() % 6), static_cast<std::uint32_t>(rng() % 64)},
                            {static_cast<long>(rng() % 6), static_cast<std::uint32_t>(rng() % 64)}});
    const QuadFamilySpec spec{{L0, LinearizedPoly::zero(f), LinearizedPoly::zero(f)}};
    EXPECT_EQ(is_perm_quadspec(f, spec).is_permutation, kernel(f, L0).dim2 == 0);
  }
}

TEST(PermTest, QuadSpecAgreesWithBruteForce) {
  std::mt19937_64 rng(4);
  for (auto [m, n] : {std::pair{1u, 3u}, {2u, 2u}, {1u, 4u}, {2u, 3u}}) {
    const auto f = FieldContext::build(m, n);
    for (int t = 0; t < 60; ++t) {
      QuadFamilySpec spec;
      for (unsigned i = 0; i < n; ++i) {
        spec.Ls.push_back(t % 2 ? lin(f, {{static_cast<long>(rng() % f.bits()), static_cast<std::uint32_t>(rng() % f.size())}})
                                : lin(f, {{static_cast<long>(rng() % f.bits()), static_cast<std::uint32_t>(rng() % f.size())},
                                          {static_cast<long>(rng() % f.bits()), static_cast<std::uint32_t>(rng() % f.size())}}));
      }
      const auto expanded = expand(f, spec);
      const auto quad = is_perm_quadspec(f, spec);
      EXPECT_EQ(quad.is_permutation, is_perm_bruteforce(f, expanded).is_permutation);
      if (!quad.is_permutation) {
        // witness u has S(l_u) != 0
        std::vector<LinearizedPoly> adj;
        for (const auto& L : spec.Ls) adj.push_back(adjoint(f, L));
        ASSERT_TRUE(quad.witness.has_value());
        EXPECT_NE(charsum_bruteforce(f, ell_u(f, adj, *quad.witness)), 0);
        expect_witness_valid(f, expanded, quad);
      }
    }
  }
}

TEST(PermTest, DegreeTwoCriterionExamples) {
  const auto f = FieldContext::build(1, 2);
  const auto x = LinearizedPoly::identity(f);
  const auto x2x = lin(f, {{1, 1}, {0, 1}});
  EXPECT_TRUE(quadratic_n2_criterion(f, x, LinearizedPoly::zero(f)));
  for (std::uint32_t c = 0; c < 4; ++c) EXPECT_FALSE(quadratic_n2_criterion(f, lin(f, {{0, c}}), x));
  EXPECT_TRUE(quadratic_n2_criterion(f, x, x2x));
  EXPECT_TRUE(is_perm_bruteforce(f, expand(f, quadratic_n2_spec(f, x, x2x))).is_permutation);
  const auto f8 = FieldContext::build(1, 3);
  EXPECT_TRUE(ThrowsCode(ErrorCode::kWrongDegree, [&] { quadratic_n2_criterion(f8, LinearizedPoly::identity(f8), LinearizedPoly::identity(f8)); }));
}

TEST(PermTest, OddDegreeCriterionExamples) {
  const auto f8 = FieldContext::build(1, 3);
  EXPECT_TRUE(odd_degree_criterion(f8, 1, LinearizedPoly::zero(f8)));
  EXPECT_FALSE(odd_degree_criterion(f8, 1, LinearizedPoly::identity(f8)));
  EXPECT_FALSE(is_perm_bruteforce(f8, poly(f8, {{1, 3}, {1, 2}})).is_permutation);
  const auto f32 = FieldContext::build(1, 5);
  EXPECT_TRUE(odd_degree_criterion(f32, 2, LinearizedPoly::zero(f32)));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kBadParameters, [&] { odd_degree_criterion(f32, 3, LinearizedPoly::zero(f32)); }));
  const auto f16 = FieldContext::build(1, 4);
  EXPECT_TRUE(ThrowsCode(ErrorCode::kBadParameters, [&] { odd_degree_criterion(f16, 1, LinearizedPoly::zero(f16)); }));
}

TEST(PermTest, TraceFormExamples) {
  const auto f = FieldContext::build(2, 3);
  EXPECT_TRUE(trace_form_criterion(f, {LinearizedPoly::identity(f), LinearizedPoly::zero(f), 0}));
  const TraceFormSpec good{lin(f, {{0, 0}}) + LinearizedPoly::monomial(f, 0, f.fq_elements()[2]), LinearizedPoly::identity(f), 1};
  EXPECT_TRUE(trace_form_criterion(f, good));
  EXPECT_TRUE(is_perm_bruteforce(f, expand(f, good)).is_permutation);
  const TraceFormSpec bad{LinearizedPoly::identity(f), LinearizedPoly::identity(f), 1};
  EXPECT_FALSE(trace_form_criterion(f, bad));
  EXPECT_FALSE(is_perm_bruteforce(f, expand(f, bad)).is_permutation);
  EXPECT_TRUE(ThrowsCode(ErrorCode::kNotQLinear, [&] { trace_form_criterion(f, {lin(f, {{1, 1}}), LinearizedPoly::zero(f), 0}); }));
}

TEST(PermTest, TraceMonomialExamples) {
  const auto f = FieldContext::build(2, 3);
  const Elem w = f.fq_elements()[2];
  EXPECT_TRUE(trace_monomial_criterion(f, w, 0, 1));
  EXPECT_FALSE(trace_monomial_criterion(f, f.one(), 0, 1));
  const auto even = FieldContext::build(2, 2);
  for (std::uint32_t a = 1; a < even.size(); ++a) {
    for (unsigned l = 0; l < 4; ++l) EXPECT_FALSE(trace_monomial_criterion(even, Elem(a), 1, l));
  }
}

TEST(PermTest, Families) {
  const auto f8 = FieldContext::build(1, 3);
  EXPECT_TRUE(family_predicate(f8, Family::kTu, {f8.one(), {}, 1, 0}));
  EXPECT_TRUE(is_perm_bruteforce(f8, family_polynomial(f8, Family::kTu, {f8.one(), {}, 1, 0})).is_permutation);
  EXPECT_TRUE(family_predicate(f8, Family::kAbNorm, {f8.zero(), f8.zero(), 1, 0}));
  EXPECT_EQ(family_polynomial(f8, Family::kAbNorm, {f8.zero(), f8.zero(), 1, 0}), poly(f8, {{1, 3}}));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kBadParameters, [&] { family_predicate(f8, Family::kTu, {f8.zero(), {}, 1, 0}); }));
  EXPECT_TRUE(ThrowsCode(ErrorCode::kBadParameters, [&] { family_predicate(f8, Family::kQ4, {f8.one(), {}, 1, 0}); }));
  const auto f64 = FieldContext::build(2, 3);
  int count = 0;
  for (std::uint32_t a = 1; a < f64.size(); ++a) {
    const Elem t = f64.pow(Elem(a), std::uint64_t{7});
    if (!f64.in_subfield(t, 2) || t.value <= 1) continue;
    ++count;
    const FamilyParams p{Elem(a), {}, 1, 0};
    EXPECT_TRUE(family_predicate(f64, Family::kQ4, p));
    EXPECT_TRUE(is_perm_bruteforce(f64, family_polynomial(f64, Family::kQ4, p)).is_permutation);
  }
  EXPECT_GT(count, 0);
  EXPECT_EQ(parse_family("abnorm"), Family::kAbNorm);
  EXPECT_FALSE(parse_family("nope").has_value());
  EXPECT_EQ(family_name(Family::kBlokhuis), "blokhuis");
}

}  // namespace
}  // namespace gf2perm
