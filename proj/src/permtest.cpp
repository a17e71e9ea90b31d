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

#include <algorithm>
#include <numeric>
#include <string>

#include "gf2perm/charsum.hpp"
#include "gf2perm/errors.hpp"

namespace gf2perm {

void MonomialPoly::add(const FieldContext& ctx, Elem coeff, const BigInt& exponent) {
  if (exponent < 1) throw Error(ErrorCode::kBadParameters, "monomial exponents must be positive");
  if (!ctx.contains(coeff)) throw Error(ErrorCode::kBadParameters, "coefficient outside the field");
  // x^e and x^{e'} agree on F_{q^n} when e = e' mod (q^n - 1), both e, e' > 0.
  const std::uint64_t e = static_cast<std::uint64_t>((exponent - 1) % ctx.order()) + 1;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Monomial& t, std::uint64_t v) { return t.exponent < v; });
  if (it != terms_.end() && it->exponent == e) {
    it->coeff += coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else if (!coeff.is_zero()) {
    terms_.insert(it, Monomial{coeff, e});
  }
}

Elem MonomialPoly::evaluate(const FieldContext& ctx, Elem x) const {
  Elem sum;
  for (const auto& t : terms_) sum += ctx.mul(t.coeff, ctx.pow(x, t.exponent));
  return sum;
}

std::vector<std::uint32_t> MonomialPoly::value_table(const FieldContext& ctx) const {
  ctx.require_enumerable("value_table");
  std::vector<std::uint32_t> table(ctx.size(), 0);
  for (std::uint64_t v = 1; v < ctx.size(); ++v) table[v] = evaluate(ctx, Elem(static_cast<std::uint32_t>(v))).value;
  return table;
}

MonomialPoly expand(const FieldContext& ctx, const QuadFamilySpec& spec) {
  if (spec.Ls.size() != ctx.n()) {
    throw Error(ErrorCode::kBadParameters, "quadratic family spec needs exactly n = " + std::to_string(ctx.n()) +
                                               " linearized polynomials");
  }
  MonomialPoly f;
  for (unsigned i = 0; i < ctx.n(); ++i) {
    const BigInt inner = pow2(ctx.m() * i) + 1;  // q^i + 1
    for (unsigned j = 0; j < ctx.bits(); ++j) {
      const Elem c = spec.Ls[i].coeff(j);
      if (!c.is_zero()) f.add(ctx, c, BigInt(pow2(j) * inner));
    }
  }
  return f;
}

MonomialPoly expand(const FieldContext& ctx, const TraceFormSpec& spec) {
  if (!spec.L0.q_linear() || !spec.L1.q_linear()) {
    throw Error(ErrorCode::kNotQLinear, "trace-form spec needs q-linear L0 and L1");
  }
  MonomialPoly f;
  for (unsigned j = 0; j < ctx.bits(); ++j) {
    const Elem c = spec.L0.coeff(j);
    if (!c.is_zero()) f.add(ctx, c, pow2(j + spec.l));
  }
  for (unsigned j = 0; j < ctx.bits(); ++j) {
    const Elem d = spec.L1.coeff(j);
    if (d.is_zero()) continue;
    for (unsigned i = 0; i < ctx.n(); ++i) f.add(ctx, d, BigInt(pow2(j) + pow2(ctx.m() * i)));
  }
  return f;
}

std::string_view perm_method_name(PermMethod m) {
  switch (m) {
    case PermMethod::kBruteForce: return "brute";
    case PermMethod::kCharSum: return "charsum";
    case PermMethod::kQuadSpec: return "quadspec";
    case PermMethod::kStructured: return "structured";
  }
  return "unknown";
}

PermReport is_perm_bruteforce(const FieldContext& ctx, const MonomialPoly& f) {
  ctx.require_enumerable("is_perm_bruteforce");
  // first_preimage[y] = 1 + the first v seen with f(v) = y.
  std::vector<std::uint32_t> first_preimage(ctx.size(), 0);
  PermReport r;
  r.method = PermMethod::kBruteForce;
  r.is_permutation = true;
  for (std::uint64_t v = 0; v < ctx.size(); ++v) {
    const Elem x(static_cast<std::uint32_t>(v));
    const std::uint32_t y = f.evaluate(ctx, x).value;
    if (first_preimage[y] != 0) {
      r.is_permutation = false;
      r.witness = x;
      r.collision_with = Elem(first_preimage[y] - 1);
      return r;
    }
    first_preimage[y] = static_cast<std::uint32_t>(v + 1);
  }
  return r;
}

PermReport is_perm_charsum(const FieldContext& ctx, const MonomialPoly& f) {
  ctx.require_charsum_enumerable("is_perm_charsum");
  const auto values = f.value_table(ctx);
  PermReport r;
  r.method = PermMethod::kCharSum;
  r.is_permutation = true;
  for (std::uint64_t u = 1; u < ctx.size(); ++u) {
    const Elem eu(static_cast<std::uint32_t>(u));
    std::int64_t sum = 0;
    for (std::uint32_t y : values) sum += ctx.chi(ctx.mul(eu, Elem(y)));
    if (sum != 0) {
      r.is_permutation = false;
      r.witness = eu;
      return r;
    }
  }
  return r;
}

LinearizedPoly ell_u(const FieldContext& ctx, const std::vector<LinearizedPoly>& adjoints, Elem u) {
  std::vector<Elem> coeffs(ctx.bits());
  for (unsigned i = 0; i < adjoints.size(); ++i) coeffs[ctx.m() * i] = evaluate(ctx, adjoints[i], u);
  return LinearizedPoly(ctx, std::move(coeffs));
}

PermReport is_perm_quadspec(const FieldContext& ctx, const QuadFamilySpec& spec) {
  ctx.require_enumerable("is_perm_quadspec");
  if (spec.Ls.size() != ctx.n()) {
    throw Error(ErrorCode::kBadParameters, "quadratic family spec needs exactly n linearized polynomials");
  }
  std::vector<LinearizedPoly> adjoints;
  for (const auto& L : spec.Ls) adjoints.push_back(adjoint(ctx, L));

  PermReport r;
  r.method = PermMethod::kQuadSpec;
  r.is_permutation = true;
  for (std::uint64_t u = 1; u < ctx.size(); ++u) {
    const Elem eu(static_cast<std::uint32_t>(u));
    if (!charsum_vanishes(ctx, ell_u(ctx, adjoints, eu))) {
      r.is_permutation = false;
      r.witness = eu;
      return r;
    }
  }
  return r;
}

bool quadratic_n2_criterion(const FieldContext& ctx, const LinearizedPoly& L0, const LinearizedPoly& L1) {
  if (ctx.n() != 2) throw Error(ErrorCode::kWrongDegree, "n = 2 criterion applied with n = " + std::to_string(ctx.n()));
  const LinearizedPoly relative_trace =
      LinearizedPoly::q_monomial(ctx, 1, ctx.one()) + LinearizedPoly::identity(ctx);
  if (!to_matrix(ctx, compose(ctx, L1, relative_trace)).is_zero()) return false;
  return kernel(ctx, L0).dim2 == 0;
}

QuadFamilySpec quadratic_n2_spec(const FieldContext& ctx, const LinearizedPoly& L0, const LinearizedPoly& L1) {
  if (ctx.n() != 2) throw Error(ErrorCode::kWrongDegree, "n = 2 spec needs n = 2");
  return QuadFamilySpec{{L0, L1}};
}

namespace {

void check_odd_degree_params(const FieldContext& ctx, unsigned k) {
  const unsigned n = ctx.n();
  if (n % 2 == 0 || !(k > 0 && 2 * k < n) || std::gcd(k, n) != 1) {
    throw Error(ErrorCode::kBadParameters, "odd-degree criterion needs n odd, 0 < 2k < n, gcd(k, n) = 1 (k = " +
                                               std::to_string(k) + ", n = " + std::to_string(n) + ")");
  }
}

}  // namespace

bool odd_degree_criterion(const FieldContext& ctx, unsigned k, const LinearizedPoly& L0) {
  check_odd_degree_params(ctx, k);
  const LinearizedPoly L0_adj = adjoint(ctx, L0);
  const std::uint64_t e = (std::uint64_t{1} << (ctx.m() * k)) + 1;
  for (std::uint64_t v = 1; v < ctx.size(); ++v) {
    const Elem u(static_cast<std::uint32_t>(v));
    const Elem value = ctx.mul(evaluate(ctx, L0_adj, ctx.pow(u, e)), ctx.inverse(ctx.square(u)));
    if (ctx.trace_to(value, ctx.m()) == ctx.one()) return false;
  }
  return true;
}

QuadFamilySpec odd_degree_spec(const FieldContext& ctx, unsigned k, const LinearizedPoly& L0) {
  check_odd_degree_params(ctx, k);
  QuadFamilySpec spec{std::vector<LinearizedPoly>(ctx.n(), LinearizedPoly::zero(ctx))};
  spec.Ls[0] = L0;
  spec.Ls[k] = LinearizedPoly::identity(ctx);
  return spec;
}

bool trace_form_criterion(const FieldContext& ctx, const TraceFormSpec& spec) {
  if (!spec.L0.q_linear() || !spec.L1.q_linear()) {
    throw Error(ErrorCode::kNotQLinear, "trace-form criterion needs q-linear L0 and L1");
  }
  const LinearizedPoly L0_adj = adjoint(ctx, spec.L0);
  const LinearizedPoly L1_adj = adjoint(ctx, spec.L1);
  for (std::uint64_t v = 1; v < ctx.size(); ++v) {
    const Elem u(static_cast<std::uint32_t>(v));
    const Elem x = evaluate(ctx, L1_adj, u);
    const Elem y = evaluate(ctx, L0_adj, u);
    const Elem xl = ctx.frobenius(x, static_cast<long>(spec.l));
    if (ctx.in_fq(x) && !(ctx.square(y) + xl).is_zero()) continue;
    const Elem triple[] = {ctx.one(), y, xl};
    if (ctx.fq_linearly_independent(triple)) continue;
    return false;
  }
  return true;
}

bool trace_monomial_criterion(const FieldContext& ctx, Elem a, unsigned k, unsigned l) {
  const unsigned m = ctx.m();
  if (ctx.n() % 2 == 0) return false;
  const BigInt qn1_over_q1 = exact_div(pow2(ctx.bits()) - 1, pow2(m) - 1);
  if (gcd(pow2(l + m * k) - 1, qn1_over_q1) != 1) return false;
  if (a.is_zero() || !ctx.in_fq(a)) return false;
  const unsigned d = std::gcd(l > 0 ? l - 1 : 1u, m);  // gcd(|l - 1|, m)
  const std::uint64_t e = (ctx.q() - 1) / ((std::uint64_t{1} << d) - 1);
  return ctx.pow(a, e) != ctx.one();
}

TraceFormSpec trace_monomial_spec(const FieldContext& ctx, Elem a, unsigned k, unsigned l) {
  return TraceFormSpec{LinearizedPoly::q_monomial(ctx, k, a), LinearizedPoly::identity(ctx), l};
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kTu: return "tu";
    case Family::kAbNorm: return "abnorm";
    case Family::kQ4: return "q4";
    case Family::kTrForm: return "trform";
    case Family::kAqk: return "aqk";
    case Family::kBlokhuis: return "blokhuis";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kTu, Family::kAbNorm, Family::kQ4, Family::kTrForm, Family::kAqk, Family::kBlokhuis}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

bool family_is_iff(Family f) {
  return f == Family::kAbNorm || f == Family::kTrForm || f == Family::kAqk;
}

namespace {

[[noreturn]] void bad_family(Family f, const std::string& why) {
  throw Error(ErrorCode::kBadParameters, std::string("family ") + std::string(family_name(f)) + ": " + why);
}

bool in_fq_star(const FieldContext& ctx, Elem a) { return !a.is_zero() && ctx.in_fq(a); }

void check_family(const FieldContext& ctx, Family family, const FamilyParams& p) {
  const unsigned n = ctx.n();
  switch (family) {
    case Family::kTu:
      if (n != 3) bad_family(family, "needs n = 3");
      if (!in_fq_star(ctx, p.a)) bad_family(family, "needs a in F_q^*");
      break;
    case Family::kAbNorm:
      if (n != 3) bad_family(family, "needs n = 3");
      break;
    case Family::kQ4: {
      if (ctx.m() != 2 || n % 2 == 0 || n < 3) bad_family(family, "needs q = 4 and odd n >= 3");
      if (p.variant > 1) bad_family(family, "variant must be 0 or 1");
      const Elem t = ctx.pow(p.a, (std::uint64_t{1} << n) - 1);
      if (!ctx.in_subfield(t, 2) || t.value <= 1) bad_family(family, "needs a^{2^n-1} in F_4 \\ F_2");
      break;
    }
    case Family::kTrForm:
    case Family::kAqk:
      if (!(p.k > 0 && p.k < n && std::gcd(p.k, n) == 1)) bad_family(family, "needs 0 < k < n, gcd(k, n) = 1");
      if (p.a.is_zero()) bad_family(family, "needs a != 0");
      break;
    case Family::kBlokhuis:
      if (n % 2 == 0) bad_family(family, "needs odd n");
      if (!in_fq_star(ctx, p.a) || p.a == ctx.one()) bad_family(family, "needs a in F_q^* \\ {1}");
      break;
  }
}

void add_x_trace_x(const FieldContext& ctx, MonomialPoly& f) {
  for (unsigned i = 0; i < ctx.n(); ++i) f.add(ctx, ctx.one(), BigInt(pow2(ctx.m() * i) + 1));
}

}  // namespace

bool family_predicate(const FieldContext& ctx, Family family, const FamilyParams& p) {
  check_family(ctx, family, p);
  switch (family) {
    case Family::kTu:
    case Family::kQ4:
    case Family::kBlokhuis:
      return true;
    case Family::kAbNorm: {
      const Elem lhs = ctx.norm_to(p.a, ctx.m()) + ctx.norm_to(p.b, ctx.m());
      return lhs == ctx.mul(p.a, p.b);
    }
    case Family::kTrForm: {
      if (ctx.trace_to(ctx.inverse(p.a), ctx.m()).is_zero()) return false;
      const Elem na = ctx.norm_to(p.a, ctx.m());
      for (Elem c : ctx.fq_elements()) {
        if (!c.is_zero() && ctx.norm_to(p.a + c, ctx.m()) == na) return false;
      }
      return true;
    }
    case Family::kAqk:
      return in_fq_star(ctx, p.a) && ctx.n() % 2 == 1 && std::gcd<std::uint64_t>(ctx.n(), ctx.q() - 1) == 1;
  }
  return false;
}

MonomialPoly family_polynomial(const FieldContext& ctx, Family family, const FamilyParams& p) {
  check_family(ctx, family, p);
  const unsigned m = ctx.m();
  const unsigned n = ctx.n();
  MonomialPoly f;
  switch (family) {
    case Family::kTu:
      f.add(ctx, ctx.one(), BigInt(pow2(2 * m) + 1));
      f.add(ctx, ctx.one(), BigInt(pow2(m) + 1));
      f.add(ctx, p.a, 1);
      break;
    case Family::kAbNorm:
      f.add(ctx, ctx.one(), BigInt(pow2(m) + 1));
      f.add(ctx, p.a, BigInt(2 * pow2(m)));
      f.add(ctx, p.b, 2);
      break;
    case Family::kQ4:
      if (p.variant == 0) {
        f.add(ctx, ctx.one(), BigInt(pow2(n) + 2));
        f.add(ctx, p.a, 1);
      } else {
        const unsigned k = (n - 1) / 2;
        f.add(ctx, ctx.one(), BigInt(pow2(m * k) + 1));
        f.add(ctx, p.a, BigInt(2 * pow2(m * (n - 1))));
      }
      break;
    case Family::kTrForm: {
      const long shift = static_cast<long>(m * (n - p.k));
      f.add(ctx, ctx.frobenius(p.a, shift), pow2(static_cast<unsigned>(shift)));
      f.add(ctx, p.a, 1);
      add_x_trace_x(ctx, f);
      break;
    }
    case Family::kAqk:
      f.add(ctx, p.a, pow2(m * p.k));
      f.add(ctx, p.a, 1);
      add_x_trace_x(ctx, f);
      break;
    case Family::kBlokhuis:
      f.add(ctx, p.a, 2);
      add_x_trace_x(ctx, f);
      break;
  }
  return f;
}

}  // namespace gf2perm
