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

#include "gf2perm/charsum.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gf2perm/bigint.hpp"
#include "gf2perm/errors.hpp"

namespace gf2perm {

std::string_view form_type_name(FormType t) {
  switch (t) {
    case FormType::kZeroSum: return "zero-sum";
    case FormType::kPlus: return "plus";
    case FormType::kMinus: return "minus";
  }
  return "unknown";
}

namespace {

void require_q_linear(const LinearizedPoly& L, const char* what) {
  if (!L.q_linear()) throw Error(ErrorCode::kNotQLinear, std::string(what) + " requires a q-linear polynomial");
}

void check_binomial_params(const FieldContext& ctx, unsigned k) {
  const unsigned n = ctx.n();
  if (!(k > 0 && 2 * k < n && std::gcd(k, n) == 1)) {
    throw Error(ErrorCode::kBadParameters,
                "binomial criterion needs 0 < 2k < n and gcd(k, n) = 1 (k = " + std::to_string(k) +
                    ", n = " + std::to_string(n) + ")");
  }
}

Elem form_on(const FieldContext& ctx, const LinearizedPoly& L, Elem v) {
  return ctx.trace_to(ctx.mul(v, evaluate(ctx, L, v)), ctx.m());
}

std::int64_t q_power(const FieldContext& ctx, unsigned e) {
  return std::int64_t{1} << (ctx.m() * e);
}

}  // namespace

Elem GramMatrix::form_value(const FieldContext& ctx, const std::vector<Elem>& coords) const {
  Elem sum;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) sum += ctx.mul(ctx.mul(coords[i], coords[j]), at(i, j));
  }
  return sum;
}

std::int64_t charsum_bruteforce(const FieldContext& ctx, const LinearizedPoly& L) {
  ctx.require_enumerable("charsum_bruteforce");
  const BitMatrix mat = to_matrix(ctx, L);
  std::vector<std::uint32_t> cols(ctx.bits());
  for (unsigned j = 0; j < ctx.bits(); ++j) cols[j] = static_cast<std::uint32_t>(mat.column(j));

  // Gray-code walk: consecutive v differ in one bit, so L(v) updates by one column.
  std::int64_t sum = 1;  // v = 0
  std::uint32_t v = 0;
  std::uint32_t lv = 0;
  for (std::uint64_t i = 1; i < ctx.size(); ++i) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
    v ^= std::uint32_t{1} << bit;
    lv ^= cols[bit];
    sum += ctx.chi(ctx.mul(Elem(v), Elem(lv)));
  }
  return sum;
}

bool charsum_vanishes(const FieldContext& ctx, const LinearizedPoly& L) {
  require_q_linear(L, "charsum_vanishes");
  const Kernel k = kernel(ctx, adjoint(ctx, L) + L);
  for (Elem v : k.basis) {
    if (!form_on(ctx, L, v).is_zero()) return true;
  }
  return false;
}

QuadraticFormReport charsum_fast(const FieldContext& ctx, const LinearizedPoly& L) {
  require_q_linear(L, "charsum_fast");
  const Kernel k = kernel(ctx, adjoint(ctx, L) + L);

  QuadraticFormReport report;
  report.kernel_dim_fq = k.dim_fq;
  report.vanishes_on_kernel = true;
  // Q restricted to K is additive, so checking a GF(2)-basis suffices.
  for (Elem v : k.basis) {
    if (!form_on(ctx, L, v).is_zero()) {
      report.vanishes_on_kernel = false;
      break;
    }
  }
  if ((ctx.n() - k.dim_fq) % 2 != 0) {
    throw std::logic_error("polar form of Tr(xL(x)) has odd rank");
  }
  report.hyperbolic_planes = (ctx.n() - k.dim_fq) / 2;
  report.rank = 2 * report.hyperbolic_planes + (report.vanishes_on_kernel ? 0 : 1);
  if (!report.vanishes_on_kernel) {
    report.s_value = 0;
    report.form_type = FormType::kZeroSum;
    return report;
  }

  // S^2 = q^n |K| = 2^{N + dim2}
  const unsigned exponent2 = ctx.bits() + k.dim2;
  const std::int64_t magnitude = std::int64_t{1} << (exponent2 / 2);
  const QuadraticFormReport reduced = classify_form(ctx, L);
  if (reduced.form_type == FormType::kZeroSum) {
    report.sign_resolved = false;
    report.form_type = FormType::kPlus;
    report.s_value = magnitude;
    return report;
  }
  report.form_type = reduced.form_type;
  report.s_value = reduced.form_type == FormType::kMinus ? -magnitude : magnitude;
  return report;
}

GramMatrix gram_matrix(const FieldContext& ctx, const LinearizedPoly& L) {
  require_q_linear(L, "gram_matrix");
  const auto& basis = ctx.fq_basis();
  GramMatrix g;
  g.n = ctx.n();
  g.entries.resize(g.n * g.n);
  std::vector<Elem> images(g.n);
  for (unsigned j = 0; j < g.n; ++j) images[j] = evaluate(ctx, L, basis[j]);
  for (unsigned i = 0; i < g.n; ++i) {
    for (unsigned j = 0; j < g.n; ++j) {
      g.entries[i * g.n + j] = ctx.trace_to(ctx.mul(basis[i], images[j]), ctx.m());
    }
  }
  return g;
}

QuadraticFormReport classify_form(const FieldContext& ctx, const LinearizedPoly& L) {
  const GramMatrix g = gram_matrix(ctx, L);
  const unsigned n = g.n;
  using Vec = std::vector<Elem>;

  // diag(i) = Q(beta_i); polar(i, j) = B(beta_i, beta_j) = G_ij + G_ji.
  auto polar = [&](const Vec& u, const Vec& v) {
    Elem s;
    for (unsigned i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      for (unsigned j = 0; j < n; ++j) {
        if (i == j || v[j].is_zero()) continue;
        s += ctx.mul(ctx.mul(u[i], v[j]), g.at(i, j) + g.at(j, i));
      }
    }
    return s;
  };
  auto quad = [&](const Vec& u) {
    Elem s;
    for (unsigned i = 0; i < n; ++i) {
      s += ctx.mul(ctx.square(u[i]), g.at(i, i));
      for (unsigned j = i + 1; j < n; ++j) s += ctx.mul(ctx.mul(u[i], u[j]), g.at(i, j) + g.at(j, i));
    }
    return s;
  };
  auto axpy = [&](Vec& w, Elem c, const Vec& e) {
    if (c.is_zero()) return;
    for (unsigned i = 0; i < n; ++i) w[i] += ctx.mul(c, e[i]);
  };

  std::vector<Vec> rest;
  for (unsigned i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = ctx.one();
    rest.push_back(std::move(e));
  }

  unsigned planes = 0;
  unsigned arf = 0;
  for (;;) {
    std::size_t pi = rest.size(), pj = rest.size();
    Elem pairing;
    for (std::size_t i = 0; i < rest.size() && pi == rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        pairing = polar(rest[i], rest[j]);
        if (!pairing.is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == rest.size()) break;

    Vec e = rest[pi];
    Vec f = rest[pj];
    const Elem scale = ctx.inverse(pairing);
    for (auto& c : f) c = ctx.mul(c, scale);
    rest.erase(rest.begin() + static_cast<long>(pj));
    rest.erase(rest.begin() + static_cast<long>(pi));
    for (auto& w : rest) {
      const Elem wf = polar(w, f);
      const Elem we = polar(w, e);
      axpy(w, wf, e);
      axpy(w, we, f);
    }
    // Q(x e + y f) = Q(e) x^2 + x y + Q(f) y^2; the plane's invariant is
    // the F_q -> F_2 trace of Q(e) Q(f), not the trace of F_{q^n}.
    if (ctx.psi(ctx.mul(quad(e), quad(f))) < 0) arf ^= 1u;
    ++planes;
  }

  QuadraticFormReport report;
  report.hyperbolic_planes = planes;
  report.kernel_dim_fq = static_cast<unsigned>(rest.size());
  report.vanishes_on_kernel = true;
  for (const auto& w : rest) {
    if (!quad(w).is_zero()) {
      report.vanishes_on_kernel = false;
      break;
    }
  }
  report.rank = 2 * planes + (report.vanishes_on_kernel ? 0 : 1);
  if (!report.vanishes_on_kernel) {
    report.form_type = FormType::kZeroSum;
    report.s_value = 0;
  } else {
    const std::int64_t magnitude = q_power(ctx, n - planes);
    report.form_type = arf ? FormType::kMinus : FormType::kPlus;
    report.s_value = arf ? -magnitude : magnitude;
  }
  return report;
}

bool degree2_charsum_vanishes(const FieldContext& ctx, Elem a, Elem b) {
  if (ctx.n() != 2) throw Error(ErrorCode::kWrongDegree, "degree-2 criterion needs n = 2");
  return (ctx.frobenius(a, ctx.m()) + a).is_zero() && !b.is_zero();
}

namespace {

Elem binomial_even_sum(const FieldContext& ctx, Elem a, Elem b, unsigned k) {
  const unsigned m = ctx.m();
  const BigInt qk1 = pow2(m * k) + 1;
  Elem sum;
  for (unsigned i = 0; i < ctx.n() / 2; ++i) {
    const unsigned e2 = m * 2 * k * i;  // q^{2ki} = 2^{e2}
    const BigInt expo = 2 * exact_div(pow2(e2) - 1, qk1);
    sum += ctx.mul(ctx.frobenius(b, static_cast<long>(e2)), ctx.pow(a, BigInt(-expo)));
  }
  return sum;
}

}  // namespace

bool binomial_charsum_vanishes(const FieldContext& ctx, Elem a, Elem b, unsigned k) {
  check_binomial_params(ctx, k);
  if (a.is_zero()) return !b.is_zero();
  const unsigned m = ctx.m();
  const unsigned n = ctx.n();
  if (n % 2 == 1) {
    const BigInt e = exact_div(pow2(m * k * n) + 1, pow2(m * k) + 1);
    const Elem t = ctx.trace_to(ctx.mul(b, ctx.pow(a, BigInt(-e))), m);
    return t != ctx.one();
  }
  return !binomial_even_sum(ctx, a, b, k).is_zero();
}

bool binomial_charsum_vanishes_solvable(const FieldContext& ctx, Elem a, Elem b, unsigned k) {
  check_binomial_params(ctx, k);
  if (ctx.n() % 2 == 0 && !a.is_zero()) {
    const std::uint64_t e = ctx.order() / (ctx.q() + 1);
    if (ctx.pow(a, e) != ctx.one()) return false;
  }
  return binomial_charsum_vanishes(ctx, a, b, k);
}

std::int64_t hyperbolic_plane_sum(const FieldContext& ctx, Elem a, Elem b) {
  if (!ctx.in_fq(a) || !ctx.in_fq(b)) {
    throw Error(ErrorCode::kNotInSubfield, "hyperbolic_plane_sum needs a, b in F_q");
  }
  std::int64_t sum = 0;
  for (Elem v1 : ctx.fq_elements()) {
    for (Elem v2 : ctx.fq_elements()) {
      sum += ctx.psi(ctx.mul(v1, v2) + ctx.mul(a, v1) + ctx.mul(b, v2));
    }
  }
  return sum;
}

}  // namespace gf2perm
