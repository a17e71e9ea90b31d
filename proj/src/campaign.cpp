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

#include "gf2perm/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "gf2perm/charsum.hpp"
#include "gf2perm/errors.hpp"
#include "gf2perm/linearized.hpp"
#include "gf2perm/permtest.hpp"

namespace gf2perm {

namespace {

constexpr const char* kCli = "gf2perm";

// splitmix64; fixed-width arithmetic only, so streams are identical on
// every platform.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  Rng r{a ^ (b * 0xd6e8feb86659fd93ULL)};
  r.next();
  return r.next();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Elem E(std::uint64_t v) { return Elem(static_cast<std::uint32_t>(v)); }

std::string quoted(const std::string& s) { return "'" + s + "'"; }

struct Outcome {
  std::int64_t structured = 0;
  std::int64_t oracle = 0;
  bool agree = true;
};

struct CaseText {
  std::string desc;
  std::string replay;
};

struct Grid {
  std::uint64_t exhaustive_size = 0;
  std::uint64_t random_size = 0;
  bool boolean = true;
  std::function<Outcome(std::uint64_t)> eval;
  std::function<CaseText(std::uint64_t)> describe;
};

template <class CaseAt, class Eval, class Describe>
Grid make_grid(std::uint64_t exhaustive, std::uint64_t random, CaseAt case_at, Eval eval, Describe describe) {
  Grid g;
  g.exhaustive_size = exhaustive;
  g.random_size = random;
  g.eval = [=](std::uint64_t i) { return eval(case_at(i)); };
  g.describe = [=](std::uint64_t i) { return describe(case_at(i)); };
  return g;
}

Outcome bool_outcome(bool structured, bool oracle) {
  return Outcome{structured, oracle, structured == oracle};
}

LinearizedPoly random_linearized(const FieldContext& ctx, Rng& rng, bool q_linear) {
  std::vector<Elem> coeffs(ctx.bits());
  for (unsigned i = 0; i < ctx.bits(); ++i) {
    if (!q_linear || i % ctx.m() == 0) coeffs[i] = E(rng.below(ctx.size()));
  }
  return LinearizedPoly(ctx, std::move(coeffs));
}

// a x^{q^k} + b x
LinearizedPoly binomial(const FieldContext& ctx, Elem a, unsigned k, Elem b) {
  return LinearizedPoly::q_monomial(ctx, k, a) + LinearizedPoly::monomial(ctx, 0, b);
}

std::vector<LinearizedPoly> support_at_most_two(const FieldContext& ctx) {
  std::vector<LinearizedPoly> out{LinearizedPoly::zero(ctx)};
  const unsigned nbits = ctx.bits();
  for (unsigned i = 0; i < nbits; ++i) {
    for (std::uint64_t c = 1; c < ctx.size(); ++c) out.push_back(LinearizedPoly::monomial(ctx, i, E(c)));
  }
  for (unsigned i = 0; i < nbits; ++i) {
    for (unsigned j = i + 1; j < nbits; ++j) {
      for (std::uint64_t c = 1; c < ctx.size(); ++c) {
        for (std::uint64_t d = 1; d < ctx.size(); ++d) {
          out.push_back(LinearizedPoly::monomial(ctx, i, E(c)) + LinearizedPoly::monomial(ctx, j, E(d)));
        }
      }
    }
  }
  return out;
}

// 0 and every a x^{q^j}.
std::vector<LinearizedPoly> q_monomials(const FieldContext& ctx) {
  std::vector<LinearizedPoly> out{LinearizedPoly::zero(ctx)};
  for (unsigned j = 0; j < ctx.n(); ++j) {
    for (std::uint64_t a = 1; a < ctx.size(); ++a) out.push_back(LinearizedPoly::q_monomial(ctx, j, E(a)));
  }
  return out;
}

std::vector<unsigned> binomial_ks(const FieldContext& ctx, const std::vector<unsigned>& requested) {
  if (!requested.empty()) return requested;
  std::vector<unsigned> ks;
  for (unsigned k = 1; 2 * k < ctx.n(); ++k) {
    if (std::gcd(k, ctx.n()) == 1) ks.push_back(k);
  }
  if (ks.empty()) throw Error(ErrorCode::kBadParameters, "no k with 0 < 2k < n and gcd(k, n) = 1 for n = " + std::to_string(ctx.n()));
  return ks;
}

std::vector<unsigned> coprime_ks(const FieldContext& ctx, const std::vector<unsigned>& requested) {
  if (!requested.empty()) return requested;
  std::vector<unsigned> ks;
  for (unsigned k = 1; k < ctx.n(); ++k) {
    if (std::gcd(k, ctx.n()) == 1) ks.push_back(k);
  }
  if (ks.empty()) throw Error(ErrorCode::kBadParameters, "no k with 0 < k < n and gcd(k, n) = 1 for n = " + std::to_string(ctx.n()));
  return ks;
}

std::string replay_charsum(const std::string& field, const LinearizedPoly& L) {
  return std::string(kCli) + " charsum --field " + field + " --poly " + quoted(format_linearized(L)) + " --method brute";
}

std::string replay_permtest(const std::string& field, const char* form, const std::string& poly) {
  return std::string(kCli) + " permtest --field " + field + " --form " + form + " --poly " + quoted(poly) +
         " --method brute";
}

Grid grid_degree2(const FieldContext& ctx, const std::string& field) {
  if (ctx.n() != 2) throw Error(ErrorCode::kWrongDegree, "thm4 needs n = 2");
  const std::uint64_t s = ctx.size();
  struct Case { Elem a, b; };
  auto at = [s](std::uint64_t i) { return Case{E(i / s), E(i % s)}; };
  auto eval = [ctx](const Case& c) {
    return bool_outcome(degree2_charsum_vanishes(ctx, c.a, c.b), charsum_bruteforce(ctx, binomial(ctx, c.a, 1, c.b)) == 0);
  };
  auto describe = [ctx, field](const Case& c) {
    return CaseText{"a=" + format_elem(c.a) + " b=" + format_elem(c.b), replay_charsum(field, binomial(ctx, c.a, 1, c.b))};
  };
  return make_grid(s * s, 0, at, eval, describe);
}

Grid grid_binomial(const FieldContext& ctx, const std::string& field, const std::vector<unsigned>& ks, bool solvable) {
  const std::uint64_t s = ctx.size();
  struct Case { unsigned k; Elem a, b; };
  auto at = [s, ks](std::uint64_t i) { return Case{ks[i / (s * s)], E((i / s) % s), E(i % s)}; };
  auto eval = [ctx, solvable](const Case& c) {
    const bool structured = solvable ? binomial_charsum_vanishes_solvable(ctx, c.a, c.b, c.k)
                                     : binomial_charsum_vanishes(ctx, c.a, c.b, c.k);
    return bool_outcome(structured, charsum_bruteforce(ctx, binomial(ctx, c.a, c.k, c.b)) == 0);
  };
  auto describe = [ctx, field](const Case& c) {
    return CaseText{"k=" + std::to_string(c.k) + " a=" + format_elem(c.a) + " b=" + format_elem(c.b),
                    replay_charsum(field, binomial(ctx, c.a, c.k, c.b))};
  };
  return make_grid(ks.size() * s * s, 0, at, eval, describe);
}

Grid grid_kernel_criterion(const FieldContext& ctx, const std::string& field, std::vector<unsigned> ks,
                           std::uint64_t samples, std::uint64_t salt) {
  if (ks.empty()) {
    for (unsigned k = 1; k < ctx.n(); ++k) ks.push_back(k);
  }
  const std::uint64_t s = ctx.size();
  const std::uint64_t exhaustive = ks.size() * s * s;
  auto at = [ctx, s, ks, exhaustive, salt](std::uint64_t i) {
    if (i < exhaustive) return binomial(ctx, E((i / s) % s), ks[i / (s * s)], E(i % s));
    Rng rng{mix(salt, i - exhaustive)};
    return random_linearized(ctx, rng, true);
  };
  auto eval = [ctx](const LinearizedPoly& L) {
    const std::int64_t brute = charsum_bruteforce(ctx, L);
    const QuadraticFormReport fast = charsum_fast(ctx, L);
    const QuadraticFormReport reduced = classify_form(ctx, L);
    return Outcome{fast.s_value, brute, fast.s_value == brute && reduced.s_value == brute && fast.sign_resolved};
  };
  auto describe = [ctx, field](const LinearizedPoly& L) {
    return CaseText{"L=" + format_linearized(L) + " classify=" + std::to_string(classify_form(ctx, L).s_value),
                    replay_charsum(field, L)};
  };
  return make_grid(exhaustive, samples, at, eval, describe);
}

Grid grid_charsum_perm(const FieldContext& ctx, const std::string& field, std::uint64_t samples, std::uint64_t salt) {
  ctx.require_charsum_enumerable("thm1");
  const std::uint64_t exhaustive = ctx.order();
  auto at = [ctx, exhaustive, salt](std::uint64_t i) {
    MonomialPoly f;
    if (i < exhaustive) {
      f.add(ctx, ctx.one(), i + 1);
      return f;
    }
    Rng rng{mix(salt, i - exhaustive)};
    for (int t = 0; t < 3; ++t) f.add(ctx, E(1 + rng.below(ctx.order())), 1 + rng.below(ctx.order()));
    return f;
  };
  auto eval = [ctx](const MonomialPoly& f) {
    return bool_outcome(is_perm_charsum(ctx, f).is_permutation, is_perm_bruteforce(ctx, f).is_permutation);
  };
  auto describe = [field](const MonomialPoly& f) {
    return CaseText{"f=" + format_monomials(f), replay_permtest(field, "monomials", format_monomials(f))};
  };
  return make_grid(exhaustive, samples, at, eval, describe);
}

Outcome quad_outcome(const FieldContext& ctx, bool structured, const QuadFamilySpec& spec, bool cross_check) {
  const bool oracle = is_perm_bruteforce(ctx, expand(ctx, spec)).is_permutation;
  Outcome o = bool_outcome(structured, oracle);
  if (cross_check && is_perm_quadspec(ctx, spec).is_permutation != oracle) o.agree = false;
  return o;
}

Grid grid_n2(const FieldContext& ctx, const std::string& field, std::uint64_t samples, std::uint64_t salt,
             bool cross_check) {
  if (ctx.n() != 2) throw Error(ErrorCode::kWrongDegree, "thm6 needs n = 2");
  const auto list = std::make_shared<const std::vector<LinearizedPoly>>(support_at_most_two(ctx));
  const std::uint64_t sz = list->size();
  const std::uint64_t exhaustive = sz * sz;
  struct Case { LinearizedPoly L0, L1; };
  auto at = [ctx, list, sz, exhaustive, salt](std::uint64_t i) {
    if (i < exhaustive) return Case{(*list)[i / sz], (*list)[i % sz]};
    Rng rng{mix(salt, i - exhaustive)};
    LinearizedPoly L0 = random_linearized(ctx, rng, false);
    return Case{L0, random_linearized(ctx, rng, false)};
  };
  auto eval = [ctx, cross_check](const Case& c) {
    return quad_outcome(ctx, quadratic_n2_criterion(ctx, c.L0, c.L1), quadratic_n2_spec(ctx, c.L0, c.L1), cross_check);
  };
  auto describe = [ctx, field](const Case& c) {
    const std::string poly = format_linearized(c.L0) + ";" + format_linearized(c.L1);
    const bool quad = is_perm_quadspec(ctx, quadratic_n2_spec(ctx, c.L0, c.L1)).is_permutation;
    return CaseText{"L0=" + format_linearized(c.L0) + " L1=" + format_linearized(c.L1) +
                        " quadspec=" + (quad ? "true" : "false"),
                    replay_permtest(field, "thm6", poly)};
  };
  return make_grid(exhaustive, samples, at, eval, describe);
}

Grid grid_odd(const FieldContext& ctx, const std::string& field, const std::vector<unsigned>& ks, std::uint64_t samples,
              std::uint64_t salt, bool cross_check) {
  const auto list = std::make_shared<const std::vector<LinearizedPoly>>(q_monomials(ctx));
  const std::uint64_t sz = list->size();
  const std::uint64_t exhaustive = ks.size() * sz;
  struct Case { unsigned k; LinearizedPoly L0; };
  auto at = [ctx, list, ks, sz, exhaustive, salt](std::uint64_t i) {
    if (i < exhaustive) return Case{ks[i / sz], (*list)[i % sz]};
    Rng rng{mix(salt, i - exhaustive)};
    const unsigned k = ks[rng.below(ks.size())];
    return Case{k, random_linearized(ctx, rng, false)};
  };
  auto eval = [ctx, cross_check](const Case& c) {
    return quad_outcome(ctx, odd_degree_criterion(ctx, c.k, c.L0), odd_degree_spec(ctx, c.k, c.L0), cross_check);
  };
  auto describe = [ctx, field](const Case& c) {
    const bool quad = is_perm_quadspec(ctx, odd_degree_spec(ctx, c.k, c.L0)).is_permutation;
    return CaseText{"k=" + std::to_string(c.k) + " L0=" + format_linearized(c.L0) + " quadspec=" + (quad ? "true" : "false"),
                    replay_permtest(field, "thm7", std::to_string(c.k) + ";" + format_linearized(c.L0))};
  };
  return make_grid(exhaustive, samples, at, eval, describe);
}

Grid grid_trace_form(const FieldContext& ctx, const std::string& field, std::vector<unsigned> ls) {
  if (ls.empty()) ls = {0, 1, 2};
  const auto list = std::make_shared<const std::vector<LinearizedPoly>>(q_monomials(ctx));
  const std::uint64_t sz = list->size();
  auto at = [list, ls, sz](std::uint64_t i) {
    return TraceFormSpec{(*list)[(i / sz) % sz], (*list)[i % sz], ls[i / (sz * sz)]};
  };
  auto eval = [ctx](const TraceFormSpec& t) {
    return bool_outcome(trace_form_criterion(ctx, t), is_perm_bruteforce(ctx, expand(ctx, t)).is_permutation);
  };
  auto describe = [field](const TraceFormSpec& t) {
    return CaseText{"L0=" + format_linearized(t.L0) + " L1=" + format_linearized(t.L1) + " l=" + std::to_string(t.l),
                    replay_permtest(field, "traceform", format_traceform(t))};
  };
  return make_grid(ls.size() * sz * sz, 0, at, eval, describe);
}

Grid grid_trace_monomial(const FieldContext& ctx, const std::string& field, std::vector<unsigned> ls) {
  if (ls.empty()) ls = {0, 1, 2, 3};
  const std::uint64_t na = ctx.order();
  const std::uint64_t n = ctx.n();
  struct Case { Elem a; unsigned k, l; };
  auto at = [na, n, ls](std::uint64_t i) {
    return Case{E(1 + i % na), static_cast<unsigned>((i / na) % n), ls[i / (na * n)]};
  };
  auto eval = [ctx](const Case& c) {
    return bool_outcome(trace_monomial_criterion(ctx, c.a, c.k, c.l),
                        is_perm_bruteforce(ctx, expand(ctx, trace_monomial_spec(ctx, c.a, c.k, c.l))).is_permutation);
  };
  auto describe = [field](const Case& c) {
    const std::string p = format_elem(c.a) + ";" + std::to_string(c.k) + ";" + std::to_string(c.l);
    return CaseText{"a=" + format_elem(c.a) + " k=" + std::to_string(c.k) + " l=" + std::to_string(c.l),
                    replay_permtest(field, "corollary", p)};
  };
  return make_grid(ls.size() * na * n, 0, at, eval, describe);
}

Grid grid_plane_sum(const FieldContext& ctx, const std::string& field) {
  const auto& fq = ctx.fq_elements();
  const std::uint64_t q = fq.size();
  struct Case { Elem a, b; };
  auto at = [fq, q](std::uint64_t i) { return Case{fq[i / q], fq[i % q]}; };
  auto eval = [ctx](const Case& c) {
    const std::int64_t closed = ctx.psi(ctx.mul(c.a, c.b)) * static_cast<std::int64_t>(ctx.q());
    const std::int64_t sum = hyperbolic_plane_sum(ctx, c.a, c.b);
    return Outcome{closed, sum, closed == sum};
  };
  auto describe = [field](const Case& c) {
    return CaseText{"a=" + format_elem(c.a) + " b=" + format_elem(c.b),
                    std::string(kCli) + " eval --field " + field + " --op prop2 --elem " + format_elem(c.a) +
                        " --elem2 " + format_elem(c.b)};
  };
  Grid g = make_grid(q * q, 0, at, eval, describe);
  g.boolean = false;
  return g;
}

std::vector<FamilyParams> family_cases(const FieldContext& ctx, Family family, const std::vector<unsigned>& ks) {
  std::vector<FamilyParams> out;
  switch (family) {
    case Family::kTu:
      for (Elem a : ctx.fq_elements()) {
        if (!a.is_zero()) out.push_back({a, {}, 1, 0});
      }
      break;
    case Family::kBlokhuis:
      for (Elem a : ctx.fq_elements()) {
        if (!a.is_zero() && a != ctx.one()) out.push_back({a, {}, 1, 0});
      }
      break;
    case Family::kAbNorm:
      for (std::uint64_t a = 0; a < ctx.size(); ++a) {
        for (std::uint64_t b = 0; b < ctx.size(); ++b) out.push_back({E(a), E(b), 1, 0});
      }
      break;
    case Family::kQ4:
      if (ctx.m() != 2 || ctx.n() % 2 == 0 || ctx.n() < 3) {
        throw Error(ErrorCode::kBadParameters, "family q4 needs q = 4 and odd n >= 3");
      }
      for (unsigned variant = 0; variant < 2; ++variant) {
        for (std::uint64_t a = 1; a < ctx.size(); ++a) {
          const Elem t = ctx.pow(E(a), (std::uint64_t{1} << ctx.n()) - 1);
          if (ctx.in_subfield(t, 2) && t.value > 1) out.push_back({E(a), {}, 1, variant});
        }
      }
      break;
    case Family::kTrForm:
    case Family::kAqk:
      for (unsigned k : coprime_ks(ctx, ks)) {
        for (std::uint64_t a = 1; a < ctx.size(); ++a) out.push_back({E(a), {}, k, 0});
      }
      break;
  }
  return out;
}

Grid grid_family(const FieldContext& ctx, const std::string& field, Family family, const std::vector<unsigned>& ks) {
  const auto cases = std::make_shared<const std::vector<FamilyParams>>(family_cases(ctx, family, ks));
  auto at = [cases](std::uint64_t i) { return (*cases)[i]; };
  auto eval = [ctx, family](const FamilyParams& p) {
    return bool_outcome(family_predicate(ctx, family, p),
                        is_perm_bruteforce(ctx, family_polynomial(ctx, family, p)).is_permutation);
  };
  auto describe = [field, family](const FamilyParams& p) {
    const std::string fc = format_family_case(family, p);
    return CaseText{fc, replay_permtest(field, "family", fc)};
  };
  return make_grid(cases->size(), 0, at, eval, describe);
}

Grid make_theorem_grid(const VerifyCampaign& c, const FieldContext& ctx, const std::string& field, std::uint64_t salt) {
  const std::string& id = c.theorem_id;
  if (id == "thm4") return grid_degree2(ctx, field);
  if (id == "thm5") return grid_binomial(ctx, field, binomial_ks(ctx, c.ks), false);
  if (id == "thm5_solvable") return grid_binomial(ctx, field, binomial_ks(ctx, c.ks), true);
  if (id == "prop3") return grid_kernel_criterion(ctx, field, c.ks, c.sample_budget, salt);
  if (id == "thm1") return grid_charsum_perm(ctx, field, c.sample_budget, salt);
  if (id == "thm6") return grid_n2(ctx, field, c.sample_budget, salt, c.cross_check_quadspec);
  if (id == "thm7") {
    if (ctx.n() % 2 == 0) throw Error(ErrorCode::kBadParameters, "thm7 needs odd n");
    return grid_odd(ctx, field, binomial_ks(ctx, c.ks), c.sample_budget, salt, c.cross_check_quadspec);
  }
  if (id == "thm_tr") return grid_trace_form(ctx, field, c.ls);
  if (id == "corollary") return grid_trace_monomial(ctx, field, c.ls);
  if (id == "prop2") return grid_plane_sum(ctx, field);
  if (id.starts_with("family:")) {
    const auto family = parse_family(std::string_view(id).substr(7));
    if (family) return grid_family(ctx, field, *family, c.ks);
  }
  throw Error(ErrorCode::kUnknownTheorem, "unknown theorem id '" + id + "'");
}

std::string verdict_text(const Grid& g, std::int64_t v) {
  if (g.boolean) return v ? "true" : "false";
  return std::to_string(v);
}

}  // namespace

const std::vector<std::string>& known_theorems() {
  static const std::vector<std::string> ids = {
      "thm1", "thm4", "thm5", "thm5_solvable", "thm6", "thm7", "thm_tr", "corollary", "prop2", "prop3",
      "family:tu", "family:abnorm", "family:q4", "family:trform", "family:aqk", "family:blokhuis"};
  return ids;
}

CampaignReport run_verify(const VerifyCampaign& c) {
  const auto t0 = std::chrono::steady_clock::now();
  if (std::find(known_theorems().begin(), known_theorems().end(), c.theorem_id) == known_theorems().end()) {
    throw Error(ErrorCode::kUnknownTheorem, "unknown theorem id '" + c.theorem_id + "'");
  }
  CampaignReport report;
  report.theorem_id = c.theorem_id;
  report.seed = c.seed;

  for (const FieldSpec& spec : c.fields) {
    const FieldContext ctx = build_context(spec, c.limits);
    const std::string field = format_field_spec(ctx);
    const std::uint64_t salt = mix(c.seed, fnv1a(c.theorem_id + "@" + field));
    const Grid grid = make_theorem_grid(c, ctx, field, salt);

    FieldTally tally;
    tally.field = field;
    tally.grid_size = grid.exhaustive_size;
    tally.sampled = !c.exhaustive && grid.exhaustive_size > c.exhaustive_limit;
    const std::uint64_t exhaustive_count = tally.sampled ? c.exhaustive_limit : grid.exhaustive_size;
    const std::uint64_t total = exhaustive_count + grid.random_size;
    const std::uint64_t sample_salt = mix(salt, 0x5a4d504cULL);
    auto index_at = [&](std::uint64_t pos) {
      if (pos >= exhaustive_count) return grid.exhaustive_size + (pos - exhaustive_count);
      if (!tally.sampled) return pos;
      Rng rng{mix(sample_salt, pos)};
      return rng.below(grid.exhaustive_size);
    };

    struct Partial {
      std::uint64_t agree = 0;
      std::uint64_t positive = 0;
      std::vector<std::pair<std::uint64_t, Outcome>> bad;
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(c.jobs, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
    std::vector<Partial> partials(jobs);
    auto work = [&](unsigned w) {
      const std::uint64_t lo = total * w / jobs;
      const std::uint64_t hi = total * (w + 1) / jobs;
      Partial& p = partials[w];
      for (std::uint64_t pos = lo; pos < hi; ++pos) {
        const std::uint64_t idx = index_at(pos);
        const Outcome o = grid.eval(idx);
        if (o.oracle != 0) ++p.positive;
        if (o.agree) {
          ++p.agree;
        } else {
          p.bad.emplace_back(idx, o);
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }

    tally.cases_total = total;
    for (const auto& p : partials) {
      tally.cases_agreeing += p.agree;
      tally.oracle_positive += p.positive;
      for (const auto& [idx, o] : p.bad) {
        const CaseText text = grid.describe(idx);
        report.mismatches.push_back(
            Mismatch{field, text.desc, verdict_text(grid, o.structured), verdict_text(grid, o.oracle), text.replay});
      }
    }
    report.cases_total += tally.cases_total;
    report.cases_agreeing += tally.cases_agreeing;
    report.per_field.push_back(std::move(tally));
  }
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Json to_json(const CampaignReport& r, bool include_timing) {
  Json j;
  j["theorem"] = r.theorem_id;
  j["seed"] = r.seed;
  j["cases_total"] = r.cases_total;
  j["cases_agreeing"] = r.cases_agreeing;
  Json fields = Json::array();
  for (const auto& t : r.per_field) {
    Json f;
    f["field"] = t.field;
    f["grid_size"] = t.grid_size;
    f["sampled"] = t.sampled;
    f["cases_total"] = t.cases_total;
    f["cases_agreeing"] = t.cases_agreeing;
    f["oracle_positive"] = t.oracle_positive;
    fields.push_back(std::move(f));
  }
  j["fields"] = std::move(fields);
  Json mm = Json::array();
  for (const auto& m : r.mismatches) {
    Json e;
    e["field"] = m.field;
    e["case"] = m.case_desc;
    e["structured"] = m.structured;
    e["oracle"] = m.oracle;
    e["replay"] = m.replay;
    mm.push_back(std::move(e));
  }
  j["mismatches"] = std::move(mm);
  if (include_timing) j["wall_time_s"] = r.wall_time_s;
  return j;
}

// ---------------------------------------------------------------------------
// Coefficient-space search

const std::vector<std::string>& known_templates() {
  static const std::vector<std::string> names = {"abnorm", "quad2", "binomial", "traceform", "trform", "aqk"};
  return names;
}

namespace {

struct SearchCase {
  std::vector<Elem> coeffs;
  MonomialPoly f;
  std::vector<std::pair<std::string, std::function<bool()>>> criteria;
};

}  // namespace

SearchResult run_search(const SearchRequest& req) {
  const FieldContext ctx = build_context(req.field, req.limits);
  ctx.require_enumerable("search");
  const std::string field = format_field_spec(ctx);
  const std::string& t = req.template_name;
  if (std::find(known_templates().begin(), known_templates().end(), t) == known_templates().end()) {
    throw Error(ErrorCode::kBadParameters, "unknown search template '" + t + "'");
  }

  SearchResult result;
  std::uint64_t lo = 0;
  std::uint64_t hi = ctx.size();
  if (req.range) {
    lo = std::min(req.range->first, ctx.size());
    hi = std::min(req.range->second, ctx.size());
  }

  const unsigned m = ctx.m();
  const unsigned n = ctx.n();
  auto linear = [&](std::initializer_list<std::pair<long, Elem>> terms) {
    LinearizedPoly L = LinearizedPoly::zero(ctx);
    for (const auto& [idx, c] : terms) L = L + LinearizedPoly::monomial(ctx, idx, c);
    return L;
  };

  auto consider = [&](SearchCase sc, const std::string& replay) {
    const bool perm = is_perm_bruteforce(ctx, sc.f).is_permutation;
    SearchRow row;
    row.coeffs = sc.coeffs;
    row.is_permutation = perm;
    // Every template criterion is an equivalence, so disagreement in either
    // direction is reported.
    for (auto& [name, claim] : sc.criteria) {
      const bool claimed = claim();
      if (claimed && perm) row.matched_criteria.push_back(name);
      if (claimed == perm) continue;
      std::string desc;
      for (std::size_t i = 0; i < sc.coeffs.size(); ++i) {
        desc += (i ? " " : "") + result.columns[i] + "=" + format_elem(sc.coeffs[i]);
      }
      result.false_claims.push_back(
          Mismatch{field, desc, name + (claimed ? "=true" : "=false"), perm ? "true" : "false", replay});
    }
    if (perm) result.rows.push_back(std::move(row));
  };

  if (t == "abnorm" || t == "binomial") {
    const unsigned k = t == "abnorm" ? 1 : req.k;
    const unsigned j = t == "abnorm" ? 1 : req.j;
    if (t == "abnorm" && n != 3) throw Error(ErrorCode::kBadParameters, "template abnorm needs n = 3");
    const bool odd_ok = n % 2 == 1 && k > 0 && 2 * k < n && std::gcd(k, n) == 1;
    if (t == "binomial" && !odd_ok) throw Error(ErrorCode::kBadParameters, "template binomial needs n odd, 0 < 2k < n, gcd(k, n) = 1");
    result.columns = {"a", "b"};
    for (std::uint64_t a = lo; a < hi; ++a) {
      for (std::uint64_t b = 0; b < ctx.size(); ++b) {
        SearchCase sc;
        sc.coeffs = {E(a), E(b)};
        const LinearizedPoly L0 = linear({{static_cast<long>(m * j), E(a)}, {0, E(b)}});
        const QuadFamilySpec spec = odd_degree_spec(ctx, k, L0);
        sc.f = expand(ctx, spec);
        sc.criteria.emplace_back("thm7", [&ctx, k, L0] { return odd_degree_criterion(ctx, k, L0); });
        if (n == 3 && k == 1 && j == 1) {
          const FamilyParams p{E(a), E(b), 1, 0};
          sc.criteria.emplace_back("family:abnorm", [&ctx, p] { return family_predicate(ctx, Family::kAbNorm, p); });
        }
        consider(std::move(sc), replay_permtest(field, "quadspec", format_quadspec(spec)));
      }
    }
  } else if (t == "quad2") {
    if (n != 2) throw Error(ErrorCode::kBadParameters, "template quad2 needs n = 2");
    result.columns = {"c", "a", "b"};
    for (std::uint64_t c = lo; c < hi; ++c) {
      for (std::uint64_t a = 0; a < ctx.size(); ++a) {
        for (std::uint64_t b = 0; b < ctx.size(); ++b) {
          SearchCase sc;
          sc.coeffs = {E(c), E(a), E(b)};
          const LinearizedPoly L1 = linear({{0, E(c)}});
          const LinearizedPoly L0 = linear({{0, E(a)}, {static_cast<long>(m), E(b)}});
          const QuadFamilySpec spec = quadratic_n2_spec(ctx, L0, L1);
          sc.f = expand(ctx, spec);
          sc.criteria.emplace_back("thm6", [&ctx, L0, L1] { return quadratic_n2_criterion(ctx, L0, L1); });
          consider(std::move(sc), replay_permtest(field, "thm6", format_quadspec(spec)));
        }
      }
    }
  } else if (t == "traceform") {
    result.columns = {"a"};
    for (std::uint64_t a = std::max<std::uint64_t>(lo, 1); a < hi; ++a) {
      SearchCase sc;
      sc.coeffs = {E(a)};
      const TraceFormSpec spec = trace_monomial_spec(ctx, E(a), req.k, req.l);
      sc.f = expand(ctx, spec);
      const unsigned k = req.k;
      const unsigned l = req.l;
      sc.criteria.emplace_back("corollary", [&ctx, a, k, l] { return trace_monomial_criterion(ctx, E(a), k, l); });
      sc.criteria.emplace_back("thm_tr", [&ctx, spec] { return trace_form_criterion(ctx, spec); });
      consider(std::move(sc), replay_permtest(field, "traceform", format_traceform(spec)));
    }
  } else {
    const Family family = t == "trform" ? Family::kTrForm : Family::kAqk;
    result.columns = {"a"};
    for (std::uint64_t a = std::max<std::uint64_t>(lo, 1); a < hi; ++a) {
      SearchCase sc;
      sc.coeffs = {E(a)};
      const FamilyParams p{E(a), {}, req.k, 0};
      sc.f = family_polynomial(ctx, family, p);
      // Both families are L0(x) + x Tr(x) with L1 = x.
      LinearizedPoly L0 = LinearizedPoly::zero(ctx);
      if (family == Family::kTrForm) {
        const long shift = static_cast<long>(m * (n - req.k));
        L0 = linear({{shift, ctx.frobenius(E(a), shift)}, {0, E(a)}});
      } else {
        L0 = linear({{static_cast<long>(m * req.k), E(a)}, {0, E(a)}});
      }
      const TraceFormSpec spec{L0, LinearizedPoly::identity(ctx), 0};
      sc.criteria.emplace_back("family:" + t, [&ctx, family, p] { return family_predicate(ctx, family, p); });
      sc.criteria.emplace_back("thm_tr", [&ctx, spec] { return trace_form_criterion(ctx, spec); });
      consider(std::move(sc), replay_permtest(field, "family", format_family_case(family, p)));
    }
  }
  return result;
}

std::string search_to_csv(const SearchResult& r) {
  std::string out;
  for (const auto& c : r.columns) out += c + ",";
  out += "is_permutation,matched_criteria\n";
  for (const auto& row : r.rows) {
    for (Elem e : row.coeffs) out += format_elem(e) + ",";
    out += row.is_permutation ? "true," : "false,";
    for (std::size_t i = 0; i < row.matched_criteria.size(); ++i) out += (i ? ";" : "") + row.matched_criteria[i];
    out += "\n";
  }
  return out;
}

Json to_json(const SearchResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    for (std::size_t i = 0; i < r.columns.size(); ++i) j[r.columns[i]] = format_elem(row.coeffs[i]);
    j["is_permutation"] = row.is_permutation;
    j["matched_criteria"] = row.matched_criteria;
    rows.push_back(std::move(j));
  }
  Json claims = Json::array();
  for (const auto& m : r.false_claims) {
    claims.push_back({{"field", m.field}, {"case", m.case_desc}, {"structured", m.structured},
                      {"oracle", m.oracle}, {"replay", m.replay}});
  }
  Json out;
  out["rows"] = std::move(rows);
  out["false_claims"] = std::move(claims);
  return out;
}

}  // namespace gf2perm
