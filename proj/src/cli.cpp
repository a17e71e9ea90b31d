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

#include "gf2perm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "gf2perm/campaign.hpp"
#include "gf2perm/charsum.hpp"
#include "gf2perm/errors.hpp"
#include "gf2perm/field.hpp"
#include "gf2perm/linearized.hpp"
#include "gf2perm/permtest.hpp"
#include "gf2perm/textio.hpp"

namespace gf2perm {

namespace {

struct Globals {
  std::vector<std::string> fields;
  std::string format;
  std::uint64_t seed = 1;
  unsigned max_n = 0;
  unsigned jobs = 1;
};

Limits limits_for(const Globals& g) {
  Limits l;
  if (g.max_n) {
    l.max_bits = g.max_n;
    l.max_charsum_bits = std::min(l.max_charsum_bits, g.max_n);
  }
  return l;
}

FieldContext single_field(const Globals& g) {
  if (g.fields.size() != 1) throw Error(ErrorCode::kParse, "exactly one --field is required");
  return build_context(parse_field_spec(g.fields.front()), limits_for(g));
}

BigInt parse_bigint(std::string_view text, std::string_view what) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) throw Error(ErrorCode::kParse, std::string(what) + ": empty integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::kParse, std::string(what) + ": bad digit at offset " + std::to_string(i));
    }
  }
  return BigInt(std::string(text));
}

std::vector<unsigned> parse_list(const std::string& text, std::string_view what) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_unsigned(part, what));
  return out;
}

Json charsum_brute_report(const FieldContext& ctx, const LinearizedPoly& L) {
  const std::int64_t s = charsum_bruteforce(ctx, L);
  Json j;
  j["s"] = s;
  if (L.q_linear()) {
    j["kernel_dim_fq"] = kernel(ctx, adjoint(ctx, L) + L).dim_fq;
  } else {
    j["kernel_dim_fq"] = nullptr;
  }
  j["vanishes"] = s != 0;
  j["type"] = std::string(form_type_name(s == 0 ? FormType::kZeroSum : s > 0 ? FormType::kPlus : FormType::kMinus));
  return j;
}

Json charsum_report(const FieldContext& ctx, const LinearizedPoly& L, const std::string& method) {
  if (method == "brute") return charsum_brute_report(ctx, L);
  if (method == "fast") return to_json(charsum_fast(ctx, L));
  if (method == "classify") return to_json(classify_form(ctx, L));
  throw Error(ErrorCode::kParse, "unknown charsum method '" + method + "'");
}

PermReport structured_report(bool verdict) {
  PermReport r;
  r.is_permutation = verdict;
  r.method = PermMethod::kStructured;
  return r;
}

PermReport run_permtest(const FieldContext& ctx, const std::string& form, const std::string& poly,
                        const std::string& method) {
  auto generic = [&](const MonomialPoly& f, const QuadFamilySpec* spec) -> PermReport {
    if (method == "brute") return is_perm_bruteforce(ctx, f);
    if (method == "charsum") return is_perm_charsum(ctx, f);
    if (method == "quadspec" && spec) return is_perm_quadspec(ctx, *spec);
    throw Error(ErrorCode::kParse, "method '" + method + "' is not available for form '" + form + "'");
  };
  if (form == "monomials") return generic(parse_monomials(ctx, poly), nullptr);
  if (form == "quadspec") {
    const QuadFamilySpec spec = parse_quadspec(ctx, poly);
    if (method == "structured") return is_perm_quadspec(ctx, spec);
    return generic(expand(ctx, spec), &spec);
  }
  if (form == "thm6") {
    const auto parts = split(poly, ';');
    if (parts.size() != 2) throw Error(ErrorCode::kParse, "thm6 form is 'L0;L1'");
    const LinearizedPoly L0 = parse_linearized(ctx, parts[0]);
    const LinearizedPoly L1 = parse_linearized(ctx, parts[1]);
    if (method == "structured") return structured_report(quadratic_n2_criterion(ctx, L0, L1));
    const QuadFamilySpec spec = quadratic_n2_spec(ctx, L0, L1);
    return generic(expand(ctx, spec), &spec);
  }
  if (form == "thm7") {
    const auto parts = split(poly, ';');
    if (parts.size() != 2) throw Error(ErrorCode::kParse, "thm7 form is 'k;L0'");
    const unsigned k = parse_unsigned(parts[0], "k");
    const LinearizedPoly L0 = parse_linearized(ctx, parts[1]);
    if (method == "structured") return structured_report(odd_degree_criterion(ctx, k, L0));
    const QuadFamilySpec spec = odd_degree_spec(ctx, k, L0);
    return generic(expand(ctx, spec), &spec);
  }
  if (form == "traceform") {
    const TraceFormSpec spec = parse_traceform(ctx, poly);
    if (method == "structured") return structured_report(trace_form_criterion(ctx, spec));
    return generic(expand(ctx, spec), nullptr);
  }
  if (form == "corollary") {
    const auto parts = split(poly, ';');
    if (parts.size() != 3) throw Error(ErrorCode::kParse, "corollary form is 'a;k;l'");
    const Elem a = parse_elem(ctx, parts[0]);
    const unsigned k = parse_unsigned(parts[1], "k");
    const unsigned l = parse_unsigned(parts[2], "l");
    if (method == "structured") return structured_report(trace_monomial_criterion(ctx, a, k, l));
    return generic(expand(ctx, trace_monomial_spec(ctx, a, k, l)), nullptr);
  }
  if (form == "family") {
    const FamilyCase fc = parse_family_case(ctx, poly);
    if (method == "structured") return structured_report(family_predicate(ctx, fc.family, fc.params));
    return generic(family_polynomial(ctx, fc.family, fc.params), nullptr);
  }
  throw Error(ErrorCode::kParse, "unknown form '" + form + "'");
}

struct EvalArgs {
  std::string op;
  std::string elem;
  std::string elem2;
  std::string poly;
  std::string monomials;
  std::string exponent;
  unsigned sub = 0;
  long shift = 1;
};

Elem need_elem(const FieldContext& ctx, const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::kParse, std::string("--op requires ") + flag);
  return parse_elem(ctx, text);
}

Json run_eval(const FieldContext& ctx, const EvalArgs& a) {
  const std::string& op = a.op;
  const unsigned sub = a.sub ? a.sub : ctx.m();
  auto elem = [&] { return need_elem(ctx, a.elem, "--elem"); };
  auto elem2 = [&] { return need_elem(ctx, a.elem2, "--elem2"); };
  if (op == "trace") return format_elem(ctx.trace_to(elem(), sub));
  if (op == "norm") return format_elem(ctx.norm_to(elem(), sub));
  if (op == "abs-trace") return ctx.abs_trace(elem()) ? 1 : 0;
  if (op == "chi") return ctx.chi(elem());
  if (op == "psi") return ctx.psi(elem());
  if (op == "add") return format_elem(elem() + elem2());
  if (op == "mul") return format_elem(ctx.mul(elem(), elem2()));
  if (op == "inv") return format_elem(ctx.inverse(elem()));
  if (op == "pow") {
    if (a.exponent.empty()) throw Error(ErrorCode::kParse, "--op pow requires --exp");
    return format_elem(ctx.pow(elem(), parse_bigint(a.exponent, "--exp")));
  }
  if (op == "frob") return format_elem(ctx.frobenius(elem(), a.shift));
  if (op == "charsum") {
    if (a.poly.empty()) throw Error(ErrorCode::kParse, "--op charsum requires --poly");
    return charsum_bruteforce(ctx, parse_linearized(ctx, a.poly));
  }
  if (op == "classify") {
    if (a.poly.empty()) throw Error(ErrorCode::kParse, "--op classify requires --poly");
    return to_json(classify_form(ctx, parse_linearized(ctx, a.poly)));
  }
  if (op == "permtest") {
    if (a.monomials.empty()) throw Error(ErrorCode::kParse, "--op permtest requires --monomials");
    return to_json(is_perm_bruteforce(ctx, parse_monomials(ctx, a.monomials)));
  }
  if (op == "prop2") return hyperbolic_plane_sum(ctx, elem(), elem2());
  throw Error(ErrorCode::kParse, "unknown --op '" + op + "'");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string campaign_csv(const CampaignReport& r) {
  std::string out = "field,case,structured,oracle,replay\n";
  for (const auto& m : r.mismatches) {
    out += csv_escape(m.field) + "," + csv_escape(m.case_desc) + "," + m.structured + "," + m.oracle + "," +
           csv_escape(m.replay) + "\n";
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, const FieldContext& ctx) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw Error(ErrorCode::kParse, "--range is 'lo:hi' (hex, half-open)");
  const Elem lo = parts[0].empty() ? Elem(0) : parse_elem(ctx, parts[0]);
  const std::uint64_t hi = parts[1].empty() ? ctx.size() : std::uint64_t{parse_elem(ctx, parts[1]).value};
  return {lo.value, hi};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character sums and permutation polynomials over binary fields", "gf2perm"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.fields, "field spec m:n or m:n:0xMODULUS (repeatable for verify)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "seed for sampled sweeps");
  app.add_option("--max-n", g.max_n, "size guard override, in bits")->check(CLI::Range(1u, kHardMaxBits));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* info = app.add_subcommand("field-info", "print field parameters");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a single operation");
  eval->add_option("--op", ea.op, "trace|norm|abs-trace|chi|psi|add|mul|inv|pow|frob|charsum|classify|permtest|prop2")
      ->required();
  eval->add_option("--elem", ea.elem, "element (hex)");
  eval->add_option("--elem2", ea.elem2, "second element (hex)");
  eval->add_option("--sub", ea.sub, "subfield degree m' for trace/norm (default m)");
  eval->add_option("--exp", ea.exponent, "exponent (decimal, may be negative)");
  eval->add_option("--shift", ea.shift, "Frobenius power k in a^(2^k)");
  eval->add_option("--poly", ea.poly, "linearized polynomial 'idx:hex,...'");
  eval->add_option("--monomials", ea.monomials, "polynomial 'exp:hex,...'");

  std::string poly;
  std::string method = "brute";
  auto* cs = app.add_subcommand("charsum", "character sum S(L)");
  cs->add_option("--poly", poly, "linearized polynomial 'idx:hex,...'")->required();
  cs->add_option("--method", method, "brute|fast|classify")->check(CLI::IsMember({"brute", "fast", "classify"}));

  auto* cl = app.add_subcommand("classify", "canonical reduction of Tr(x L(x))");
  cl->add_option("--poly", poly, "q-linear polynomial 'idx:hex,...'")->required();

  std::string form = "monomials";
  std::string pmethod = "brute";
  auto* pt = app.add_subcommand("permtest", "permutation test");
  pt->add_option("--form", form, "monomials|quadspec|traceform|family|thm6|thm7|corollary")
      ->check(CLI::IsMember({"monomials", "quadspec", "traceform", "family", "thm6", "thm7", "corollary"}));
  pt->add_option("--poly", poly, "polynomial in the chosen form")->required();
  pt->add_option("--method", pmethod, "brute|charsum|quadspec|structured")
      ->check(CLI::IsMember({"brute", "charsum", "quadspec", "structured"}));

  SearchRequest sr;
  std::string range;
  auto* se = app.add_subcommand("search", "scan a coefficient template for permutations");
  se->add_option("--template", sr.template_name, "abnorm|quad2|binomial|traceform|trform|aqk")
      ->required()
      ->check(CLI::IsMember(known_templates()));
  se->add_option("--range", range, "half-open range lo:hi of the first coefficient (hex)");
  se->add_option("--k", sr.k, "exponent parameter k");
  se->add_option("--j", sr.j, "binomial: index j of the a x^(q^j) term");
  se->add_option("--l", sr.l, "traceform: parameter l");

  VerifyCampaign vc;
  std::string ks;
  std::string ls;
  bool timing = false;
  bool no_cross = false;
  auto* ve = app.add_subcommand("verify", "structured criterion versus brute force");
  ve->add_option("--theorem", vc.theorem_id, "theorem id")->required();
  ve->add_option("--k", ks, "comma-separated k values");
  ve->add_option("--l", ls, "comma-separated l values");
  ve->add_option("--samples", vc.sample_budget, "random cases per field");
  ve->add_flag("--exhaustive", vc.exhaustive, "never sample the exhaustive grid");
  ve->add_option("--exhaustive-limit", vc.exhaustive_limit, "grid size above which cases are sampled");
  ve->add_flag("--no-cross-check", no_cross, "skip the quadspec cross-check");
  ve->add_flag("--timing", timing, "include wall time (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) {
      out << field_info(single_field(g)).dump(2) << "\n";
    } else if (eval->parsed()) {
      out << run_eval(single_field(g), ea).dump(2) << "\n";
    } else if (cs->parsed()) {
      const FieldContext ctx = single_field(g);
      out << charsum_report(ctx, parse_linearized(ctx, poly), method).dump(2) << "\n";
    } else if (cl->parsed()) {
      const FieldContext ctx = single_field(g);
      const LinearizedPoly L = parse_linearized(ctx, poly);
      Json j = to_json(classify_form(ctx, L));
      j["gram"] = to_json(gram_matrix(ctx, L));
      out << j.dump(2) << "\n";
    } else if (pt->parsed()) {
      const FieldContext ctx = single_field(g);
      out << to_json(run_permtest(ctx, form, poly, pmethod)).dump(2) << "\n";
    } else if (se->parsed()) {
      if (g.fields.size() != 1) throw Error(ErrorCode::kParse, "exactly one --field is required");
      sr.field = parse_field_spec(g.fields.front());
      sr.limits = limits_for(g);
      if (!range.empty()) sr.range = parse_range(range, build_context(sr.field, sr.limits));
      const SearchResult result = run_search(sr);
      if (g.format == "json") {
        out << to_json(result).dump(2) << "\n";
      } else {
        out << search_to_csv(result);
      }
      for (const auto& m : result.false_claims) {
        err << "criterion disagrees with brute force: " << m.case_desc << " " << m.structured << ", oracle " << m.oracle
            << "; replay: " << m.replay << "\n";
      }
      return result.false_claims.empty() ? 0 : 1;
    } else if (ve->parsed()) {
      if (g.fields.empty()) throw Error(ErrorCode::kParse, "verify needs at least one --field");
      for (const auto& f : g.fields) vc.fields.push_back(parse_field_spec(f));
      vc.ks = parse_list(ks, "--k");
      vc.ls = parse_list(ls, "--l");
      vc.seed = g.seed;
      vc.jobs = g.jobs;
      vc.limits = limits_for(g);
      vc.cross_check_quadspec = !no_cross;
      const CampaignReport report = run_verify(vc);
      if (g.format == "csv") {
        out << campaign_csv(report);
      } else {
        out << to_json(report, timing).dump(2) << "\n";
      }
      return report.mismatches.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return (e.code() == ErrorCode::kParse || e.code() == ErrorCode::kUnknownTheorem) ? 2 : 1;
  }
  return 0;
}

}  // namespace gf2perm
