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

#include "gf2perm/textio.hpp"

#include <charconv>
#include <cstdio>

#include "gf2perm/errors.hpp"

namespace gf2perm {

namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;
};

std::vector<Piece> split_pieces(std::string_view text, char sep, std::size_t base = 0) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back({text.substr(start), base + start});
      return out;
    }
    out.push_back({text.substr(start, pos - start), base + start});
    start = pos + 1;
  }
}

[[noreturn]] void parse_error(std::string_view what, std::string_view text, std::size_t offset) {
  throw Error(ErrorCode::kParse, std::string(what) + " at offset " + std::to_string(offset) + ": '" +
                                     std::string(text) + "'");
}

std::uint64_t parse_hex_at(std::string_view text, std::size_t offset, std::string_view what) {
  std::string_view digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, 16);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    parse_error(std::string("invalid hex ") + std::string(what), text, offset);
  }
  return v;
}

std::int64_t parse_signed_at(std::string_view text, std::size_t offset, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 10);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    parse_error(std::string("invalid integer ") + std::string(what), text, offset);
  }
  return v;
}

Elem elem_at(const FieldContext& ctx, std::string_view text, std::size_t offset) {
  const std::uint64_t v = parse_hex_at(text, offset, "element");
  if (v >= ctx.size()) parse_error("element outside the field", text, offset);
  return Elem(static_cast<std::uint32_t>(v));
}

LinearizedPoly linearized_at(const FieldContext& ctx, std::string_view text, std::size_t base) {
  std::vector<Elem> coeffs(ctx.bits());
  if (text.empty() || text == "-") return LinearizedPoly(ctx, std::move(coeffs));
  for (const auto& p : split_pieces(text, ',', base)) {
    const std::size_t colon = p.text.find(':');
    if (colon == std::string_view::npos) parse_error("expected index:coeff", p.text, p.offset);
    const std::int64_t idx = parse_signed_at(p.text.substr(0, colon), p.offset, "index");
    const Elem c = elem_at(ctx, p.text.substr(colon + 1), p.offset + colon + 1);
    const std::int64_t nbits = ctx.bits();
    const auto folded = static_cast<unsigned>(((idx % nbits) + nbits) % nbits);
    coeffs[folded] += c;
  }
  return LinearizedPoly(ctx, std::move(coeffs));
}

}  // namespace

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  for (const auto& p : split_pieces(text, sep)) out.emplace_back(p.text);
  return out;
}

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  const std::int64_t v = parse_signed_at(text, 0, what);
  if (v < 0 || v > 1'000'000) parse_error(std::string("out-of-range ") + std::string(what), text, 0);
  return static_cast<unsigned>(v);
}

FieldSpec parse_field_spec(std::string_view text) {
  const auto parts = split_pieces(text, ':');
  if (parts.size() < 2 || parts.size() > 3) parse_error("field spec must be m:n or m:n:0xMOD", text, 0);
  FieldSpec spec;
  const std::int64_t m = parse_signed_at(parts[0].text, parts[0].offset, "m");
  const std::int64_t n = parse_signed_at(parts[1].text, parts[1].offset, "n");
  if (m <= 0 || n <= 0 || m > kHardMaxBits || n > kHardMaxBits) parse_error("m and n must be in 1..32", text, 0);
  spec.m = static_cast<unsigned>(m);
  spec.n = static_cast<unsigned>(n);
  if (parts.size() == 3) spec.modulus = parse_hex_at(parts[2].text, parts[2].offset, "modulus");
  return spec;
}

std::string format_field_spec(const FieldContext& ctx) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%u:%u:0x%llx", ctx.m(), ctx.n(), static_cast<unsigned long long>(ctx.modulus()));
  return buf;
}

FieldContext build_context(const FieldSpec& spec, Limits limits) {
  return FieldContext::build(spec.m, spec.n, spec.modulus, limits);
}

std::string format_elem(Elem e) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", e.value);
  return buf;
}

Elem parse_elem(const FieldContext& ctx, std::string_view text) { return elem_at(ctx, text, 0); }

LinearizedPoly parse_linearized(const FieldContext& ctx, std::string_view text) {
  return linearized_at(ctx, text, 0);
}

std::string format_linearized(const LinearizedPoly& L) {
  std::string out;
  for (unsigned i = 0; i < L.coeffs().size(); ++i) {
    if (L.coeff(i).is_zero()) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ':' + format_elem(L.coeff(i));
  }
  return out.empty() ? "-" : out;
}

MonomialPoly parse_monomials(const FieldContext& ctx, std::string_view text) {
  MonomialPoly f;
  if (text.empty() || text == "-") return f;
  for (const auto& p : split_pieces(text, ',')) {
    const std::size_t colon = p.text.find(':');
    if (colon == std::string_view::npos) parse_error("expected exponent:coeff", p.text, p.offset);
    const std::string digits(p.text.substr(0, colon));
    BigInt e;
    try {
      e = BigInt(digits);
    } catch (const std::exception&) {
      parse_error("invalid exponent", p.text, p.offset);
    }
    if (e < 1) parse_error("exponent must be positive", p.text, p.offset);
    f.add(ctx, elem_at(ctx, p.text.substr(colon + 1), p.offset + colon + 1), e);
  }
  return f;
}

std::string format_monomials(const MonomialPoly& f) {
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += ',';
    out += std::to_string(t.exponent) + ':' + format_elem(t.coeff);
  }
  return out.empty() ? "-" : out;
}

QuadFamilySpec parse_quadspec(const FieldContext& ctx, std::string_view text) {
  const auto parts = split_pieces(text, ';');
  if (parts.size() > ctx.n()) parse_error("more than n linearized polynomials", text, 0);
  QuadFamilySpec spec{std::vector<LinearizedPoly>(ctx.n(), LinearizedPoly::zero(ctx))};
  for (std::size_t i = 0; i < parts.size(); ++i) spec.Ls[i] = linearized_at(ctx, parts[i].text, parts[i].offset);
  return spec;
}

std::string format_quadspec(const QuadFamilySpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.Ls.size(); ++i) {
    if (i) out += ';';
    out += format_linearized(spec.Ls[i]);
  }
  return out;
}

TraceFormSpec parse_traceform(const FieldContext& ctx, std::string_view text) {
  const auto parts = split_pieces(text, ';');
  if (parts.size() != 3) parse_error("trace form must be L0;L1;l", text, 0);
  const std::int64_t l = parse_signed_at(parts[2].text, parts[2].offset, "l");
  if (l < 0) parse_error("l must be nonnegative", parts[2].text, parts[2].offset);
  return TraceFormSpec{linearized_at(ctx, parts[0].text, parts[0].offset),
                       linearized_at(ctx, parts[1].text, parts[1].offset), static_cast<unsigned>(l)};
}

std::string format_traceform(const TraceFormSpec& spec) {
  return format_linearized(spec.L0) + ';' + format_linearized(spec.L1) + ';' + std::to_string(spec.l);
}

FamilyCase parse_family_case(const FieldContext& ctx, std::string_view text) {
  const std::size_t colon = text.find(':');
  const auto family = parse_family(text.substr(0, colon));
  if (!family) parse_error("unknown family", text.substr(0, colon), 0);
  FamilyCase fc{*family, {}};
  if (colon == std::string_view::npos) return fc;
  for (const auto& p : split_pieces(text.substr(colon + 1), ',', colon + 1)) {
    const std::size_t eq = p.text.find('=');
    if (eq == std::string_view::npos) parse_error("expected key=value", p.text, p.offset);
    const auto key = p.text.substr(0, eq);
    const auto value = p.text.substr(eq + 1);
    const std::size_t voff = p.offset + eq + 1;
    if (key == "a") {
      fc.params.a = elem_at(ctx, value, voff);
    } else if (key == "b") {
      fc.params.b = elem_at(ctx, value, voff);
    } else if (key == "k") {
      fc.params.k = static_cast<unsigned>(parse_signed_at(value, voff, "k"));
    } else if (key == "variant") {
      fc.params.variant = static_cast<unsigned>(parse_signed_at(value, voff, "variant"));
    } else {
      parse_error("unknown family parameter", key, p.offset);
    }
  }
  return fc;
}

std::string format_family_case(Family family, const FamilyParams& p) {
  std::string out(family_name(family));
  out += ":a=" + format_elem(p.a);
  switch (family) {
    case Family::kAbNorm: out += ",b=" + format_elem(p.b); break;
    case Family::kTrForm:
    case Family::kAqk: out += ",k=" + std::to_string(p.k); break;
    case Family::kQ4: out += ",variant=" + std::to_string(p.variant); break;
    default: break;
  }
  return out;
}

Json to_json(const QuadraticFormReport& r) {
  Json j;
  j["s"] = r.s_value;
  j["kernel_dim_fq"] = r.kernel_dim_fq;
  j["vanishes"] = r.vanishes_on_kernel;
  j["type"] = std::string(form_type_name(r.form_type));
  j["hyperbolic_planes"] = r.hyperbolic_planes;
  j["rank"] = r.rank;
  j["sign_resolved"] = r.sign_resolved;
  return j;
}

Json to_json(const PermReport& r) {
  Json j;
  j["is_permutation"] = r.is_permutation;
  j["method"] = std::string(perm_method_name(r.method));
  j["witness"] = r.witness ? Json(format_elem(*r.witness)) : Json(nullptr);
  if (r.collision_with) j["collision_with"] = format_elem(*r.collision_with);
  return j;
}

Json to_json(const GramMatrix& g) {
  Json rows = Json::array();
  for (unsigned i = 0; i < g.n; ++i) {
    Json row = Json::array();
    for (unsigned j = 0; j < g.n; ++j) row.push_back(format_elem(g.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json field_info(const FieldContext& ctx) {
  Json j;
  j["m"] = ctx.m();
  j["n"] = ctx.n();
  j["N"] = ctx.bits();
  j["q"] = ctx.q();
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(ctx.modulus()));
  j["modulus"] = buf;
  j["group_order"] = to_string(ctx.group_order());
  j["primitive"] = format_elem(ctx.primitive());
  Json basis = Json::array();
  for (Elem b : ctx.fq_basis()) basis.push_back(format_elem(b));
  j["fq_basis"] = std::move(basis);
  Json sub = Json::array();
  for (Elem b : ctx.subfield_basis()) sub.push_back(format_elem(b));
  j["subfield_basis"] = std::move(sub);
  return j;
}

}  // namespace gf2perm
