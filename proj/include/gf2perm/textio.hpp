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

#ifndef GF2PERM_TEXTIO_HPP_
#define GF2PERM_TEXTIO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gf2perm/charsum.hpp"
#include "gf2perm/field.hpp"
#include "gf2perm/linearized.hpp"
#include "gf2perm/permtest.hpp"

namespace gf2perm {

using Json = nlohmann::ordered_json;

// "m:n" or "m:n:0xMODULUS".
struct FieldSpec {
  unsigned m = 1;
  unsigned n = 1;
  std::optional<std::uint64_t> modulus;
};

FieldSpec parse_field_spec(std::string_view text);
// Always includes the modulus, so the string pins the exact field.
std::string format_field_spec(const FieldContext& ctx);
FieldContext build_context(const FieldSpec& spec, Limits limits = {});

// Lowercase hex without prefix; "0x" is accepted on input.
std::string format_elem(Elem e);
Elem parse_elem(const FieldContext& ctx, std::string_view text);

// "index:hexcoeff,..." e.g. "0:1,3:a" = x + a x^{2^3}. "" or "-" is 0.
LinearizedPoly parse_linearized(const FieldContext& ctx, std::string_view text);
std::string format_linearized(const LinearizedPoly& L);

// "exponent:hexcoeff,..." with decimal exponents, e.g. "3:1" = x^3.
MonomialPoly parse_monomials(const FieldContext& ctx, std::string_view text);
std::string format_monomials(const MonomialPoly& f);

// "L_0;L_1;...;L_{n-1}".
QuadFamilySpec parse_quadspec(const FieldContext& ctx, std::string_view text);
std::string format_quadspec(const QuadFamilySpec& spec);

// "L0;L1;l".
TraceFormSpec parse_traceform(const FieldContext& ctx, std::string_view text);
std::string format_traceform(const TraceFormSpec& spec);

// "name:key=value,..." with keys a, b (hex), k, variant (decimal).
struct FamilyCase {
  Family family;
  FamilyParams params;
};
FamilyCase parse_family_case(const FieldContext& ctx, std::string_view text);
std::string format_family_case(Family family, const FamilyParams& params);

std::vector<std::string> split(std::string_view text, char sep);
unsigned parse_unsigned(std::string_view text, std::string_view what);

Json to_json(const QuadraticFormReport& r);
Json to_json(const PermReport& r);
Json to_json(const GramMatrix& g);
Json field_info(const FieldContext& ctx);

}  // namespace gf2perm

#endif  // GF2PERM_TEXTIO_HPP_
