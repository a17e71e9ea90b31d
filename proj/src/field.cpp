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

#include <algorithm>
#include <bit>
#include <utility>
#include <string>

#include "gf2perm/errors.hpp"

namespace gf2perm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kSizeGuard: return "SizeGuard";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kInvalidSubfield: return "InvalidSubfield";
    case ErrorCode::kNotQLinear: return "NotQLinear";
    case ErrorCode::kWrongDegree: return "WrongDegree";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kNotInSubfield: return "NotInSubfield";
    case ErrorCode::kUnknownTheorem: return "UnknownTheorem";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Error";
}

BigInt exact_div(const BigInt& value, const BigInt& divisor) {
  if (divisor == 0 || value % divisor != 0) {
    throw std::logic_error("exact_div: " + value.str() + " is not divisible by " + divisor.str());
  }
  return value / divisor;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a < 0 ? BigInt(-a) : a;
  BigInt y = b < 0 ? BigInt(-b) : b;
  while (y != 0) {
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return x;
}

namespace gf2x {

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept {
  std::uint64_t acc = 0;
  std::uint64_t wide = a;
  while (b) {
    if (b & 1u) acc ^= wide;
    wide <<= 1;
    b >>= 1;
  }
  return acc;
}

unsigned degree(std::uint64_t p) noexcept {
  return p == 0 ? 0 : static_cast<unsigned>(std::bit_width(p)) - 1;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t f) noexcept {
  const unsigned df = degree(f);
  while (a != 0 && degree(a) >= df) a ^= f << (degree(a) - df);
  return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) noexcept {
  // Operands are reduced below degree(f) <= 32.
  return mod(clmul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), f);
}

}  // namespace

// Ben-Or: f of degree d is irreducible iff gcd(x^{2^i} - x, f) = 1 for
// every i <= d/2.
bool is_irreducible(std::uint64_t f) noexcept {
  const unsigned d = degree(f);
  if (f < 2 || d > kHardMaxBits) return false;
  std::uint64_t h = mod(0b10, f);
  for (unsigned i = 1; i <= d / 2; ++i) {
    h = mulmod(h, h, f);
    if (gcd(f, h ^ mod(0b10, f)) != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> irreducibles(unsigned degree) {
  std::vector<std::uint64_t> out;
  if (degree == 0 || degree > kHardMaxBits) return out;
  const std::uint64_t lo = std::uint64_t{1} << degree;
  for (std::uint64_t f = lo; f < 2 * lo; ++f) {
    if (is_irreducible(f)) out.push_back(f);
  }
  return out;
}

std::uint64_t smallest_irreducible(unsigned degree) {
  const std::uint64_t lo = std::uint64_t{1} << degree;
  for (std::uint64_t f = lo; f < 2 * lo; ++f) {
    if (is_irreducible(f)) return f;
  }
  throw std::logic_error("no irreducible polynomial of degree " + std::to_string(degree));
}

}  // namespace gf2x

// Log/antilog tables over a primitive element. exp is doubled so a product
// of two logs never needs a reduction.
struct FieldContext::Tables {
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
};

namespace {

constexpr unsigned kTableMaxBits = 20;

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      ps.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ps.push_back(v);
  return ps;
}

}  // namespace

FieldContext FieldContext::build(unsigned m, unsigned n, std::optional<std::uint64_t> modulus,
                                 Limits limits) {
  if (m == 0 || n == 0) {
    throw Error(ErrorCode::kBadParameters, "m and n must be positive");
  }
  const unsigned bits = m * n;
  if (limits.max_bits > kHardMaxBits) {
    throw Error(ErrorCode::kSizeGuard, "size guard cannot exceed " + std::to_string(kHardMaxBits) + " bits");
  }
  if (bits > limits.max_bits) {
    throw Error(ErrorCode::kSizeGuard, "N = " + std::to_string(bits) + " exceeds the size guard of " +
                                           std::to_string(limits.max_bits) + " bits");
  }

  FieldContext ctx;
  ctx.m_ = m;
  ctx.n_ = n;
  ctx.limits_ = limits;
  if (modulus) {
    if (gf2x::degree(*modulus) != bits || *modulus >> bits != 1) {
      throw Error(ErrorCode::kInvalidModulus, "modulus must have degree " + std::to_string(bits));
    }
    if (!gf2x::is_irreducible(*modulus)) {
      throw Error(ErrorCode::kInvalidModulus, "modulus is reducible over GF(2)");
    }
    ctx.modulus_ = *modulus;
  } else {
    ctx.modulus_ = gf2x::smallest_irreducible(bits);
  }

  const std::uint64_t order = ctx.order();
  const auto factors = prime_factors(order);
  for (std::uint32_t g = 1; g < ctx.size(); ++g) {
    bool generates = true;
    for (auto p : factors) {
      if (ctx.pow_slow(Elem(g), order / p) == ctx.one()) {
        generates = false;
        break;
      }
    }
    if (generates) {
      ctx.primitive_ = Elem(g);
      break;
    }
  }

  if (bits <= kTableMaxBits) {
    auto tables = std::make_shared<Tables>();
    tables->exp.resize(2 * order);
    tables->log.assign(ctx.size(), 0);
    Elem power = ctx.one();
    for (std::uint64_t i = 0; i < order; ++i) {
      tables->exp[i] = power.value;
      tables->exp[i + order] = power.value;
      tables->log[power.value] = static_cast<std::uint32_t>(i);
      power = ctx.mul_slow(power, ctx.primitive_);
    }
    ctx.tables_ = std::move(tables);
  }

  for (unsigned j = 0; j < bits; ++j) {
    Elem t;
    Elem conj(std::uint32_t{1} << j);
    for (unsigned i = 0; i < bits; ++i) {
      t += conj;
      conj = ctx.square(conj);
    }
    if (t.value > 1) throw std::logic_error("absolute trace left GF(2)");
    ctx.trace_mask_ |= t.value << j;
  }

  ctx.subfield_basis_ = ctx.subfield_kernel_basis(m);
  if (ctx.subfield_basis_.size() != m) throw std::logic_error("subfield F_q has wrong dimension");
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    Elem c;
    for (unsigned j = 0; j < m; ++j) {
      if ((mask >> j) & 1u) c += ctx.subfield_basis_[j];
    }
    ctx.fq_elements_.push_back(c);
  }
  std::sort(ctx.fq_elements_.begin(), ctx.fq_elements_.end());

  // Power basis of the residue class of x, or of the first element whose
  // powers are F_q-independent.
  auto power_basis = [&](Elem g) {
    std::vector<Elem> pb;
    Elem p = ctx.one();
    for (unsigned i = 0; i < n; ++i) {
      pb.push_back(p);
      p = ctx.mul(p, g);
    }
    return pb;
  };
  std::vector<Elem> basis = power_basis(ctx.reduce(0b10));
  if (!ctx.fq_linearly_independent(basis)) {
    for (std::uint32_t g = 1; g < ctx.size(); ++g) {
      basis = power_basis(Elem(g));
      if (ctx.fq_linearly_independent(basis)) break;
    }
  }
  if (!ctx.fq_linearly_independent(basis)) throw std::logic_error("no F_q power basis found");
  ctx.fq_basis_ = std::move(basis);

  std::vector<std::uint64_t> cols;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < m; ++j) cols.push_back(ctx.mul(ctx.subfield_basis_[j], ctx.fq_basis_[i]).value);
  }
  auto inv = BitMatrix::from_columns(bits, cols).inverse();
  if (!inv) throw std::logic_error("F_q coordinate map is singular");
  ctx.coord_inverse_ = std::make_shared<const BitMatrix>(std::move(*inv));
  return ctx;
}

Elem FieldContext::reduce(std::uint64_t wide) const noexcept {
  return Elem(static_cast<std::uint32_t>(gf2x::mod(wide, modulus_)));
}

Elem FieldContext::mul_slow(Elem a, Elem b) const noexcept {
  return reduce(gf2x::clmul(a.value, b.value));
}

Elem FieldContext::pow_slow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem base = a;
  while (e) {
    if (e & 1u) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

Elem FieldContext::mul(Elem a, Elem b) const noexcept {
  if (tables_) {
    if (a.is_zero() || b.is_zero()) return zero();
    return Elem(tables_->exp[tables_->log[a.value] + tables_->log[b.value]]);
  }
  return mul_slow(a, b);
}

Elem FieldContext::pow(Elem a, std::uint64_t e) const noexcept {
  if (a.is_zero()) return e == 0 ? one() : zero();
  if (tables_) {
    const std::uint64_t r = (std::uint64_t{tables_->log[a.value]} * (e % order())) % order();
    return Elem(tables_->exp[r]);
  }
  return pow_slow(a, e % order());
}

Elem FieldContext::pow(Elem a, const BigInt& e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(ErrorCode::kDivisionByZero, "zero raised to a negative power");
    return e == 0 ? one() : zero();
  }
  BigInt r = e % order();
  if (r < 0) r += order();
  return pow(a, static_cast<std::uint64_t>(r));
}

Elem FieldContext::inverse(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return pow(a, order() - 1);
}

Elem FieldContext::frobenius(Elem a, long k) const noexcept {
  const long nbits = static_cast<long>(bits());
  long r = k % nbits;
  if (r < 0) r += nbits;
  if (a.is_zero() || r == 0) return a;
  if (tables_) return pow(a, std::uint64_t{1} << r);
  for (long i = 0; i < r; ++i) a = mul_slow(a, a);
  return a;
}

Elem FieldContext::trace_to(Elem a, unsigned sub_m) const {
  if (sub_m == 0 || bits() % sub_m != 0) {
    throw Error(ErrorCode::kInvalidSubfield, std::to_string(sub_m) + " does not divide N = " + std::to_string(bits()));
  }
  if (sub_m == 1) return Elem(abs_trace(a));
  Elem sum;
  Elem conj = a;
  for (unsigned i = 0; i < bits() / sub_m; ++i) {
    sum += conj;
    conj = frobenius(conj, sub_m);
  }
  return sum;
}

Elem FieldContext::norm_to(Elem a, unsigned sub_m) const {
  if (sub_m == 0 || bits() % sub_m != 0) {
    throw Error(ErrorCode::kInvalidSubfield, std::to_string(sub_m) + " does not divide N = " + std::to_string(bits()));
  }
  if (a.is_zero()) return zero();
  return pow(a, order() / ((std::uint64_t{1} << sub_m) - 1));
}

unsigned FieldContext::abs_trace(Elem a) const noexcept {
  return static_cast<unsigned>(std::popcount(a.value & trace_mask_) & 1);
}

bool FieldContext::in_subfield(Elem a, unsigned sub_m) const {
  if (sub_m == 0 || bits() % sub_m != 0) {
    throw Error(ErrorCode::kInvalidSubfield, std::to_string(sub_m) + " does not divide N = " + std::to_string(bits()));
  }
  return frobenius(a, sub_m) == a;
}

int FieldContext::psi(Elem c) const {
  if (!in_fq(c)) throw Error(ErrorCode::kNotInSubfield, "argument of psi is not in F_q");
  Elem t;
  Elem conj = c;
  for (unsigned i = 0; i < m_; ++i) {
    t += conj;
    conj = square(conj);
  }
  return t.is_zero() ? 1 : -1;
}

std::vector<Elem> FieldContext::subfield_kernel_basis(unsigned sub_m) const {
  std::vector<std::uint64_t> cols;
  for (unsigned j = 0; j < bits(); ++j) {
    const Elem e(std::uint32_t{1} << j);
    cols.push_back((frobenius(e, sub_m) + e).value);
  }
  std::vector<Elem> basis;
  for (auto v : BitMatrix::from_columns(bits(), cols).kernel()) basis.emplace_back(static_cast<std::uint32_t>(v));
  return basis;
}

std::vector<Elem> FieldContext::fq_coordinates(Elem a) const {
  const std::uint64_t t = coord_inverse_->apply(a.value);
  std::vector<Elem> coords(n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < m_; ++j) {
      if ((t >> (i * m_ + j)) & 1u) coords[i] += subfield_basis_[j];
    }
  }
  return coords;
}

Elem FieldContext::fq_combine(std::span<const Elem> coords) const {
  Elem sum;
  for (std::size_t i = 0; i < coords.size() && i < fq_basis_.size(); ++i) sum += mul(coords[i], fq_basis_[i]);
  return sum;
}

bool FieldContext::fq_linearly_independent(std::span<const Elem> elems) const {
  if (elems.size() * m_ > bits()) return false;
  std::vector<std::uint64_t> cols;
  for (Elem e : elems) {
    for (Elem c : subfield_basis_) cols.push_back(mul(c, e).value);
  }
  return BitMatrix::from_columns(bits(), cols).rank() == cols.size();
}

void FieldContext::require_enumerable(const char* what) const {
  if (bits() > limits_.max_bits) {
    throw Error(ErrorCode::kSizeGuard, std::string(what) + ": N = " + std::to_string(bits()) +
                                           " exceeds the enumeration guard");
  }
}

void FieldContext::require_charsum_enumerable(const char* what) const {
  if (bits() > limits_.max_charsum_bits) {
    throw Error(ErrorCode::kSizeGuard, std::string(what) + ": N = " + std::to_string(bits()) +
                                           " exceeds the character-sum guard of " +
                                           std::to_string(limits_.max_charsum_bits) + " bits");
  }
}

}  // namespace gf2perm
