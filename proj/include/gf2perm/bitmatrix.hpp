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

#ifndef GF2PERM_BITMATRIX_HPP_
#define GF2PERM_BITMATRIX_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gf2perm {

// Dense matrix over GF(2) with at most 64 rows and 64 columns. Each row is a
// 64-bit word; bit j of row i is entry (i, j). Vectors are words as well,
// with bit i holding coordinate i.
class BitMatrix {
 public:
  static constexpr unsigned kMaxDim = 64;

  BitMatrix(unsigned rows, unsigned cols);

  static BitMatrix identity(unsigned dim);
  // Column j of the result is columns[j] (low `rows` bits are used).
  static BitMatrix from_columns(unsigned rows, std::span<const std::uint64_t> columns);

  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }

  bool get(unsigned i, unsigned j) const noexcept { return (rows_data_[i] >> j) & 1u; }
  void set(unsigned i, unsigned j, bool bit) noexcept;

  std::uint64_t row(unsigned i) const noexcept { return rows_data_[i]; }
  std::uint64_t column(unsigned j) const noexcept;

  // Matrix-vector product over GF(2).
  std::uint64_t apply(std::uint64_t v) const noexcept;

  BitMatrix transpose() const;
  unsigned rank() const;
  // Basis of the null space {v : apply(v) = 0}, in reduced echelon order.
  std::vector<std::uint64_t> kernel() const;
  // Basis of the column space.
  std::vector<std::uint64_t> image() const;
  std::optional<BitMatrix> inverse() const;

  bool is_zero() const noexcept;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  unsigned rows_;
  unsigned cols_;
  std::vector<std::uint64_t> rows_data_;
};

}  // namespace gf2perm

#endif  // GF2PERM_BITMATRIX_HPP_
