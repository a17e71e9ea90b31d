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

#include "gf2perm/bitmatrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace gf2perm {

namespace {

std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Reduced row echelon form in place. Returns the pivot column of each
// nonzero row, in order.
std::vector<unsigned> rref(std::vector<std::uint64_t>& rows, unsigned cols) {
  std::vector<unsigned> pivots;
  std::size_t next = 0;
  for (unsigned c = 0; c < cols && next < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t p = next;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r] & bit)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

BitMatrix::BitMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), rows_data_(rows, 0) {
  if (rows > kMaxDim || cols > kMaxDim) {
    throw std::invalid_argument("BitMatrix dimensions exceed 64");
  }
}

BitMatrix BitMatrix::identity(unsigned dim) {
  BitMatrix m(dim, dim);
  for (unsigned i = 0; i < dim; ++i) m.rows_data_[i] = std::uint64_t{1} << i;
  return m;
}

BitMatrix BitMatrix::from_columns(unsigned rows, std::span<const std::uint64_t> columns) {
  BitMatrix m(rows, static_cast<unsigned>(columns.size()));
  for (unsigned j = 0; j < m.cols_; ++j) {
    for (unsigned i = 0; i < rows; ++i) {
      if ((columns[j] >> i) & 1u) m.rows_data_[i] |= std::uint64_t{1} << j;
    }
  }
  return m;
}

void BitMatrix::set(unsigned i, unsigned j, bool bit) noexcept {
  const std::uint64_t b = std::uint64_t{1} << j;
  rows_data_[i] = bit ? (rows_data_[i] | b) : (rows_data_[i] & ~b);
}

std::uint64_t BitMatrix::column(unsigned j) const noexcept {
  std::uint64_t c = 0;
  for (unsigned i = 0; i < rows_; ++i) c |= ((rows_data_[i] >> j) & 1u) << i;
  return c;
}

std::uint64_t BitMatrix::apply(std::uint64_t v) const noexcept {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < rows_; ++i) {
    out |= static_cast<std::uint64_t>(std::popcount(rows_data_[i] & v) & 1) << i;
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (unsigned j = 0; j < cols_; ++j) t.rows_data_[j] = column(j);
  return t;
}

unsigned BitMatrix::rank() const {
  auto work = rows_data_;
  return static_cast<unsigned>(rref(work, cols_).size());
}

std::vector<std::uint64_t> BitMatrix::kernel() const {
  auto work = rows_data_;
  const auto pivots = rref(work, cols_);
  std::uint64_t pivot_mask = 0;
  for (unsigned p : pivots) pivot_mask |= std::uint64_t{1} << p;

  std::vector<std::uint64_t> basis;
  for (unsigned free = 0; free < cols_; ++free) {
    if ((pivot_mask >> free) & 1u) continue;
    std::uint64_t v = std::uint64_t{1} << free;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if ((work[r] >> free) & 1u) v |= std::uint64_t{1} << pivots[r];
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<std::uint64_t> BitMatrix::image() const {
  auto work = transpose().rows_data_;
  const auto pivots = rref(work, rows_);
  work.resize(pivots.size());
  return work;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  // Gauss-Jordan with the augmented half kept in a separate word per row.
  std::vector<std::uint64_t> left = rows_data_;
  std::vector<std::uint64_t> right(rows_);
  for (unsigned i = 0; i < rows_; ++i) right[i] = std::uint64_t{1} << i;
  for (unsigned c = 0; c < cols_; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    unsigned p = c;
    while (p < rows_ && !(left[p] & bit)) ++p;
    if (p == rows_) return std::nullopt;
    std::swap(left[p], left[c]);
    std::swap(right[p], right[c]);
    for (unsigned r = 0; r < rows_; ++r) {
      if (r != c && (left[r] & bit)) {
        left[r] ^= left[c];
        right[r] ^= right[c];
      }
    }
  }
  BitMatrix inv(rows_, cols_);
  inv.rows_data_ = std::move(right);
  return inv;
}

bool BitMatrix::is_zero() const noexcept {
  for (auto r : rows_data_) {
    if (r & low_mask(cols_)) return false;
  }
  return true;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("BitMatrix product: shape mismatch");
  BitMatrix out(a.rows_, b.cols_);
  for (unsigned i = 0; i < a.rows_; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t r = a.rows_data_[i];
    while (r) {
      const unsigned k = static_cast<unsigned>(std::countr_zero(r));
      acc ^= b.rows_data_[k];
      r &= r - 1;
    }
    out.rows_data_[i] = acc;
  }
  return out;
}

}  // namespace gf2perm
