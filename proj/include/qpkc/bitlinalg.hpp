// Copyright 2026 The qpkc Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpkc {

class Rng;

/// Packed vector over GF(2). Bit j lives in word j / 64 at bit position
/// j % 64; bits past size() are always zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t len);

  /// '0'/'1' characters, leftmost character is index 0. Throws FormatError.
  static BitVec from_string(std::string_view bits);
  static BitVec unit(std::size_t len, std::size_t i);
  /// Low `len` bits of `value`, bit j of value -> index j.
  static BitVec from_uint(std::size_t len, std::uint64_t value);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool is_zero() const;
  std::uint64_t to_uint() const;  ///< first 64 bits
  std::string to_string() const;

  std::span<const Word> words() const { return words_; }

  BitVec slice(std::size_t offset, std::size_t len) const;
  /// Overwrites bits [offset, offset + v.size()) with v.
  void assign(std::size_t offset, const BitVec& v);
  /// XORs v into bits [offset, offset + v.size()).
  void xor_at(std::size_t offset, const BitVec& v);
  BitVec concat(const BitVec& tail) const;

  /// Throws InvalidArgument on length mismatch.
  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

 private:
  friend class BitMatrix;
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// Dense GF(2) matrix stored as packed rows. Vectors multiply from the left:
/// (v * M)[j] = XOR_i v[i] & M[i][j].
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Rows must share one length. An empty list gives a 0 x cols matrix.
  static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);
  static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
  void flip(std::size_t i, std::size_t j) { rows_[i].flip(j); }

  BitMatrix transpose() const;
  BitMatrix select_columns(std::span<const std::size_t> columns) const;
  bool is_identity() const;
  bool is_zero() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// v * M. Throws InvalidArgument unless v.size() == M.rows().
BitVec vec_mat_mul(const BitVec& v, const BitMatrix& m);

/// A * B. Throws InvalidArgument unless A.cols() == B.rows().
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

struct RrefResult {
  BitMatrix reduced;               ///< transform * input, in reduced row-echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of row i, for i < rank
  BitMatrix transform;             ///< invertible, rows x rows
};

RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Rows span {v : v * M^T = 0}; (cols - rank) x cols, linearly independent.
BitMatrix nullspace_basis(const BitMatrix& m);

/// N with M * N = I for a full-row-rank M. Rows of N outside the pivot
/// columns of M are zero. Throws ArithmeticError("not full row rank").
BitMatrix right_inverse(const BitMatrix& m);

/// Throws InvalidArgument for non-square and ArithmeticError for singular input.
BitMatrix square_inverse(const BitMatrix& m);

/// Rejection-samples uniform k x k matrices until one is invertible.
BitMatrix random_invertible(std::size_t k, Rng& rng);

/// Bijection on [0, n) acting on vectors by (v * P)[pi(i)] = v[i], i.e. the
/// matrix with P[i][pi(i)] = 1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument if `map` is not a bijection on [0, map.size()).
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& map() const { return map_; }

  Permutation inverse() const;
  /// (this then other): i -> other(this(i)).
  Permutation then(const Permutation& other) const;
  BitVec apply(const BitVec& v) const;
  BitMatrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// Fisher-Yates shuffle of [0, n).
Permutation random_permutation(std::size_t n, Rng& rng);

}  // namespace qpkc
