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

#include "qpkc/bitlinalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qpkc/error.hpp"
#include "qpkc/rng.hpp"

namespace qpkc {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + BitVec::kWordBits - 1) / BitVec::kWordBits; }

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

BitVec::BitVec(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw FormatError("bit string may contain only '0' and '1'");
    }
  }
  return v;
}

BitVec BitVec::unit(std::size_t len, std::size_t i) {
  BitVec v(len);
  v.set(i);
  return v;
}

BitVec BitVec::from_uint(std::size_t len, std::uint64_t value) {
  BitVec v(len);
  for (std::size_t i = 0; i < len && i < 64; ++i) v.set(i, (value >> i) & 1u);
  return v;
}

void BitVec::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

std::uint64_t BitVec::to_uint() const { return words_.empty() ? 0 : words_[0]; }

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitVec BitVec::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > len_) throw InvalidArgument("BitVec::slice out of range");
  BitVec out(len);
  const std::size_t shift = offset % kWordBits;
  const std::size_t base = offset / kWordBits;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    Word lo = words_[base + w] >> shift;
    if (shift != 0 && base + w + 1 < words_.size()) lo |= words_[base + w + 1] << (kWordBits - shift);
    out.words_[w] = lo;
  }
  if (len % kWordBits != 0) out.words_.back() &= (Word{1} << (len % kWordBits)) - 1;
  return out;
}

void BitVec::xor_at(std::size_t offset, const BitVec& v) {
  if (offset + v.len_ > len_) throw InvalidArgument("BitVec::xor_at out of range");
  const std::size_t shift = offset % kWordBits;
  const std::size_t base = offset / kWordBits;
  for (std::size_t w = 0; w < v.words_.size(); ++w) {
    words_[base + w] ^= v.words_[w] << shift;
    if (shift != 0 && base + w + 1 < words_.size()) {
      words_[base + w + 1] ^= v.words_[w] >> (kWordBits - shift);
    }
  }
}

void BitVec::assign(std::size_t offset, const BitVec& v) {
  xor_at(offset, slice(offset, v.len_) ^ v);
}

BitVec BitVec::concat(const BitVec& tail) const {
  BitVec out(len_ + tail.len_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  out.xor_at(len_, tail);
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.len_ != len_) {
    throw InvalidArgument("BitVec length mismatch: " + std::to_string(len_) + " vs " +
                          std::to_string(other.len_));
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (auto c = a.len_ <=> b.len_; c != 0) return c;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument("BitMatrix::from_rows: ragged rows");
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (auto& r : m.rows_) {
    for (auto& w : r.words_) w = rng.next_u64();
    if (cols % BitVec::kWordBits != 0) r.words_.back() &= (BitVec::Word{1} << (cols % BitVec::kWordBits)) - 1;
  }
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    const auto words = rows_[i].words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (BitVec::Word x = words[w]; x != 0; x &= x - 1) {
        t.set(w * BitVec::kWordBits + static_cast<std::size_t>(std::countr_zero(x)), i);
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> columns) const {
  BitMatrix out(rows(), columns.size());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (get(i, columns[j])) out.set(i, j);
    }
  }
  return out;
}

bool BitMatrix::is_identity() const { return rows() == cols_ && *this == identity(cols_); }

bool BitMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.is_zero(); });
}

BitVec vec_mat_mul(const BitVec& v, const BitMatrix& m) {
  if (v.size() != m.rows()) {
    throw InvalidArgument("vec_mat_mul: vector length " + std::to_string(v.size()) +
                          " does not match matrix " + dims(m.rows(), m.cols()));
  }
  BitVec out(m.cols());
  const auto words = v.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (BitVec::Word x = words[w]; x != 0; x &= x - 1) {
      out ^= m.row(w * BitVec::kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
    }
  }
  return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("mat_mul: " + dims(a.rows(), a.cols()) + " times " +
                          dims(b.rows(), b.cols()));
  }
  std::vector<BitVec> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(vec_mat_mul(a.row(i), b));
  return BitMatrix::from_rows(std::move(rows), b.cols());
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res{m, 0, {}, BitMatrix::identity(m.rows())};
  BitMatrix& r = res.reduced;
  BitMatrix& t = res.transform;
  for (std::size_t col = 0; col < m.cols() && res.rank < m.rows(); ++col) {
    std::size_t pivot = res.rank;
    while (pivot < m.rows() && !r.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(r.row(pivot), r.row(res.rank));
    std::swap(t.row(pivot), t.row(res.rank));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != res.rank && r.get(i, col)) {
        r.row(i) ^= r.row(res.rank);
        t.row(i) ^= t.row(res.rank);
      }
    }
    res.pivots.push_back(col);
    ++res.rank;
  }
  return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix nullspace_basis(const BitMatrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<BitVec> basis;
  basis.reserve(m.cols() - red.rank);
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v = BitVec::unit(m.cols(), free);
    for (std::size_t i = 0; i < red.rank; ++i) {
      if (red.reduced.get(i, free)) v.set(red.pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return BitMatrix::from_rows(std::move(basis), m.cols());
}

BitMatrix right_inverse(const BitMatrix& m) {
  const RrefResult red = rref(m);
  if (red.rank != m.rows()) {
    throw ArithmeticError("not full row rank: rank " + std::to_string(red.rank) + " of " +
                          std::to_string(m.rows()) + " rows");
  }
  // M restricted to the pivot columns is invertible and its inverse is the
  // elimination transform, since transform * M_J = I.
  BitMatrix n(m.cols(), m.rows());
  for (std::size_t i = 0; i < red.rank; ++i) n.row(red.pivots[i]) = red.transform.row(i);
  return n;
}

BitMatrix square_inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("square_inverse: matrix is " + dims(m.rows(), m.cols()));
  RrefResult red = rref(m);
  if (red.rank != m.rows()) throw ArithmeticError("matrix is singular");
  return std::move(red.transform);
}

BitMatrix random_invertible(std::size_t k, Rng& rng) {
  if (k == 0) throw InvalidArgument("random_invertible: k must be positive");
  while (true) {
    BitMatrix m = BitMatrix::random(k, k, rng);
    if (rank(m) == k) return m;
  }
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t x : map_) {
    if (x >= map_.size() || seen[x]) throw InvalidArgument("permutation is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.size() != size()) throw InvalidArgument("permutation size mismatch");
  std::vector<std::size_t> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = other.map_[map_[i]];
  return Permutation(std::move(out));
}

BitVec Permutation::apply(const BitVec& v) const {
  if (v.size() != size()) throw InvalidArgument("permutation size mismatch");
  BitVec out(v.size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (v.get(i)) out.set(map_[i]);
  }
  return out;
}

BitMatrix Permutation::matrix() const {
  BitMatrix m(size(), size());
  for (std::size_t i = 0; i < map_.size(); ++i) m.set(i, map_[i]);
  return m;
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidArgument("random_permutation: n must be positive");
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(map[i], map[rng.uniform(i + 1)]);
  return Permutation(std::move(map));
}

}  // namespace qpkc
