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

#include <cstddef>
#include <vector>

#include "qpkc/bitlinalg.hpp"
#include "qpkc/gf2m.hpp"

namespace qpkc {

class Rng;

/// Binary irreducible Goppa code with support L = (L_0 .. L_{n-1}) and Goppa
/// polynomial g of degree t.
///
/// A word c is a codeword iff sum_j c_j (z + L_j)^{-1} = 0 mod g. The binary
/// parity check H has m*t rows: row i*m + b, column j holds bit b of
/// coefficient i of (z + L_j)^{-1} mod g. The code is only accepted when H
/// has full rank, so k = n - m*t exactly.
class GoppaCode {
 public:
  static constexpr int kBuildAttempts = 100;

  /// Samples L as the first n entries of a shuffled field and a monic
  /// irreducible g of degree t, retrying with fresh (L, g) until rank(H) = mt.
  /// Throws InvalidArgument for n > 2^m, t < 1 or m*t >= n, and Error when the
  /// retry budget runs out.
  static GoppaCode build(const FieldParams& params, std::size_t n, std::size_t t, Rng& rng);

  /// Rebuilds a code from its defining data, re-checking every invariant.
  /// Throws InvalidArgument on a repeated or out-of-field support element,
  /// a reducible g, a root of g on the support or a rank-deficient H.
  static GoppaCode from_parts(const FieldParams& params, std::vector<FieldElement> support,
                              Poly goppa_poly);

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& support() const { return support_; }
  const Poly& goppa_poly() const { return g_; }
  std::size_t n() const { return support_.size(); }
  std::size_t t() const { return static_cast<std::size_t>(g_.degree()); }
  std::size_t k() const { return generator_.rows(); }
  std::size_t syndrome_bits() const { return field_.degree() * t(); }

  /// H, (m*t) x n.
  const BitMatrix& parity_check() const { return parity_; }
  /// H^T, n x (m*t).
  const BitMatrix& parity_check_transposed() const { return parity_t_; }
  /// G, k x n, rows spanning the code.
  const BitMatrix& generator() const { return generator_; }
  /// G^-, n x k, with G * G^- = I_k.
  const BitMatrix& generator_right_inverse() const { return generator_inv_; }

  /// (z + x)^{-1} mod g, as ((g(z) + g(x)) / (z + x)) * g(x)^{-1}.
  /// Throws InvalidArgument when g(x) = 0.
  Poly inv_linear_mod_g(FieldElement x) const;

  /// word * H^T. Throws InvalidArgument unless word.size() == n.
  BitVec syndrome(const BitVec& word) const;

  /// S(z) with coefficient i read from syndrome bits [i*m, (i+1)*m).
  Poly syndrome_poly(const BitVec& syndrome) const;
  BitVec pack_syndrome(const Poly& s) const;

  /// Patterson decoding: the error of weight <= t with the given syndrome.
  /// Throws DecodeFailure when the syndrome does not come from such an error.
  BitVec decode(const BitVec& syndrome) const;

  /// Copy of this code whose H has bit (row, col) flipped. Used only to
  /// exercise failure reporting in the self-test.
  GoppaCode with_parity_bit_flipped(std::size_t row, std::size_t col) const;

 private:
  GoppaCode(Field field, std::vector<FieldElement> support, Poly g);

  Field field_;
  std::vector<FieldElement> support_;
  Poly g_;
  Poly sqrt_z_;
  BitMatrix parity_;
  BitMatrix parity_t_;
  BitMatrix generator_;
  BitMatrix generator_inv_;
};

}  // namespace qpkc
