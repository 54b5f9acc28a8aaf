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

#include "qpkc/bitlinalg.hpp"
#include "qpkc/goppa.hpp"

namespace qpkc {

class Rng;

/// G' = S G P together with its right inverse G'^-. The inverse is derivable
/// from G' and is carried only so encryption can uncompute without redoing
/// the elimination.
struct PublicKey {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  BitMatrix gpub;      ///< k x n
  BitMatrix gpub_inv;  ///< n x k

  /// Re-checks dimensions, rank(G') = k and G' G'^- = I_k.
  /// Throws FormatError on violation.
  void verify() const;
};

struct PrivateKey {
  BitMatrix s;      ///< k x k scrambler
  BitMatrix s_inv;
  GoppaCode code;
  Permutation p;
  Permutation p_inv;

  std::size_t n() const { return code.n(); }
  std::size_t k() const { return code.k(); }
  std::size_t t() const { return code.t(); }

  /// S G matrix(P), computed by permuting the columns of S G.
  BitMatrix public_matrix() const;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

/// Test hooks replacing the random scrambler or permutation by identities.
struct KeygenOptions {
  bool identity_scrambler = false;
  bool identity_permutation = false;
};

KeyPair keygen(const FieldParams& params, std::size_t n, std::size_t t, Rng& rng,
               KeygenOptions options = {});

/// Assembles the key pair for an existing code, scrambler and permutation.
/// Throws ArithmeticError if S is singular.
KeyPair make_key_pair(GoppaCode code, BitMatrix s, Permutation p);

/// Uniform weight-exactly-t vector of length n. Throws InvalidArgument if t > n.
BitVec sample_error(std::size_t n, std::size_t t, Rng& rng);

/// msg G' + e with e = sample_error(n, t, rng).
BitVec encrypt(const PublicKey& pk, const BitVec& msg, Rng& rng);
BitVec encrypt_with_error(const PublicKey& pk, const BitVec& msg, const BitVec& error);

/// Undoes P, decodes the syndrome, strips the error, recovers mS through G^-
/// and multiplies by S^{-1}. Throws DecodeFailure when the error is not
/// correctable or the corrected word is not a codeword.
BitVec decrypt(const PrivateKey& sk, const BitVec& ciphertext);

}  // namespace qpkc
