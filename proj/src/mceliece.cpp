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

#include "qpkc/mceliece.hpp"

#include <string>

#include "qpkc/error.hpp"
#include "qpkc/rng.hpp"

namespace qpkc {

void PublicKey::verify() const {
  if (gpub.rows() != k || gpub.cols() != n || gpub_inv.rows() != n || gpub_inv.cols() != k) {
    throw FormatError("public key matrices do not match n = " + std::to_string(n) +
                      ", k = " + std::to_string(k));
  }
  if (t == 0 || k == 0 || k >= n) throw FormatError("public key parameters out of range");
  if (rank(gpub) != k) throw FormatError("public generator matrix is not of full row rank");
  if (!mat_mul(gpub, gpub_inv).is_identity()) {
    throw FormatError("public right inverse does not satisfy G' G'^- = I");
  }
}

BitMatrix PrivateKey::public_matrix() const {
  const BitMatrix sg = mat_mul(s, code.generator());
  std::vector<BitVec> rows;
  rows.reserve(sg.rows());
  for (std::size_t i = 0; i < sg.rows(); ++i) rows.push_back(p.apply(sg.row(i)));
  return BitMatrix::from_rows(std::move(rows), sg.cols());
}

KeyPair make_key_pair(GoppaCode code, BitMatrix s, Permutation p) {
  if (s.rows() != code.k() || s.cols() != code.k()) {
    throw InvalidArgument("scrambler must be k x k");
  }
  if (p.size() != code.n()) throw InvalidArgument("permutation must act on n positions");
  BitMatrix s_inv = square_inverse(s);
  Permutation p_inv = p.inverse();
  PrivateKey priv{std::move(s), std::move(s_inv), std::move(code), std::move(p), std::move(p_inv)};
  PublicKey pub;
  pub.n = priv.n();
  pub.k = priv.k();
  pub.t = priv.t();
  pub.gpub = priv.public_matrix();
  pub.gpub_inv = right_inverse(pub.gpub);
  return KeyPair{std::move(pub), std::move(priv)};
}

KeyPair keygen(const FieldParams& params, std::size_t n, std::size_t t, Rng& rng,
               KeygenOptions options) {
  GoppaCode code = GoppaCode::build(params, n, t, rng);
  Rng s_rng = rng.fork("scrambler");
  Rng p_rng = rng.fork("permutation");
  BitMatrix s = options.identity_scrambler ? BitMatrix::identity(code.k())
                                           : random_invertible(code.k(), s_rng);
  Permutation p = options.identity_permutation ? Permutation::identity(code.n())
                                               : random_permutation(code.n(), p_rng);
  return make_key_pair(std::move(code), std::move(s), std::move(p));
}

BitVec sample_error(std::size_t n, std::size_t t, Rng& rng) {
  if (t > n) {
    throw InvalidArgument("error weight " + std::to_string(t) + " exceeds length " +
                          std::to_string(n));
  }
  std::vector<std::size_t> positions(n);
  for (std::size_t i = 0; i < n; ++i) positions[i] = i;
  BitVec e(n);
  // Partial Fisher-Yates: the first t slots end up a uniform t-subset.
  for (std::size_t i = 0; i < t; ++i) {
    std::swap(positions[i], positions[i + rng.uniform(n - i)]);
    e.set(positions[i]);
  }
  return e;
}

BitVec encrypt_with_error(const PublicKey& pk, const BitVec& msg, const BitVec& error) {
  if (msg.size() != pk.k) {
    throw InvalidArgument("message length " + std::to_string(msg.size()) + " does not match k = " +
                          std::to_string(pk.k));
  }
  if (error.size() != pk.n) throw InvalidArgument("error length does not match n");
  return vec_mat_mul(msg, pk.gpub) ^ error;
}

BitVec encrypt(const PublicKey& pk, const BitVec& msg, Rng& rng) {
  if (msg.size() != pk.k) {
    throw InvalidArgument("message length " + std::to_string(msg.size()) + " does not match k = " +
                          std::to_string(pk.k));
  }
  return encrypt_with_error(pk, msg, sample_error(pk.n, pk.t, rng));
}

BitVec decrypt(const PrivateKey& sk, const BitVec& ciphertext) {
  if (ciphertext.size() != sk.n()) {
    throw InvalidArgument("ciphertext length " + std::to_string(ciphertext.size()) +
                          " does not match n = " + std::to_string(sk.n()));
  }
  const BitVec unpermuted = sk.p_inv.apply(ciphertext);
  const BitVec error = sk.code.decode(sk.code.syndrome(unpermuted));
  const BitVec codeword = unpermuted ^ error;
  if (!sk.code.syndrome(codeword).is_zero()) {
    throw DecodeFailure("decoding failure: corrected word is not a codeword");
  }
  const BitVec scrambled = vec_mat_mul(codeword, sk.code.generator_right_inverse());
  return vec_mat_mul(scrambled, sk.s_inv);
}

}  // namespace qpkc
