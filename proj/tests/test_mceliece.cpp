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

#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "qpkc/error.hpp"
#include "qpkc/keyio.hpp"
#include "qpkc/mceliece.hpp"
#include "qpkc/rng.hpp"

using namespace qpkc;

namespace {

const KeyPair& desk_keys() {
  static const KeyPair keys = [] {
    Rng rng(42);
    return keygen(FieldParams::standard(4), 16, 2, rng);
  }();
  return keys;
}

BitVec random_vec(std::size_t n, Rng& rng) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng.uniform(2) == 1);
  return v;
}

}  // namespace

TEST_CASE("keygen satisfies the key equation and inverse identities") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const KeyPair kp = keygen(FieldParams::standard(4), 16, 2, rng);
    const PrivateKey& sk = kp.priv;
    CHECK(kp.pub.k == 8);
    CHECK(oracle::mat_mul(oracle::mat_mul(sk.s, sk.code.generator()), sk.p.matrix()) == kp.pub.gpub);
    CHECK(oracle::mat_mul(sk.s, sk.s_inv).is_identity());
    CHECK(sk.p.then(sk.p_inv) == Permutation::identity(16));
    CHECK(oracle::mat_mul(kp.pub.gpub, kp.pub.gpub_inv).is_identity());
    CHECK_NOTHROW(kp.pub.verify());
    CHECK_NOTHROW(verify_key_pair(kp.pub, sk));
  }
}

TEST_CASE("keygen is deterministic") {
  Rng a(42), b(42);
  const KeyPair x = keygen(FieldParams::standard(4), 16, 2, a);
  const KeyPair y = keygen(FieldParams::standard(4), 16, 2, b);
  CHECK(serialize_public_key(x.pub) == serialize_public_key(y.pub));
  CHECK(serialize_private_key(x.priv) == serialize_private_key(y.priv));
  Rng c(43);
  CHECK(serialize_public_key(keygen(FieldParams::standard(4), 16, 2, c).pub) !=
        serialize_public_key(x.pub));
}

TEST_CASE("identity hooks expose G") {
  Rng rng(9);
  const KeyPair kp = keygen(FieldParams::standard(4), 16, 2, rng, {true, true});
  CHECK(kp.pub.gpub == kp.priv.code.generator());
  CHECK(kp.priv.s.is_identity());
}

TEST_CASE("make_key_pair rejects a singular scrambler") {
  const PrivateKey& sk = desk_keys().priv;
  CHECK_THROWS_AS(make_key_pair(sk.code, BitMatrix(8, 8), sk.p), ArithmeticError);
  CHECK_THROWS_AS(make_key_pair(sk.code, BitMatrix::identity(7), sk.p), InvalidArgument);
}

TEST_CASE("sample_error") {
  Rng rng(11);
  CHECK(sample_error(16, 0, rng).is_zero());
  CHECK(sample_error(16, 16, rng).weight() == 16);
  CHECK_THROWS_AS(sample_error(4, 5, rng), InvalidArgument);

  std::vector<int> hits(16, 0);
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const BitVec e = sample_error(16, 2, rng);
    REQUIRE(e.weight() == 2);
    for (std::size_t j = 0; j < 16; ++j) hits[j] += e.get(j);
  }
  for (int h : hits) CHECK(std::abs(static_cast<double>(h) / samples - 0.125) < 0.01);
}

TEST_CASE("encrypt examples") {
  const PublicKey& pk = desk_keys().pub;
  Rng rng(12);
  CHECK(encrypt(pk, BitVec(8), rng).weight() == 2);
  const BitVec m = BitVec::from_string("10110010");
  CHECK(encrypt_with_error(pk, m, BitVec(16)) == oracle::vec_mat_mul(m, pk.gpub));
  CHECK_THROWS_AS(encrypt(pk, BitVec(7), rng), InvalidArgument);
  CHECK_THROWS_AS(encrypt_with_error(pk, m, BitVec(15)), InvalidArgument);
}

TEST_CASE("encrypt is linear under a shared error stream") {
  const PublicKey& pk = desk_keys().pub;
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const BitVec a = random_vec(8, rng), b = random_vec(8, rng);
    Rng ra(1000 + i), rb(1000 + i);
    CHECK((encrypt(pk, a, ra) ^ encrypt(pk, b, rb)) == oracle::vec_mat_mul(a ^ b, pk.gpub));
  }
}

TEST_CASE("decrypt of public rows without error returns unit vectors") {
  const KeyPair& kp = desk_keys();
  for (std::size_t i = 0; i < 8; ++i) CHECK(decrypt(kp.priv, kp.pub.gpub.row(i)) == BitVec::unit(8, i));
  CHECK_THROWS_AS(decrypt(kp.priv, BitVec(15)), InvalidArgument);
}

TEST_CASE("exhaustive classical round trip: 256 messages x 20 errors") {
  const KeyPair& kp = desk_keys();
  Rng rng(14);
  for (std::uint64_t x = 0; x < 256; ++x) {
    const BitVec m = BitVec::from_uint(8, x);
    for (int j = 0; j < 20; ++j) REQUIRE(decrypt(kp.priv, encrypt(kp.pub, m, rng)) == m);
  }
}

TEST_CASE("decrypt agrees with nearest-codeword search") {
  const KeyPair& kp = desk_keys();
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const BitVec m = random_vec(8, rng);
    const BitVec c = encrypt(kp.pub, m, rng);
    const auto nearest = oracle::nearest_codeword(kp.pub.gpub, c);
    REQUIRE(nearest.unique);
    CHECK(nearest.distance == 2);
    CHECK(decrypt(kp.priv, c) == nearest.message);
  }
}

// With weight t+1 the decoder either refuses or lands on the unique codeword
// within distance t of the received word. Whenever it answers, the answer is
// the one a brute-force bounded-distance decoder gives; it cannot be the
// sender's message because that codeword is at distance t+1.
TEST_CASE("weight t+1 errors: refusal or the bounded-distance answer") {
  const KeyPair& kp = desk_keys();
  Rng rng(16);
  int refused = 0, answered = 0;
  for (int i = 0; i < 500; ++i) {
    const BitVec m = random_vec(8, rng);
    const BitVec c = encrypt_with_error(kp.pub, m, sample_error(16, 3, rng));
    const auto nearest = oracle::nearest_codeword(kp.pub.gpub, c);
    try {
      const BitVec out = decrypt(kp.priv, c);
      ++answered;
      CHECK(nearest.distance <= 2);
      CHECK(out == nearest.message);
      CHECK(out != m);
    } catch (const DecodeFailure&) {
      ++refused;
      CHECK(nearest.distance == 3);
    }
  }
  CHECK(refused + answered == 500);
  CHECK(refused > 0);
}

TEST_CASE("public key serialization round trip") {
  const PublicKey& pk = desk_keys().pub;
  const std::string text = serialize_public_key(pk);
  CHECK(text.rfind("QPKC-PUB v1\nn=16 k=8 t=2\n", 0) == 0);
  const PublicKey back = parse_public_key(text);
  CHECK(back.gpub == pk.gpub);
  CHECK(back.gpub_inv == pk.gpub_inv);
  CHECK(serialize_public_key(back) == text);
  CHECK(fingerprint(back) == fingerprint(pk));
  CHECK(fingerprint(pk).size() == 64);
}

TEST_CASE("private key serialization round trip") {
  const KeyPair& kp = desk_keys();
  const std::string text = serialize_private_key(kp.priv);
  CHECK(text.rfind("QPKC-PRIV v1\nm=4 modulus=0x13 n=16 k=8 t=2\n", 0) == 0);
  const PrivateKey back = parse_private_key(text);
  CHECK(serialize_private_key(back) == text);
  CHECK(back.code.generator() == kp.priv.code.generator());
  CHECK(back.s_inv == kp.priv.s_inv);
  CHECK_NOTHROW(verify_key_pair(kp.pub, back));
  CHECK(oracle::mat_mul(oracle::mat_mul(back.s, back.code.generator()), back.p.matrix()) ==
        kp.pub.gpub);
}

TEST_CASE("truncated and malformed key files are rejected") {
  const KeyPair& kp = desk_keys();
  const std::string pub = serialize_public_key(kp.pub);
  const std::string priv = serialize_private_key(kp.priv);
  for (std::size_t cut = 0; cut < pub.size(); cut += 7) {
    CHECK_THROWS_AS(parse_public_key(pub.substr(0, cut)), FormatError);
  }
  for (std::size_t cut = 0; cut < priv.size(); cut += 5) {
    CHECK_THROWS_AS(parse_private_key(priv.substr(0, cut)), FormatError);
  }
  CHECK_THROWS_AS(parse_public_key(pub + "extra\n"), FormatError);
  CHECK_THROWS_AS(parse_public_key("QPKC-PUB v2" + pub.substr(11)), FormatError);
  CHECK_THROWS_AS(parse_private_key(pub), FormatError);
}

TEST_CASE("tampered key files are rejected") {
  const KeyPair& kp = desk_keys();
  const std::string pub = serialize_public_key(kp.pub);

  // Flip one bit inside G'^- so that G' G'^- != I.
  std::string bad_inv = pub;
  const std::size_t ginv = bad_inv.find("GINV\n") + 5;
  bad_inv[ginv] = bad_inv[ginv] == '0' ? '1' : '0';
  CHECK_THROWS_AS(parse_public_key(bad_inv), FormatError);

  // Replace a row of G' by a copy of another to drop its rank.
  std::string bad_rank = pub;
  const std::size_t row0 = bad_rank.find('\n', bad_rank.find("t=2")) + 1;
  bad_rank.replace(row0 + 17, 16, bad_rank.substr(row0, 16));
  CHECK_THROWS_AS(parse_public_key(bad_rank), FormatError);

  const std::string priv = serialize_private_key(kp.priv);
  // A repeated permutation index.
  std::string bad_p = priv;
  const std::size_t p_line = bad_p.find("P: ") + 3;
  const std::size_t first_end = bad_p.find(' ', p_line);
  const std::string first = bad_p.substr(p_line, first_end - p_line);
  const std::size_t second = first_end + 1;
  const std::size_t second_end = bad_p.find(' ', second);
  bad_p.replace(second, second_end - second, first);
  CHECK_THROWS_AS(parse_private_key(bad_p), FormatError);

  // A singular scrambler: zero its first row.
  std::string bad_s = priv;
  const std::size_t s_row = bad_s.find("S:\n") + 3;
  bad_s.replace(s_row, 8, "00000000");
  CHECK_THROWS_AS(parse_private_key(bad_s), FormatError);

  // A Goppa polynomial with a zero leading coefficient.
  std::string bad_g = priv;
  const std::size_t g_end = bad_g.find('\n', bad_g.find("g: "));
  bad_g.replace(g_end - 1, 1, "0");
  CHECK_THROWS_AS(parse_private_key(bad_g), FormatError);
}

TEST_CASE("verify_key_pair detects a mismatched pair") {
  Rng rng(77);
  const KeyPair other = keygen(FieldParams::standard(4), 16, 2, rng);
  CHECK_THROWS_AS(verify_key_pair(desk_keys().pub, other.priv), FormatError);
}

TEST_CASE("m=10 keypair: key equation and a round trip") {
  Rng rng(2024);
  const KeyPair kp = keygen(FieldParams::standard(10), 1024, 50, rng);
  CHECK(kp.pub.k == 524);
  CHECK(kp.priv.public_matrix() == kp.pub.gpub);
  CHECK(mat_mul(kp.pub.gpub, kp.pub.gpub_inv).is_identity());
  Rng enc(3);
  for (int i = 0; i < 5; ++i) {
    const BitVec m = random_vec(524, enc);
    REQUIRE(decrypt(kp.priv, encrypt(kp.pub, m, enc)) == m);
  }
  const PrivateKey back = parse_private_key(serialize_private_key(kp.priv));
  CHECK_NOTHROW(verify_key_pair(kp.pub, back));
}
