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

#include "qpkc/keyio.hpp"

#include <openssl/sha.h>

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "qpkc/error.hpp"

namespace qpkc {

namespace {

constexpr std::string_view kPubHeader = "QPKC-PUB v1";
constexpr std::string_view kPrivHeader = "QPKC-PRIV v1";

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (pos_ >= text_.size()) throw FormatError("unexpected end of key file");
    const std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) throw FormatError("key file line is not newline-terminated");
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return line;
  }

  void expect(std::string_view line) {
    if (next() != line) throw FormatError("expected line '" + std::string(line) + "'");
  }

  void expect_end() const {
    if (pos_ != text_.size()) throw FormatError("trailing data after key");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t j = s.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? s.size() : j;
    if (end == i) throw FormatError("unexpected blank field in '" + std::string(s) + "'");
    out.push_back(s.substr(i, end - i));
    i = end + 1;
    if (j != std::string_view::npos && i == s.size()) throw FormatError("trailing space");
  }
  return out;
}

std::uint64_t parse_number(std::string_view s, int base) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("malformed number '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_field(std::string_view token, std::string_view key, int base = 10) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw FormatError("expected '" + std::string(key) + "=...' but found '" + std::string(token) +
                      "'");
  }
  std::string_view value = token.substr(key.size() + 1);
  if (base == 16) {
    if (value.substr(0, 2) != "0x") throw FormatError("expected 0x-prefixed hex");
    value.remove_prefix(2);
  }
  return parse_number(value, base);
}

std::vector<std::string_view> labeled_list(std::string_view line, std::string_view label) {
  if (line.substr(0, label.size()) != label || line.size() < label.size() + 1 ||
      line[label.size()] != ' ') {
    throw FormatError("expected line starting with '" + std::string(label) + " '");
  }
  return split_spaces(line.substr(label.size() + 1));
}

BitVec parse_row(std::string_view line, std::size_t len) {
  if (line.size() != len) {
    throw FormatError("matrix row has " + std::to_string(line.size()) + " bits, expected " +
                      std::to_string(len));
  }
  return BitVec::from_string(line);
}

BitMatrix parse_matrix(LineReader& in, std::size_t rows, std::size_t cols) {
  std::vector<BitVec> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) out.push_back(parse_row(in.next(), cols));
  return BitMatrix::from_rows(std::move(out), cols);
}

void write_matrix(std::ostringstream& out, const BitMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) out << m.row(i).to_string() << '\n';
}

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string serialize_public_key(const PublicKey& pk) {
  std::ostringstream out;
  out << kPubHeader << '\n';
  out << "n=" << pk.n << " k=" << pk.k << " t=" << pk.t << '\n';
  write_matrix(out, pk.gpub);
  out << "GINV\n";
  write_matrix(out, pk.gpub_inv);
  return out.str();
}

PublicKey parse_public_key(std::string_view text) {
  LineReader in(text);
  in.expect(kPubHeader);
  const auto dims = split_spaces(in.next());
  if (dims.size() != 3) throw FormatError("public key dimension line must hold n, k and t");
  PublicKey pk;
  pk.n = parse_field(dims[0], "n");
  pk.k = parse_field(dims[1], "k");
  pk.t = parse_field(dims[2], "t");
  if (pk.k == 0 || pk.k >= pk.n || pk.n > (std::size_t{1} << 16)) {
    throw FormatError("public key dimensions out of range");
  }
  pk.gpub = parse_matrix(in, pk.k, pk.n);
  in.expect("GINV");
  pk.gpub_inv = parse_matrix(in, pk.n, pk.k);
  in.expect_end();
  pk.verify();
  return pk;
}

std::string serialize_private_key(const PrivateKey& sk) {
  const FieldParams& fp = sk.code.field().params();
  std::ostringstream out;
  out << kPrivHeader << '\n';
  out << "m=" << fp.m << " modulus=0x" << hex(fp.modulus) << " n=" << sk.n() << " k=" << sk.k()
      << " t=" << sk.t() << '\n';
  out << "L:";
  for (FieldElement x : sk.code.support()) out << ' ' << hex(x);
  out << "\ng:";
  for (std::size_t i = 0; i <= sk.t(); ++i) out << ' ' << hex(sk.code.goppa_poly().coeff(i));
  out << "\nS:\n";
  write_matrix(out, sk.s);
  out << "P:";
  for (std::size_t x : sk.p.map()) out << ' ' << x;
  out << '\n';
  return out.str();
}

PrivateKey parse_private_key(std::string_view text) {
  LineReader in(text);
  in.expect(kPrivHeader);
  const auto dims = split_spaces(in.next());
  if (dims.size() != 5) throw FormatError("private key parameter line must hold m, modulus, n, k, t");
  FieldParams fp;
  fp.m = static_cast<unsigned>(parse_field(dims[0], "m"));
  fp.modulus = static_cast<std::uint32_t>(parse_field(dims[1], "modulus", 16));
  const std::size_t n = parse_field(dims[2], "n");
  const std::size_t k = parse_field(dims[3], "k");
  const std::size_t t = parse_field(dims[4], "t");
  if (n > (std::size_t{1} << 16) || t == 0 || k == 0 || k >= n) {
    throw FormatError("private key dimensions out of range");
  }

  const auto support_tokens = labeled_list(in.next(), "L:");
  if (support_tokens.size() != n) throw FormatError("support must list n elements");
  std::vector<FieldElement> support;
  for (auto tok : support_tokens) support.push_back(static_cast<FieldElement>(parse_number(tok, 16)));

  const auto g_tokens = labeled_list(in.next(), "g:");
  if (g_tokens.size() != t + 1) throw FormatError("Goppa polynomial must list t+1 coefficients");
  std::vector<FieldElement> g;
  for (auto tok : g_tokens) g.push_back(static_cast<FieldElement>(parse_number(tok, 16)));
  if (g.back() == 0) throw FormatError("Goppa polynomial leading coefficient is zero");

  in.expect("S:");
  BitMatrix s = parse_matrix(in, k, k);

  const auto p_tokens = labeled_list(in.next(), "P:");
  if (p_tokens.size() != n) throw FormatError("permutation must list n indices");
  std::vector<std::size_t> p;
  for (auto tok : p_tokens) p.push_back(parse_number(tok, 10));
  in.expect_end();

  try {
    GoppaCode code = GoppaCode::from_parts(fp, std::move(support), Poly(std::move(g)));
    if (code.k() != k || code.t() != t) throw FormatError("stated k or t does not match the code");
    Permutation perm(std::move(p));
    KeyPair pair = make_key_pair(std::move(code), std::move(s), std::move(perm));
    if (!mat_mul(pair.priv.s, pair.priv.s_inv).is_identity()) {
      throw FormatError("scrambler inverse check failed");
    }
    if (!mat_mul(pair.priv.code.generator(), pair.priv.code.parity_check_transposed()).is_zero()) {
      throw FormatError("G H^T != 0 after load");
    }
    return std::move(pair.priv);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid private key: ") + e.what());
  }
}

void verify_key_pair(const PublicKey& pk, const PrivateKey& sk) {
  if (pk.n != sk.n() || pk.k != sk.k() || pk.t != sk.t()) {
    throw FormatError("public and private key parameters differ");
  }
  if (sk.public_matrix() != pk.gpub) throw FormatError("S G P does not equal the public matrix G'");
}

std::string fingerprint(const PublicKey& pk) {
  const std::string bytes = serialize_public_key(pk);
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
  std::string out;
  for (unsigned char c : digest) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", c);
    out += buf;
  }
  return out;
}

}  // namespace qpkc
