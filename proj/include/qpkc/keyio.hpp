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

#include <string>
#include <string_view>

#include "qpkc/mceliece.hpp"

namespace qpkc {

// Text key formats. Bit strings are printed with vector index 0 leftmost.
//
//   QPKC-PUB v1
//   n=<n> k=<k> t=<t>
//   <k lines: rows of G', n bits each>
//   GINV
//   <n lines: rows of G'^-, k bits each>
//
//   QPKC-PRIV v1
//   m=<m> modulus=0x<hex> n=<n> k=<k> t=<t>
//   L: <n field elements, lowercase hex>
//   g: <t+1 coefficients, lowercase hex, z^0 first>
//   S:
//   <k lines: rows of S, k bits each>
//   P: <n decimal indices, entry i = pi(i)>
//
// H, G, G^- and S^{-1} are recomputed on load. Every loader re-verifies the
// key's invariants and throws FormatError on any defect.

std::string serialize_public_key(const PublicKey& pk);
PublicKey parse_public_key(std::string_view text);

std::string serialize_private_key(const PrivateKey& sk);
PrivateKey parse_private_key(std::string_view text);

/// Throws FormatError unless S G matrix(P) equals the public G'.
void verify_key_pair(const PublicKey& pk, const PrivateKey& sk);

/// Lowercase hex SHA-256 of the canonical public key encoding.
std::string fingerprint(const PublicKey& pk);

}  // namespace qpkc
