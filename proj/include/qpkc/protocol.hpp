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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpkc/mceliece.hpp"
#include "qpkc/qsim.hpp"

namespace qpkc {

class Rng;

/// Register names used by the pipeline.
inline constexpr std::string_view kMessageRegister = "msg";
inline constexpr std::string_view kCodeRegister = "code";
inline constexpr std::string_view kSyndromeRegister = "syn";

struct StepSummary {
  std::string label;
  std::size_t term_count = 0;
  std::string layout;
  /// (register, constant across all terms) in layout order.
  std::vector<std::pair<std::string, bool>> constant_registers;
};

struct ProtocolTrace {
  std::vector<StepSummary> steps;
  std::vector<MeasurementRecord> measurements;
  std::optional<BitVec> sender_error;     ///< e added by the sender
  std::optional<BitVec> recovered_error;  ///< error found by the receiver, in code coordinates
};

struct PipelineResult {
  SparseState state;
  ProtocolTrace trace;
};

/// Encrypts a pure state over one k-bit register: computes |m>|mG'>,
/// uncomputes the message register with G'^- (which must leave it |0>),
/// drops it and adds a weight-t error drawn from `rng`. The input register is
/// relabeled "msg"; the result is a single "code" register of width n.
/// Throws InvalidArgument for a wrong layout and ProtocolError when a
/// pipeline check fails.
PipelineResult alice_encrypt(const PublicKey& pk, const SparseState& plaintext, Rng& rng);
/// Same, with the error vector supplied by the caller.
PipelineResult alice_encrypt_with_error(const PublicKey& pk, const SparseState& plaintext,
                                        const BitVec& error);

/// Decrypts a single n-bit register: undoes P, computes and measures the
/// syndrome (which must be deterministic), decodes the error, strips it,
/// moves mS into a fresh k-bit register via G^- and G, and applies S^{-1}.
/// Throws DecodeFailure when the syndrome cannot be decoded and
/// ProtocolError when the syndrome is not deterministic or a register fails
/// to uncompute.
PipelineResult bob_decrypt(const PrivateKey& sk, const SparseState& ciphertext, Rng& rng);

struct RoundtripReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::string fingerprint;
  SparseState plaintext;
  SparseState ciphertext;
  SparseState recovered;
  ProtocolTrace alice;
  ProtocolTrace bob;
  double fidelity = 0.0;
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// Plaintext state over the "msg" register from (amplitude, bits) pairs.
SparseState make_message_state(std::size_t k, const std::vector<std::pair<Amplitude, BitVec>>& terms);

/// Key generation, encryption and decryption of one state, seeded from
/// `seed` with separate streams for each stage. The plaintext is validated
/// against k = n - m*t before any key material is generated.
RoundtripReport run_roundtrip(const FieldParams& params, std::size_t n, std::size_t t,
                              const std::vector<std::pair<Amplitude, BitVec>>& terms,
                              std::uint64_t seed);

/// Human-readable report. Timing lines are emitted only when requested so
/// the rest is byte-identical for a fixed seed.
std::string format_report(const RoundtripReport& report, bool include_timing);

}  // namespace qpkc
