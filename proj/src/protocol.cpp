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

#include "qpkc/protocol.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qpkc/error.hpp"
#include "qpkc/keyio.hpp"
#include "qpkc/rng.hpp"

namespace qpkc {

namespace {

const std::string kMsg(kMessageRegister);
const std::string kCode(kCodeRegister);
const std::string kSyn(kSyndromeRegister);

// Records each intermediate state and checks that no step merged terms.
class Recorder {
 public:
  Recorder(ProtocolTrace& trace, std::size_t terms) : trace_(trace), terms_(terms) {}

  void step(std::string label, const SparseState& s) {
    if (s.term_count() != terms_) {
      throw ProtocolError(label + ": term count changed from " + std::to_string(terms_) + " to " +
                          std::to_string(s.term_count()));
    }
    StepSummary summary{std::move(label), s.term_count(), s.layout().to_string(), {}};
    for (const auto& r : s.layout().registers()) {
      summary.constant_registers.emplace_back(r.name, s.constant_value(r.name).has_value());
    }
    trace_.steps.push_back(std::move(summary));
  }

 private:
  ProtocolTrace& trace_;
  std::size_t terms_;
};

void require_zero(const SparseState& s, const std::string& reg, const std::string& what) {
  const auto v = s.constant_value(reg);
  if (!v || !v->is_zero()) {
    throw ProtocolError("uncompute failed: register '" + reg + "' is not |0> after " + what);
  }
}

SparseState single_register(const SparseState& in, std::size_t width, const std::string& name,
                            const char* who) {
  const auto& regs = in.layout().registers();
  if (regs.size() != 1 || regs[0].width != width) {
    throw InvalidArgument(std::string(who) + " expects a single register of width " +
                          std::to_string(width) + ", got '" + in.layout().to_string() + "'");
  }
  if (regs[0].name == name) return in;
  std::vector<std::pair<BitVec, Amplitude>> keyed(in.terms().begin(), in.terms().end());
  return SparseState::from_keyed_terms(RegisterLayout({{name, width}}), keyed);
}

}  // namespace

PipelineResult alice_encrypt_with_error(const PublicKey& pk, const SparseState& plaintext,
                                        const BitVec& error) {
  if (error.size() != pk.n) throw InvalidArgument("error length does not match n");
  PipelineResult out{single_register(plaintext, pk.k, kMsg, "alice_encrypt"), {}};
  SparseState& s = out.state;
  Recorder rec(out.trace, s.term_count());
  rec.step("alice: input |m>_k", s);

  s = attach_register(s, kCode, pk.n, BitVec(pk.n));
  rec.step("alice: attach |0>_n", s);
  s = apply_xor_linear(s, kMsg, kCode, pk.gpub);
  rec.step("alice: code ^= msg * G'", s);
  s = apply_xor_linear(s, kCode, kMsg, pk.gpub_inv);
  rec.step("alice: msg ^= code * G'^-", s);
  require_zero(s, kMsg, "msg ^= code * G'^-");
  s = discard_register(s, kMsg);
  rec.step("alice: discard |0>_k", s);

  s = apply_xor_const(s, kCode, error);
  rec.step("alice: code ^= e", s);
  out.trace.sender_error = error;
  return out;
}

PipelineResult alice_encrypt(const PublicKey& pk, const SparseState& plaintext, Rng& rng) {
  // Validate before drawing so a bad call leaves the stream untouched.
  single_register(plaintext, pk.k, kMsg, "alice_encrypt");
  return alice_encrypt_with_error(pk, plaintext, sample_error(pk.n, pk.t, rng));
}

PipelineResult bob_decrypt(const PrivateKey& sk, const SparseState& ciphertext, Rng& rng) {
  const GoppaCode& code = sk.code;
  PipelineResult out{single_register(ciphertext, sk.n(), kCode, "bob_decrypt"), {}};
  SparseState& s = out.state;
  Recorder rec(out.trace, s.term_count());
  rec.step("bob: input |mG' + e>_n", s);

  s = apply_linear_bijection(s, kCode, sk.p_inv.matrix());
  rec.step("bob: code <- code * P^-1", s);

  s = attach_register(s, kSyn, code.syndrome_bits(), BitVec(code.syndrome_bits()));
  rec.step("bob: attach |0>_mt", s);
  s = apply_xor_linear(s, kCode, kSyn, code.parity_check_transposed());
  rec.step("bob: syn ^= code * H^T", s);

  auto [record, collapsed] = measure_register(s, kSyn, rng);
  s = std::move(collapsed);
  out.trace.measurements.push_back(record);
  if (std::abs(1.0 - record.probability) > kInternalTolerance) {
    throw ProtocolError("syndrome register entangled: outcome probability " +
                        std::to_string(record.probability));
  }
  rec.step("bob: measure syn", s);
  const BitVec error = code.decode(record.outcome);
  out.trace.recovered_error = error;
  s = discard_register(s, kSyn);
  rec.step("bob: discard syn", s);

  s = apply_xor_const(s, kCode, error);
  rec.step("bob: code ^= e'", s);

  s = attach_register(s, kMsg, sk.k(), BitVec(sk.k()));
  rec.step("bob: attach |0>_k", s);
  s = apply_xor_linear(s, kCode, kMsg, code.generator_right_inverse());
  rec.step("bob: msg ^= code * G^-", s);
  s = apply_xor_linear(s, kMsg, kCode, code.generator());
  rec.step("bob: code ^= msg * G", s);
  require_zero(s, kCode, "code ^= msg * G");
  s = discard_register(s, kCode);
  rec.step("bob: discard |0>_n", s);

  s = apply_linear_bijection(s, kMsg, sk.s_inv);
  rec.step("bob: msg <- msg * S^-1", s);
  return out;
}

SparseState make_message_state(std::size_t k,
                               const std::vector<std::pair<Amplitude, BitVec>>& terms) {
  std::vector<std::pair<BitVec, Amplitude>> keyed;
  keyed.reserve(terms.size());
  for (const auto& [amp, bits] : terms) {
    if (bits.size() != k) {
      throw InvalidArgument("message term has " + std::to_string(bits.size()) +
                            " bits, expected k = " + std::to_string(k));
    }
    keyed.emplace_back(bits, amp);
  }
  return SparseState::from_keyed_terms(RegisterLayout({{kMsg, k}}), keyed);
}

RoundtripReport run_roundtrip(const FieldParams& params, std::size_t n, std::size_t t,
                              const std::vector<std::pair<Amplitude, BitVec>>& terms,
                              std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  const auto ms_since = [](Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };
  if (params.m * t >= n) throw InvalidArgument("need m*t < n");
  RoundtripReport report;
  report.plaintext = make_message_state(n - params.m * t, terms);

  const Rng root(seed);
  Rng key_rng = root.fork("keygen");
  Rng alice_rng = root.fork("alice");
  Rng bob_rng = root.fork("bob");

  auto start = Clock::now();
  const KeyPair keys = keygen(params, n, t, key_rng);
  report.timings_ms.emplace_back("keygen", ms_since(start));
  report.n = keys.pub.n;
  report.k = keys.pub.k;
  report.t = keys.pub.t;
  report.fingerprint = fingerprint(keys.pub);

  start = Clock::now();
  PipelineResult enc = alice_encrypt(keys.pub, report.plaintext, alice_rng);
  report.timings_ms.emplace_back("encrypt", ms_since(start));
  report.ciphertext = enc.state;
  report.alice = std::move(enc.trace);

  start = Clock::now();
  PipelineResult dec = bob_decrypt(keys.priv, report.ciphertext, bob_rng);
  report.timings_ms.emplace_back("decrypt", ms_since(start));
  report.recovered = std::move(dec.state);
  report.bob = std::move(dec.trace);
  report.fidelity = fidelity(report.plaintext, report.recovered);
  return report;
}

std::string format_report(const RoundtripReport& report, bool include_timing) {
  std::ostringstream out;
  out << "n=" << report.n << " k=" << report.k << " t=" << report.t << '\n';
  out << "public key fingerprint: " << report.fingerprint << '\n';
  const auto steps = [&](const ProtocolTrace& trace) {
    for (const auto& st : trace.steps) {
      out << "  " << st.label << " | terms=" << st.term_count << " | layout=" << st.layout
          << " | constant=";
      bool first = true;
      for (const auto& [name, constant] : st.constant_registers) {
        out << (first ? "" : ",") << name << ':' << (constant ? "yes" : "no");
        first = false;
      }
      out << '\n';
    }
  };
  out << "encryption:\n";
  steps(report.alice);
  if (report.alice.sender_error) {
    out << "  error e = " << report.alice.sender_error->to_string() << '\n';
  }
  out << "decryption:\n";
  steps(report.bob);
  char buf[64];
  for (const auto& m : report.bob.measurements) {
    std::snprintf(buf, sizeof buf, "%.15f", m.probability);
    out << "  measured " << m.register_name << " = " << m.outcome.to_string()
        << " with probability " << buf << '\n';
  }
  if (report.bob.recovered_error) {
    out << "  recovered error e' = " << report.bob.recovered_error->to_string() << '\n';
  }
  std::snprintf(buf, sizeof buf, "%.15f", report.fidelity);
  out << "fidelity: " << buf << '\n';
  if (include_timing) {
    for (const auto& [stage, ms] : report.timings_ms) {
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      out << "time " << stage << ": " << buf << " ms\n";
    }
  }
  return out.str();
}

}  // namespace qpkc
