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

#include "qpkc/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qpkc/error.hpp"
#include "qpkc/keyio.hpp"
#include "qpkc/protocol.hpp"
#include "qpkc/rng.hpp"
#include "qpkc/selftest.hpp"
#include "qpkc/state_io.hpp"

namespace qpkc {

namespace {

// Command-line input the user can fix by editing the invocation.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents) || !out.flush()) throw FormatError("cannot write '" + path + "'");
}

BitVec parse_bits_arg(const std::string& bits, std::size_t expected, const char* what) {
  BitVec v;
  try {
    v = BitVec::from_string(bits);
  } catch (const FormatError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  if (v.size() != expected) {
    throw UsageError(std::string(what) + " has " + std::to_string(v.size()) +
                     " bits, expected " + std::to_string(expected));
  }
  return v;
}

FieldParams field_params(unsigned m, const std::optional<std::string>& modulus) {
  try {
    FieldParams fp = FieldParams::standard(m);
    if (modulus) {
      std::size_t used = 0;
      fp.modulus = static_cast<std::uint32_t>(std::stoul(*modulus, &used, 16));
      if (used != modulus->size()) throw InvalidArgument("modulus must be hex");
    }
    Field check(fp);
    return fp;
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("invalid --modulus: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::pair<Amplitude, BitVec>> parse_terms(const std::string& list) {
  std::vector<std::pair<Amplitude, BitVec>> terms;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string::npos) end = list.size();
    const std::string item = list.substr(start, end - start);
    const std::size_t colon = item.rfind(':');
    if (colon == std::string::npos) throw UsageError("term '" + item + "' must be amplitude:bits");
    try {
      terms.emplace_back(parse_amplitude(item.substr(0, colon)),
                         BitVec::from_string(item.substr(colon + 1)));
    } catch (const FormatError& e) {
      throw UsageError("term '" + item + "': " + e.what());
    }
    start = end + 1;
  }
  return terms;
}

struct Options {
  unsigned m = 0;
  std::size_t n = 0;
  std::size_t t = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> modulus;
  std::string pub_path;
  std::string priv_path;
  std::string bits;
  std::string in_path;
  std::string out_path;
  std::string terms;
  std::string level = "quick";
  bool timing = false;
  bool inject_fault = false;
};

int cmd_keygen(const Options& o, std::ostream& out) {
  const FieldParams fp = field_params(o.m, o.modulus);
  Rng rng(*o.seed);
  const KeyPair keys = [&] {
    try {
      return keygen(fp, o.n, o.t, rng);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }();
  write_file(o.pub_path, serialize_public_key(keys.pub));
  write_file(o.priv_path, serialize_private_key(keys.priv));
  out << "n=" << keys.pub.n << " k=" << keys.pub.k << " t=" << keys.pub.t << '\n';
  out << "fingerprint=" << fingerprint(keys.pub) << '\n';
  return kExitOk;
}

int cmd_encrypt(const Options& o, std::ostream& out) {
  const PublicKey pk = parse_public_key(read_file(o.pub_path));
  const BitVec msg = parse_bits_arg(o.bits, pk.k, "--msg");
  Rng rng = Rng(*o.seed).fork("encrypt");
  out << encrypt(pk, msg, rng).to_string() << '\n';
  return kExitOk;
}

int cmd_decrypt(const Options& o, std::ostream& out) {
  const PrivateKey sk = parse_private_key(read_file(o.priv_path));
  const BitVec ct = parse_bits_arg(o.bits, sk.n(), "--ct");
  out << decrypt(sk, ct).to_string() << '\n';
  return kExitOk;
}

int cmd_qencrypt(const Options& o, std::ostream& out) {
  const PublicKey pk = parse_public_key(read_file(o.pub_path));
  const SparseState plaintext = read_state(read_file(o.in_path));
  Rng rng = Rng(*o.seed).fork("encrypt");
  PipelineResult res;
  try {
    res = alice_encrypt(pk, plaintext, rng);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  write_file(o.out_path, write_state(res.state));
  out << "terms=" << res.state.term_count() << " layout=" << res.state.layout().to_string() << '\n';
  return kExitOk;
}

int cmd_qdecrypt(const Options& o, std::ostream& out) {
  const PrivateKey sk = parse_private_key(read_file(o.priv_path));
  const SparseState ciphertext = read_state(read_file(o.in_path));
  Rng rng = Rng(*o.seed).fork("decrypt");
  PipelineResult res;
  try {
    res = bob_decrypt(sk, ciphertext, rng);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  write_file(o.out_path, write_state(res.state));
  for (const auto& m : res.trace.measurements) {
    out << "measured " << m.register_name << '=' << m.outcome.to_string() << '\n';
  }
  out << "terms=" << res.state.term_count() << " layout=" << res.state.layout().to_string() << '\n';
  return kExitOk;
}

int cmd_qdemo(const Options& o, std::ostream& out) {
  const FieldParams fp = field_params(o.m, o.modulus);
  const auto terms = parse_terms(o.terms);
  RoundtripReport report;
  try {
    report = run_roundtrip(fp, o.n, o.t, terms, *o.seed);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  out << format_report(report, o.timing);
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  SelftestOptions so;
  so.level = o.level == "full" ? SelftestLevel::kFull : SelftestLevel::kQuick;
  so.inject_parity_fault = o.inject_fault;
  if (o.seed) so.seed = *o.seed;
  bool ok = true;
  for (const auto& r : run_selftest(so)) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (o.timing) out << " (" << ms << " ms)";
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    ok = ok && r.passed;
  }
  out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  return ok ? kExitOk : kExitCrypto;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum public-key encryption over McEliece keys"};
  app.require_subcommand(1);
  Options o;

  const auto add_params = [&o](CLI::App* sub) {
    sub->add_option("--m", o.m, "field extension degree")->required()->check(CLI::Range(2, 16));
    sub->add_option("--n", o.n, "code length")->required();
    sub->add_option("--t", o.t, "errors corrected")->required();
    sub->add_option("--modulus", o.modulus, "field modulus in hex (default per m)");
  };

  auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
  add_params(keygen_cmd);
  keygen_cmd->add_option("--seed", o.seed, "random seed")->required();
  keygen_cmd->add_option("--pub", o.pub_path, "public key output path")->required();
  keygen_cmd->add_option("--priv", o.priv_path, "private key output path")->required();

  auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a k-bit message");
  encrypt_cmd->add_option("--pub", o.pub_path, "public key path")->required();
  encrypt_cmd->add_option("--msg", o.bits, "message bits, leftmost = index 0")->required();
  encrypt_cmd->add_option("--seed", o.seed, "random seed")->required();

  auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt an n-bit ciphertext");
  decrypt_cmd->add_option("--priv", o.priv_path, "private key path")->required();
  decrypt_cmd->add_option("--ct", o.bits, "ciphertext bits, leftmost = index 0")->required();
  decrypt_cmd->add_option("--seed", o.seed, "accepted for symmetry; unused");

  auto* qencrypt_cmd = app.add_subcommand("qencrypt", "encrypt a state file");
  qencrypt_cmd->add_option("--pub", o.pub_path, "public key path")->required();
  qencrypt_cmd->add_option("--in", o.in_path, "plaintext state file")->required();
  qencrypt_cmd->add_option("--out", o.out_path, "ciphertext state file")->required();
  qencrypt_cmd->add_option("--seed", o.seed, "random seed")->required();

  auto* qdecrypt_cmd = app.add_subcommand("qdecrypt", "decrypt a state file");
  qdecrypt_cmd->add_option("--priv", o.priv_path, "private key path")->required();
  qdecrypt_cmd->add_option("--in", o.in_path, "ciphertext state file")->required();
  qdecrypt_cmd->add_option("--out", o.out_path, "plaintext state file")->required();
  qdecrypt_cmd->add_option("--seed", o.seed, "random seed for the syndrome measurement")->required();

  auto* qdemo_cmd = app.add_subcommand("qdemo", "key generation plus a full state round trip");
  add_params(qdemo_cmd);
  qdemo_cmd->add_option("--seed", o.seed, "random seed")->required();
  qdemo_cmd->add_option("--terms", o.terms, "comma-separated amplitude:bits, e.g. 0.6:0101,0.8j:1100")
      ->required();
  qdemo_cmd->add_flag("--timing", o.timing, "print per-stage timing");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in property suites");
  selftest_cmd->add_option("--level", o.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  selftest_cmd->add_option("--seed", o.seed, "random seed (default 1)");
  selftest_cmd->add_flag("--timing", o.timing, "print per-check timing");
  selftest_cmd->add_flag("--inject-fault", o.inject_fault, "flip one parity-check bit")
      ->group("");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen_cmd) return cmd_keygen(o, out);
    if (*encrypt_cmd) return cmd_encrypt(o, out);
    if (*decrypt_cmd) return cmd_decrypt(o, out);
    if (*qencrypt_cmd) return cmd_qencrypt(o, out);
    if (*qdecrypt_cmd) return cmd_qdecrypt(o, out);
    if (*qdemo_cmd) return cmd_qdemo(o, out);
    if (*selftest_cmd) return cmd_selftest(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const DecodeFailure& e) {
    err << "decryption failed: " << e.what() << '\n';
    return kExitCrypto;
  } catch (const ProtocolError& e) {
    err << "protocol check failed: " << e.what() << '\n';
    return kExitCrypto;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCrypto;
  }
  return kExitUsage;
}

}  // namespace qpkc
