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

#include "qpkc/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>

#include "qpkc/error.hpp"
#include "qpkc/goppa.hpp"
#include "qpkc/mceliece.hpp"
#include "qpkc/protocol.hpp"
#include "qpkc/rng.hpp"

namespace qpkc {

namespace {

struct CheckFailed {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw CheckFailed{detail};
}

class Runner {
 public:
  void run(std::string name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{std::move(name), true, {}, 0.0};
    try {
      body();
    } catch (const CheckFailed& f) {
      r.passed = false;
      r.detail = f.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

void for_each_error(std::size_t n, std::size_t max_weight,
                    const std::function<void(const BitVec&)>& visit) {
  BitVec e(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    visit(e);
    if (left == 0) return;
    for (std::size_t i = start; i < n; ++i) {
      e.set(i);
      rec(i + 1, left - 1);
      e.set(i, false);
    }
  };
  rec(0, max_weight);
}

void check_field_axioms() {
  const Field f(FieldParams::standard(4));
  for (FieldElement a = 0; a < 16; ++a) {
    if (a != 0) require(f.mul(a, f.inv(a)) == 1, "a * a^-1 != 1");
    for (FieldElement b = 0; b < 16; ++b) {
      require(f.mul(a, b) == f.mul_reference(a, b), "table product differs from shift-xor");
      for (FieldElement c = 0; c < 16; ++c) {
        require(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c), "associativity");
        require(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)), "distributivity");
      }
    }
  }
}

void check_sqrt_mod() {
  const Field f(FieldParams::standard(4));
  Poly g;
  for (FieldElement c = 1; g.is_zero(); ++c) {
    if (poly_is_irreducible(f, Poly{c, 1, 1})) g = Poly{c, 1, 1};
  }
  for (FieldElement a = 0; a < 16; ++a) {
    for (FieldElement b = 0; b < 16; ++b) {
      const Poly u{a, b};
      const Poly r = poly_sqrt_mod(f, u, g);
      require(poly_mulmod(f, r, r, g) == u, "sqrt(u)^2 != u mod g");
    }
  }
}

void check_right_inverse(Rng& rng) {
  for (int trial = 0; trial < 100; ++trial) {
    BitMatrix m = BitMatrix::random(8, 16, rng);
    if (rank(m) < 8) continue;
    require(mat_mul(m, right_inverse(m)).is_identity(), "M * M^- != I");
  }
}

void check_patterson_exhaustive(const GoppaCode& code) {
  std::size_t count = 0;
  for_each_error(code.n(), code.t(), [&](const BitVec& e) {
    ++count;
    BitVec decoded;
    try {
      decoded = code.decode(code.syndrome(e));
    } catch (const DecodeFailure& ex) {
      throw CheckFailed{"pattern " + e.to_string() + ": " + ex.what()};
    }
    require(decoded == e, "pattern " + e.to_string() + " decoded to " + decoded.to_string());
  });
  require(count == 137 || code.n() != 16 || code.t() != 2, "expected 137 patterns");
}

void check_classical_roundtrip(const KeyPair& keys, Rng& rng, std::size_t messages,
                               std::size_t errors_each) {
  for (std::size_t i = 0; i < messages; ++i) {
    BitVec m(keys.pub.k);
    if (keys.pub.k <= 16 && messages == (std::size_t{1} << keys.pub.k)) {
      m = BitVec::from_uint(keys.pub.k, i);
    } else {
      for (std::size_t j = 0; j < m.size(); ++j) m.set(j, rng.uniform(2) == 1);
    }
    for (std::size_t r = 0; r < errors_each; ++r) {
      require(decrypt(keys.priv, encrypt(keys.pub, m, rng)) == m,
              "round trip failed for message " + m.to_string());
    }
  }
}

void check_quantum_roundtrip(const KeyPair& keys, Rng& rng, std::size_t trials,
                             std::size_t max_terms) {
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t count = 1 + rng.uniform(max_terms);
    std::vector<std::pair<Amplitude, BitVec>> terms;
    std::vector<BitVec> seen;
    double norm = 0.0;
    while (terms.size() < count) {
      BitVec m(keys.pub.k);
      for (std::size_t j = 0; j < m.size(); ++j) m.set(j, rng.uniform(2) == 1);
      if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
      seen.push_back(m);
      const Amplitude a{rng.uniform_real() - 0.5, rng.uniform_real() - 0.5};
      norm += std::norm(a);
      terms.emplace_back(a, m);
    }
    for (auto& [a, m] : terms) a /= std::sqrt(norm);
    const SparseState psi = make_message_state(keys.pub.k, terms);
    const SparseState out = bob_decrypt(keys.priv, alice_encrypt(keys.pub, psi, rng).state, rng).state;
    const double fid = fidelity(psi, out);
    require(fid >= 1.0 - kInternalTolerance, "fidelity " + std::to_string(fid));
  }
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  Runner runner;
  const Rng root(options.seed);
  Rng rng = root.fork("selftest");

  runner.run("gf2m: field axioms and inverses (m=4, exhaustive)", check_field_axioms);
  runner.run("gf2m: square root mod g squares back (m=4, t=2, exhaustive)", check_sqrt_mod);
  runner.run("bitlinalg: M * right_inverse(M) = I (random 8x16)", [&] { check_right_inverse(rng); });

  Rng key_rng = root.fork("selftest-keys");
  const KeyPair small = keygen(FieldParams::standard(4), 16, 2, key_rng);
  GoppaCode code = small.priv.code;
  if (options.inject_parity_fault) code = code.with_parity_bit_flipped(0, 0);

  runner.run("goppa: G H^T = 0 (m=4, n=16, t=2)", [&] {
    require(mat_mul(code.generator(), code.parity_check_transposed()).is_zero(), "G H^T != 0");
    require(code.k() == 8, "k != n - mt");
  });
  runner.run("goppa: Patterson decodes all 137 errors of weight <= 2", [&] {
    check_patterson_exhaustive(code);
  });
  runner.run("mceliece: S G P = G' and G' G'^- = I", [&] {
    require(small.priv.public_matrix() == small.pub.gpub, "S G P != G'");
    require(mat_mul(small.pub.gpub, small.pub.gpub_inv).is_identity(), "G' G'^- != I");
    require(mat_mul(code.generator(), code.generator_right_inverse()).is_identity(), "G G^- != I");
  });
  runner.run("mceliece: decrypt(encrypt(m)) = m for all 256 messages", [&] {
    check_classical_roundtrip(small, rng, 256, 4);
  });
  runner.run("protocol: quantum round trip fidelity (m=4, 20 superpositions)", [&] {
    check_quantum_roundtrip(small, rng, 20, 16);
  });

  if (options.level == SelftestLevel::kFull) {
    Rng big_rng = root.fork("selftest-large");
    std::optional<KeyPair> big;
    runner.run("mceliece: keygen at m=10, n=1024, t=50", [&] {
      big = keygen(FieldParams::standard(10), 1024, 50, big_rng);
      require(big->pub.k == 524, "k != 524");
      require(mat_mul(big->priv.code.generator(), big->priv.code.parity_check_transposed()).is_zero(),
              "G H^T != 0");
      require(big->priv.public_matrix() == big->pub.gpub, "S G P != G'");
      require(mat_mul(big->pub.gpub, big->pub.gpub_inv).is_identity(), "G' G'^- != I");
    });
    if (big) {
      runner.run("goppa: Patterson on 1000 random weight-50 errors (m=10)", [&] {
        for (int i = 0; i < 1000; ++i) {
          const BitVec e = sample_error(1024, 50, big_rng);
          require(big->priv.code.decode(big->priv.code.syndrome(e)) == e, "decode mismatch");
        }
      });
      runner.run("mceliece: classical round trip (m=10, 20 messages)", [&] {
        check_classical_roundtrip(*big, big_rng, 20, 1);
      });
      runner.run("protocol: quantum round trip, 8 terms over 524 bits", [&] {
        check_quantum_roundtrip(*big, big_rng, 2, 8);
      });
    }
  }
  return runner.take();
}

}  // namespace qpkc
