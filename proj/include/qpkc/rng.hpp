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
#include <random>
#include <string_view>

namespace qpkc {

/// Seeded pseudo-random stream.
///
/// Independent streams for separate purposes (support, Goppa polynomial,
/// scrambler, ...) are obtained with fork(label). A fork depends only on the
/// stream's own seed and the label, never on how much of the parent has been
/// consumed, so adding draws in one stream never perturbs another.
///
/// Bounded draws use rejection sampling on the raw 64-bit engine output, so
/// sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng fork(std::string_view label) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform_real();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qpkc
