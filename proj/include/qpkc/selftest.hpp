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
#include <string>
#include <vector>

namespace qpkc {

enum class SelftestLevel { kQuick, kFull };

struct SelftestOptions {
  SelftestLevel level = SelftestLevel::kQuick;
  std::uint64_t seed = 1;
  /// Flips one bit of the parity-check matrix of the code under test.
  bool inject_parity_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

/// quick: property suites at (m=4, n=16, t=2), including exhaustive
/// Patterson decoding. full: adds randomized suites at (m=10, n=1024, t=50).
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

}  // namespace qpkc
