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

#include "qpkc/qsim.hpp"

namespace qpkc {

// Line-oriented state files:
//
//   QSTATE v1
//   layout: name1:w1 name2:w2 ...
//   <re> <im> <bits>        (one line per term)
//
// <bits> is the full basis key in layout order, leftmost character = bit 0.
// Amplitudes are written with 17 significant digits so they read back
// exactly. Reading applies the same validation as SparseState::from_terms
// and reports it as FormatError.

std::string write_state(const SparseState& state);
SparseState read_state(std::string_view text);

/// Parses "re", "re+imj", "re-imj" or "imj".
Amplitude parse_amplitude(std::string_view text);

}  // namespace qpkc
