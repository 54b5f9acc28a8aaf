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

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpkc/bitlinalg.hpp"

namespace qpkc {

class Rng;

namespace detail {
struct StateAccess;
}

using Amplitude = std::complex<double>;

/// Tolerance on the norm of user-supplied states.
inline constexpr double kInputNormTolerance = 1e-9;
/// Tolerance for internal checks (Born probability of deterministic
/// outcomes, fidelity).
inline constexpr double kInternalTolerance = 1e-12;

struct Register {
  std::string name;
  std::size_t width = 0;

  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered named registers. A basis key is the concatenation of the register
/// values in layout order.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  /// Throws InvalidArgument on duplicate names or zero widths.
  explicit RegisterLayout(std::vector<Register> registers);

  const std::vector<Register>& registers() const { return registers_; }
  std::size_t total_width() const { return total_; }
  bool contains(std::string_view name) const;
  /// Throws InvalidArgument for unknown names.
  std::size_t offset(std::string_view name) const;
  std::size_t width(std::string_view name) const;

  RegisterLayout with_appended(std::string name, std::size_t width) const;
  RegisterLayout without(std::string_view name) const;

  /// "name:width name:width ..."
  std::string to_string() const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

 private:
  std::size_t index_of(std::string_view name) const;

  std::vector<Register> registers_;
  std::size_t total_ = 0;
};

/// One term of a state given register by register.
struct Term {
  Amplitude amplitude;
  std::vector<BitVec> values;  ///< one per register, in layout order
};

struct MeasurementRecord {
  std::string register_name;
  BitVec outcome;
  double probability = 0.0;
};

/// Pure state as a finite map from basis keys to nonzero amplitudes.
/// Values are immutable; every operation below returns a new state.
class SparseState {
 public:
  using Terms = std::map<BitVec, Amplitude>;

  /// Empty placeholder with no registers and no terms.
  SparseState() = default;

  /// Throws InvalidArgument for an empty term list, a value whose width does
  /// not match its register, a repeated basis key, or a squared-amplitude sum
  /// off 1 by more than kInputNormTolerance. Zero amplitudes are dropped.
  static SparseState from_terms(RegisterLayout layout, const std::vector<Term>& terms);
  /// Same checks, with each term keyed by its full-width basis string.
  static SparseState from_keyed_terms(RegisterLayout layout,
                                      const std::vector<std::pair<BitVec, Amplitude>>& terms);

  const RegisterLayout& layout() const { return layout_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double norm_squared() const;
  Amplitude amplitude(const BitVec& key) const;

  /// Value of `name` inside a basis key of this state.
  BitVec register_value(const BitVec& key, std::string_view name) const;
  /// The register's value if it is the same in every term.
  std::optional<BitVec> constant_value(std::string_view name) const;

 private:
  friend struct detail::StateAccess;
  SparseState(RegisterLayout layout, Terms terms)
      : layout_(std::move(layout)), terms_(std::move(terms)) {}

  RegisterLayout layout_;
  Terms terms_;
};

/// Appends a register holding `value` in every term. Throws InvalidArgument
/// on a duplicate name or when value.size() != width.
SparseState attach_register(const SparseState& state, std::string name, std::size_t width,
                            const BitVec& value);

/// dst ^= src * M in every term. Throws InvalidArgument for unknown
/// registers, src == dst, or M not width(src) x width(dst).
SparseState apply_xor_linear(const SparseState& state, std::string_view src,
                             std::string_view dst, const BitMatrix& m);

/// reg ^= c in every term.
SparseState apply_xor_const(const SparseState& state, std::string_view reg, const BitVec& c);

/// reg <- reg * A. Throws InvalidArgument for a shape mismatch and
/// ArithmeticError when A is singular (the map would not be unitary).
SparseState apply_linear_bijection(const SparseState& state, std::string_view reg,
                                   const BitMatrix& a);

/// Samples an outcome with its Born probability and returns the collapsed,
/// renormalized state.
std::pair<MeasurementRecord, SparseState> measure_register(const SparseState& state,
                                                           std::string_view reg, Rng& rng);

/// Probability of every outcome of `reg`, keyed by outcome.
std::map<BitVec, double> outcome_probabilities(const SparseState& state, std::string_view reg);

/// Removes a register whose value is identical in every term. Throws
/// ProtocolError("register entangled or non-constant, cannot discard")
/// otherwise.
SparseState discard_register(const SparseState& state, std::string_view reg);

/// |<a|b>|^2. Throws InvalidArgument when the layouts differ.
double fidelity(const SparseState& a, const SparseState& b);

}  // namespace qpkc
