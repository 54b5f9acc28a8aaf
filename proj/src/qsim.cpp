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

#include "qpkc/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qpkc/error.hpp"
#include "qpkc/rng.hpp"

namespace qpkc {

namespace detail {

struct StateAccess {
  static SparseState make(RegisterLayout layout, SparseState::Terms terms) {
    return SparseState(std::move(layout), std::move(terms));
  }
};

}  // namespace detail

namespace {

using detail::StateAccess;

// Re-keys every term through `f`. Colliding images add their amplitudes and
// exact zeros are dropped; for the bijections used here neither happens.
template <typename F>
SparseState rekey(const SparseState& state, RegisterLayout layout, F&& f) {
  SparseState::Terms out;
  for (const auto& [key, amp] : state.terms()) {
    auto [it, inserted] = out.try_emplace(f(key), amp);
    if (!inserted) {
      it->second += amp;
      if (it->second == Amplitude{}) out.erase(it);
    }
  }
  return StateAccess::make(std::move(layout), std::move(out));
}

SparseState checked_state(RegisterLayout layout, const std::vector<std::pair<BitVec, Amplitude>>& terms) {
  if (terms.empty()) throw InvalidArgument("state needs at least one term");
  SparseState::Terms map;
  double norm = 0.0;
  std::set<BitVec> seen;
  for (const auto& [key, amp] : terms) {
    if (key.size() != layout.total_width()) {
      throw InvalidArgument("basis key has " + std::to_string(key.size()) + " bits, layout needs " +
                            std::to_string(layout.total_width()));
    }
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw InvalidArgument("amplitude is not finite");
    }
    if (!seen.insert(key).second) throw InvalidArgument("duplicate basis key " + key.to_string());
    norm += std::norm(amp);
    if (amp != Amplitude{}) map.emplace(key, amp);
  }
  if (std::abs(norm - 1.0) > kInputNormTolerance) {
    throw InvalidArgument("state is not normalized: squared amplitudes sum to " +
                          std::to_string(norm));
  }
  return StateAccess::make(std::move(layout), std::move(map));
}

}  // namespace

RegisterLayout::RegisterLayout(std::vector<Register> registers) : registers_(std::move(registers)) {
  std::set<std::string_view> names;
  for (const auto& r : registers_) {
    if (r.width == 0) throw InvalidArgument("register '" + r.name + "' has zero width");
    if (!names.insert(r.name).second) throw InvalidArgument("duplicate register name '" + r.name + "'");
    total_ += r.width;
  }
}

std::size_t RegisterLayout::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name == name) return i;
  }
  throw InvalidArgument("unknown register '" + std::string(name) + "'");
}

bool RegisterLayout::contains(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return true;
  }
  return false;
}

std::size_t RegisterLayout::offset(std::string_view name) const {
  const std::size_t idx = index_of(name);
  std::size_t off = 0;
  for (std::size_t i = 0; i < idx; ++i) off += registers_[i].width;
  return off;
}

std::size_t RegisterLayout::width(std::string_view name) const {
  return registers_[index_of(name)].width;
}

RegisterLayout RegisterLayout::with_appended(std::string name, std::size_t width) const {
  auto regs = registers_;
  regs.push_back({std::move(name), width});
  return RegisterLayout(std::move(regs));
}

RegisterLayout RegisterLayout::without(std::string_view name) const {
  const std::size_t idx = index_of(name);
  auto regs = registers_;
  regs.erase(regs.begin() + static_cast<std::ptrdiff_t>(idx));
  return RegisterLayout(std::move(regs));
}

std::string RegisterLayout::to_string() const {
  std::string out;
  for (const auto& r : registers_) {
    if (!out.empty()) out += ' ';
    out += r.name + ':' + std::to_string(r.width);
  }
  return out;
}

// ---------------------------------------------------------------------------

SparseState SparseState::from_terms(RegisterLayout layout, const std::vector<Term>& terms) {
  std::vector<std::pair<BitVec, Amplitude>> keyed;
  keyed.reserve(terms.size());
  const auto& regs = layout.registers();
  for (const auto& term : terms) {
    if (term.values.size() != regs.size()) {
      throw InvalidArgument("term gives " + std::to_string(term.values.size()) +
                            " register values, layout has " + std::to_string(regs.size()));
    }
    BitVec key(0);
    for (std::size_t i = 0; i < regs.size(); ++i) {
      if (term.values[i].size() != regs[i].width) {
        throw InvalidArgument("value for register '" + regs[i].name + "' has wrong width");
      }
      key = key.concat(term.values[i]);
    }
    keyed.emplace_back(std::move(key), term.amplitude);
  }
  return checked_state(std::move(layout), keyed);
}

SparseState SparseState::from_keyed_terms(RegisterLayout layout,
                                          const std::vector<std::pair<BitVec, Amplitude>>& terms) {
  return checked_state(std::move(layout), terms);
}

double SparseState::norm_squared() const {
  // Summed in sorted order so the result depends only on the multiset of
  // amplitudes, not on which keys carry them.
  std::vector<double> parts;
  parts.reserve(terms_.size());
  for (const auto& [key, amp] : terms_) parts.push_back(std::norm(amp));
  std::sort(parts.begin(), parts.end());
  double n = 0.0;
  for (double x : parts) n += x;
  return n;
}

Amplitude SparseState::amplitude(const BitVec& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? Amplitude{} : it->second;
}

BitVec SparseState::register_value(const BitVec& key, std::string_view name) const {
  return key.slice(layout_.offset(name), layout_.width(name));
}

std::optional<BitVec> SparseState::constant_value(std::string_view name) const {
  const std::size_t off = layout_.offset(name);
  const std::size_t width = layout_.width(name);
  std::optional<BitVec> value;
  for (const auto& [key, amp] : terms_) {
    BitVec v = key.slice(off, width);
    if (!value) {
      value = std::move(v);
    } else if (*value != v) {
      return std::nullopt;
    }
  }
  return value;
}

SparseState attach_register(const SparseState& state, std::string name, std::size_t width,
                            const BitVec& value) {
  if (value.size() != width) throw InvalidArgument("attached value width mismatch");
  if (state.layout().contains(name)) {
    throw InvalidArgument("register '" + name + "' already exists");
  }
  RegisterLayout layout = state.layout().with_appended(std::move(name), width);
  return rekey(state, std::move(layout), [&](const BitVec& key) { return key.concat(value); });
}

SparseState apply_xor_linear(const SparseState& state, std::string_view src, std::string_view dst,
                             const BitMatrix& m) {
  if (src == dst) throw InvalidArgument("apply_xor_linear: source and target must differ");
  const auto& layout = state.layout();
  const std::size_t src_off = layout.offset(src);
  const std::size_t src_w = layout.width(src);
  const std::size_t dst_off = layout.offset(dst);
  const std::size_t dst_w = layout.width(dst);
  if (m.rows() != src_w || m.cols() != dst_w) {
    throw InvalidArgument("apply_xor_linear: matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", registers need " + std::to_string(src_w) +
                          "x" + std::to_string(dst_w));
  }
  return rekey(state, layout, [&](const BitVec& key) {
    BitVec out = key;
    out.xor_at(dst_off, vec_mat_mul(key.slice(src_off, src_w), m));
    return out;
  });
}

SparseState apply_xor_const(const SparseState& state, std::string_view reg, const BitVec& c) {
  const auto& layout = state.layout();
  const std::size_t off = layout.offset(reg);
  if (c.size() != layout.width(reg)) throw InvalidArgument("apply_xor_const: width mismatch");
  return rekey(state, layout, [&](const BitVec& key) {
    BitVec out = key;
    out.xor_at(off, c);
    return out;
  });
}

SparseState apply_linear_bijection(const SparseState& state, std::string_view reg,
                                   const BitMatrix& a) {
  const auto& layout = state.layout();
  const std::size_t off = layout.offset(reg);
  const std::size_t width = layout.width(reg);
  if (a.rows() != width || a.cols() != width) {
    throw InvalidArgument("apply_linear_bijection: matrix must be " + std::to_string(width) +
                          " x " + std::to_string(width));
  }
  if (rank(a) != width) throw ArithmeticError("apply_linear_bijection: matrix is singular");
  return rekey(state, layout, [&](const BitVec& key) {
    BitVec out = key;
    out.assign(off, vec_mat_mul(key.slice(off, width), a));
    return out;
  });
}

std::map<BitVec, double> outcome_probabilities(const SparseState& state, std::string_view reg) {
  const std::size_t off = state.layout().offset(reg);
  const std::size_t width = state.layout().width(reg);
  std::map<BitVec, double> probs;
  for (const auto& [key, amp] : state.terms()) probs[key.slice(off, width)] += std::norm(amp);
  return probs;
}

std::pair<MeasurementRecord, SparseState> measure_register(const SparseState& state,
                                                           std::string_view reg, Rng& rng) {
  const auto probs = outcome_probabilities(state, reg);
  double total = 0.0;
  for (const auto& [v, p] : probs) total += p;
  const double r = rng.uniform_real() * total;
  auto chosen = std::prev(probs.end());
  double acc = 0.0;
  for (auto it = probs.begin(); it != probs.end(); ++it) {
    acc += it->second;
    if (r < acc) {
      chosen = it;
      break;
    }
  }
  const BitVec& outcome = chosen->first;
  const double p = chosen->second;

  const std::size_t off = state.layout().offset(reg);
  const std::size_t width = state.layout().width(reg);
  const double scale = 1.0 / std::sqrt(p);
  SparseState::Terms collapsed;
  for (const auto& [key, amp] : state.terms()) {
    if (key.slice(off, width) == outcome) {
      collapsed.emplace(key, probs.size() == 1 ? amp : amp * scale);
    }
  }
  MeasurementRecord record{std::string(reg), outcome, p};
  return {std::move(record), StateAccess::make(state.layout(), std::move(collapsed))};
}

SparseState discard_register(const SparseState& state, std::string_view reg) {
  if (!state.constant_value(reg)) {
    throw ProtocolError("register '" + std::string(reg) +
                        "' entangled or non-constant, cannot discard");
  }
  const std::size_t off = state.layout().offset(reg);
  const std::size_t width = state.layout().width(reg);
  const std::size_t total = state.layout().total_width();
  return rekey(state, state.layout().without(reg), [&](const BitVec& key) {
    return key.slice(0, off).concat(key.slice(off + width, total - off - width));
  });
}

double fidelity(const SparseState& a, const SparseState& b) {
  if (a.layout() != b.layout()) {
    throw InvalidArgument("fidelity: layouts differ ('" + a.layout().to_string() + "' vs '" +
                          b.layout().to_string() + "')");
  }
  Amplitude inner{};
  for (const auto& [key, amp] : a.terms()) inner += std::conj(amp) * b.amplitude(key);
  return std::norm(inner);
}

}  // namespace qpkc
