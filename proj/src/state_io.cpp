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

#include "qpkc/state_io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "qpkc/error.hpp"

namespace qpkc {

namespace {

constexpr std::string_view kHeader = "QSTATE v1";
constexpr std::string_view kLayoutPrefix = "layout: ";

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(std::string_view s) {
  if (s.empty()) throw FormatError("empty number");
  // strtod needs a terminated buffer; from_chars for double is missing from
  // older standard libraries.
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) throw FormatError("malformed number '" + buf + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (true) {
    const std::size_t j = s.find(sep, i);
    out.push_back(s.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

}  // namespace

Amplitude parse_amplitude(std::string_view text) {
  if (text.empty()) throw FormatError("empty amplitude");
  if (text.back() != 'j') return {parse_double(text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // The sign separating real and imaginary parts is the last '+' or '-' that
  // is neither leading nor part of an exponent.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  if (split_at == std::string_view::npos) {
    if (body.empty() || body == "+" || body == "-") {
      return {0.0, body == "-" ? -1.0 : 1.0};
    }
    return {0.0, parse_double(body)};
  }
  const std::string_view re = body.substr(0, split_at);
  std::string_view im = body.substr(split_at);
  const double im_value = im.size() == 1 ? (im[0] == '-' ? -1.0 : 1.0)
                                         : parse_double(im[0] == '+' ? im.substr(1) : im);
  return {parse_double(re), im_value};
}

std::string write_state(const SparseState& state) {
  std::ostringstream out;
  out << kHeader << '\n';
  out << "layout:";
  for (const auto& r : state.layout().registers()) out << ' ' << r.name << ':' << r.width;
  out << '\n';
  for (const auto& [key, amp] : state.terms()) {
    out << format_double(amp.real()) << ' ' << format_double(amp.imag()) << ' '
        << key.to_string() << '\n';
  }
  return out.str();
}

SparseState read_state(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3) throw FormatError("state file needs a header, a layout and at least one term");
  if (lines[0] != kHeader) throw FormatError("missing 'QSTATE v1' header");
  if (lines[1].substr(0, kLayoutPrefix.size()) != kLayoutPrefix) {
    throw FormatError("missing 'layout:' line");
  }

  std::vector<Register> regs;
  for (auto tok : split(lines[1].substr(kLayoutPrefix.size()), ' ')) {
    const std::size_t colon = tok.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw FormatError("layout entry must be name:width, got '" + std::string(tok) + "'");
    }
    std::size_t width = 0;
    const auto w = tok.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), width);
    if (ec != std::errc{} || ptr != w.data() + w.size() || w.empty()) {
      throw FormatError("bad register width in '" + std::string(tok) + "'");
    }
    regs.push_back({std::string(tok.substr(0, colon)), width});
  }

  try {
    RegisterLayout layout(std::move(regs));
    std::vector<std::pair<BitVec, Amplitude>> terms;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const auto fields = split(lines[i], ' ');
      if (fields.size() != 3) throw FormatError("term line must be '<re> <im> <bits>'");
      BitVec key = BitVec::from_string(fields[2]);
      terms.emplace_back(std::move(key), Amplitude{parse_double(fields[0]), parse_double(fields[1])});
    }
    return SparseState::from_keyed_terms(std::move(layout), terms);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("invalid state: ") + e.what());
  }
}

}  // namespace qpkc
