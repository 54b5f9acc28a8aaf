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

#include <stdexcept>
#include <string>

namespace qpkc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or parameters: sizes, ranges, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Arithmetic that has no answer, such as inverting zero or a singular matrix.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent serialized data (keys, states, bit strings).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// The received word is outside the decoding radius of the code.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

/// A runtime check of the encryption or decryption pipeline did not hold.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpkc
