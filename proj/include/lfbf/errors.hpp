// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The lfbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lfbf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by mat_inverse when a pivot vanishes or the condition estimate
/// exceeds the configured limit.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Stacked quantized directions are linearly dependent.
class SingularStack : public SingularMatrix {
 public:
  using SingularMatrix::SingularMatrix;
};

class InvalidLength : public Error {
 public:
  using Error::Error;
};

class CodebookTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroChannel : public Error {
 public:
  using Error::Error;
};

class NullEffectiveChannel : public Error {
 public:
  using Error::Error;
};

class OddBitCount : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lfbf
