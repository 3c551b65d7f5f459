// Copyright 2026 The posebench Authors
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

namespace posebench {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. The message carries line/column or field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a data-model invariant
/// (referential integrity, schema mismatch, out-of-range values).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Valid data on which the requested computation is undefined
/// (empty selection, degenerate table, too few pairs, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace posebench
