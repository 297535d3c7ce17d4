// Copyright 2026 The wchoose Authors
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

namespace wchoose {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size or search-space limit was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A certificate or an internal cross-check failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace wchoose
