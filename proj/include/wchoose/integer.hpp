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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace wchoose {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Monomial and permanent indices may be infinite; nullopt encodes infinity.
using Index = std::optional<int>;

inline std::string index_to_string(const Index& idx) {
  return idx ? std::to_string(*idx) : std::string("inf");
}

Int factorial(int n);

}  // namespace wchoose
